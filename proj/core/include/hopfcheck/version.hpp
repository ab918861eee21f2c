#pragma once

namespace hopfcheck {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hopfcheck
