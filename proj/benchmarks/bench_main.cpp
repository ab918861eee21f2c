// Microbenchmarks for the three hot paths: dimension-equation enumeration,
// character-ring search, and whole-dimension classification.

#include <benchmark/benchmark.h>

#include "hopfcheck/arithmetic.hpp"
#include "hopfcheck/fusion.hpp"
#include "hopfcheck/group.hpp"
#include "hopfcheck/typeprofile.hpp"
#include "hopfcheck/verdict.hpp"

namespace arith = hopfcheck::arith;
namespace fusion = hopfcheck::fusion;
namespace grp = hopfcheck::grp;
namespace profile = hopfcheck::profile;
namespace verdict = hopfcheck::verdict;

namespace {

void BM_EnumerateSolutions(benchmark::State& state) {
  const arith::i64 q = state.range(0);
  const auto pf = profile::make_profile(2, q);
  const auto degrees = profile::frobenius_degree_set(pf);
  for (auto _ : state) {
    auto sols = arith::enumerate_dimension_solutions(pf.dim(), 2, degrees);
    benchmark::DoNotOptimize(sols);
  }
}
BENCHMARK(BM_EnumerateSolutions)->Arg(5)->Arg(7)->Arg(11)->Arg(13);

void BM_ScreenTypes(benchmark::State& state) {
  const arith::i64 q = state.range(0);
  const auto pf = profile::make_profile(2, q);
  for (auto _ : state) {
    auto reports = profile::screen_types(pf, 2);
    benchmark::DoNotOptimize(reports);
  }
}
BENCHMARK(BM_ScreenTypes)->Arg(5)->Arg(7)->Arg(11)->Arg(13);

void BM_FusionSearchRefuted(benchmark::State& state) {
  const char* types[] = {"(1,2;4,3;5,2)", "(1,2;4,6;7,2)", "(1,11;4,22;11,1)"};
  const auto t = profile::AlgebraType::parse(types[state.range(0)]);
  const auto groups = grp::abelian_groups_of_order(t.g_order());
  for (auto _ : state) {
    auto res = fusion::search_consistent_table(t, groups.front());
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_FusionSearchRefuted)->Arg(0)->Arg(1)->Arg(2);

void BM_FusionSearchFeasible(benchmark::State& state) {
  const auto t = profile::AlgebraType::parse("(1,4;2,1)");
  const auto groups = grp::abelian_groups_of_order(4);
  for (auto _ : state) {
    for (const auto& g : groups) {
      auto res = fusion::search_consistent_table(t, g);
      benchmark::DoNotOptimize(res);
    }
  }
}
BENCHMARK(BM_FusionSearchFeasible);

void BM_ClassifySmall(benchmark::State& state) {
  const arith::i64 q = state.range(0);
  for (auto _ : state) {
    auto verdicts = verdict::classify_4q2(q);
    benchmark::DoNotOptimize(verdicts);
  }
}
BENCHMARK(BM_ClassifySmall)->Arg(5)->Arg(7)->Arg(11)->Arg(13);

void BM_ClassifyGeneral(benchmark::State& state) {
  for (auto _ : state) {
    auto verdicts = verdict::classify_p2q2(2, state.range(0));
    benchmark::DoNotOptimize(verdicts);
  }
}
BENCHMARK(BM_ClassifyGeneral)->Arg(17)->Arg(101)->Arg(1283);

}  // namespace

BENCHMARK_MAIN();
