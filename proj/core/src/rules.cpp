#include "hopfcheck/rules.hpp"

#include <algorithm>
#include <array>

#include "hopfcheck/errors.hpp"
#include "hopfcheck/trace.hpp"

namespace hopfcheck::rules {

namespace {

// clang-format off
const std::array<RuleInfo, 33> kCatalog{{
  {"nichols-zoeller",
   "Nichols-Zoeller freeness: the dimension of a Hopf subalgebra divides the dimension "
   "of the ambient Hopf algebra; in particular |G(H*)| divides dim H."},
  {"frobenius-type",
   "The algebra is of Frobenius type: irreducible degrees divide the dimension, and any "
   "divisor d >= pq satisfies d^2 >= dim, leaving no room beside the trivial module, so "
   "degrees lie in {1, p, p^2, q}."},
  {"nontrivial-grouplike",
   "Imported: a semisimple Hopf algebra of dimension p^2 q^2 has a nontrivial "
   "one-dimensional representation, so |G(H*)| != 1 (solvability of the representation "
   "category, Etingof-Nikshych-Ostrik)."},
  {"dimension-equation",
   "Sum of squared degrees: dim H = |G(H*)| + a p^2 + b p^4 + c q^2, where a, b, c count "
   "the irreducibles of degree p, p^2, q."},
  {"grouplike-count-bound",
   "|G(H*)| divides n (deg chi)^2, where n is the number of non-isomorphic irreducibles "
   "of degree deg chi."},
  {"stabilizer-divides-degsq",
   "The stabilizer G[chi] = {g in G(H*) : g chi = chi} is a subgroup of order dividing "
   "(deg chi)^2."},
  {"stabilizer-residual",
   "chi chi^* decomposes as the sum over G[chi] plus higher-degree constituents, so "
   "(deg chi)^2 - |G[chi]| must be a bounded nonnegative combination of admissible "
   "constituent degrees, for some subgroup order |G[chi]| dividing both |G(H*)| and "
   "(deg chi)^2."},
  {"grouplike-multiplicity",
   "For grouplike g: m(g, chi psi) = 1 if psi = chi^* g and m(g, chi psi) = 0 otherwise."},
  {"frobenius-reciprocity",
   "m(chi, psi omega) = m(psi^*, omega chi^*) = m(psi, chi omega^*) for irreducible "
   "characters of a semisimple Hopf algebra."},
  {"duality-symmetry",
   "m(chi, psi) = m(chi^*, psi^*); duality is an anti-automorphism of the character ring."},
  {"degree-accounting",
   "deg(chi) deg(psi) = sum over constituents omega of m(omega, chi psi) deg(omega)."},
  {"translation-equivariance",
   "Grouplike translation preserves multiplicities: m(omega, (g chi) psi) = "
   "m(g^{-1} omega, chi psi) and m(omega, chi (psi g)) = m(omega g^{-1}, chi psi)."},
  {"orbit-stabilizer",
   "Orbits of the G(H*)-action on a degree class have length |G(H*)| / |G[chi]|; lengths "
   "divide the group order and sum to the class size."},
  {"isotypic-product-reducible",
   "If every character of a degree class has the same nontrivial stabilizer subgroup, no "
   "product of two class members is irreducible."},
  {"closure-divisibility",
   "A character set closed under duality and product constituents spans a standard "
   "subalgebra; the matching quotient Hopf algebra has dimension equal to the sum of "
   "squared degrees, which divides dim H (Nichols-Zoeller)."},
  {"p-part-quotient",
   "The degree-1, p and p^2 characters span a standard subalgebra; the corresponding "
   "quotient dimension |G(H*)| + a p^2 + b p^4 divides dim H."},
  {"two-part-quotient",
   "With no degree-3 constituents available, every degree-2 character has stabilizer of "
   "order 2; the grouplikes and degree-2 characters span a standard subalgebra and "
   "|G(H*)| + 4a divides dim H."},
  {"no-solution",
   "Certificate that dim = offset + c * square has no solution with a nonnegative "
   "integer c."},
  {"empty-enumeration",
   "Certificate that the dimension equation admits no type solution under the stated "
   "pins."},
  {"masuoka-p2",
   "Masuoka: a semisimple Hopf algebra of dimension p^2 is a group algebra of Z/p^2 or "
   "Z/p x Z/p; a quotient of dimension p^2 embeds a grouplike group of order p^2 into "
   "the dual."},
  {"zhu-prime",
   "Zhu: a semisimple Hopf algebra of prime dimension is a group algebra."},
  {"kobayashi-normal",
   "Kobayashi: a Hopf subalgebra whose index is the smallest prime dividing the ambient "
   "dimension is normal."},
  {"subalgebra-semisolvable",
   "A Hopf subalgebra of dimension p q^2 has index p, the smallest prime dividing dim H; "
   "it is normal (Kobayashi) with trivial quotient (Zhu), and carries its own normal "
   "series, so the algebra is lower semisolvable."},
  {"quotient-semisolvable",
   "A quotient Hopf algebra of dimension p q^2 dualizes to a Hopf subalgebra of H* of "
   "index p; H* is then lower semisolvable, hence H is upper semisolvable."},
  {"grouplike-normality",
   "When every large-degree simple subcoalgebra is stable under two-sided grouplike "
   "multiplication, kG(H*) is normal in the Hopf subalgebra they generate; by dimension "
   "count that subalgebra is all of H*, and the quotient is trivial (Masuoka), so H* is "
   "lower semisolvable and H upper semisolvable."},
  {"semisolvable-or-biproduct",
   "Either a normal chain through the p q^2 subalgebra exists (semisolvable) or "
   "gcd(|G(H)|, |G(H*)|) = p^2 and the algebra is a Radford biproduct R # kG with "
   "|G| = p^2 and dim R = q^2."},
  {"biproduct-gcd",
   "Radford's characterization: Hopf algebra maps iota: kG -> H and pi: H -> kG with "
   "pi iota invertible force H = R # kG; gcd(|G(H)|, |G(H*)|) = p^2 supplies both maps "
   "via Sylow subgroups and a coinvariant dimension count."},
  {"coideal-obstruction",
   "The q^2-dimensional coinvariant space decomposes into irreducible left coideals of "
   "dimension 1, p, p^2 (and possibly a q-order grouplike span), forcing q^2 = 1 + m p "
   "or q^2 = q + n p with m, n >= 1; if p divides neither q^2 - 1 nor q^2 - q, the "
   "biproduct branch is impossible and the algebra is semisolvable."},
  {"dual-group-algebra",
   "|G(H*)| = dim H forces H* to be spanned by grouplikes, i.e. H is a dual group "
   "algebra."},
  {"dim36-classified",
   "Imported classification at dimension 36: every semisimple Hopf algebra of dimension "
   "36 is upper or lower semisolvable."},
  {"product-associativity",
   "Multiplication of characters is associative; expanding (ab)c and a(bc) through "
   "their irreducible constituents must yield the same multiplicity for every "
   "character."},
  {"search-branch",
   "Exhaustive case split: the backtracking search explores every structure assignment "
   "and multiplicity choice not excluded by a prior rule."},
  {"symmetry-canonical",
   "Characters within a degree class are interchangeable until constrained; exploring "
   "one canonical representative per relabeling orbit preserves completeness."},
}};
// clang-format on

}  // namespace

const RuleInfo& rule(const std::string& id) {
  for (const auto& r : kCatalog)
    if (r.id == id) return r;
  fail("UnknownRule", "no rule with id '" + id + "'");
}

bool has_rule(const std::string& id) {
  return std::any_of(kCatalog.begin(), kCatalog.end(),
                     [&](const RuleInfo& r) { return r.id == id; });
}

std::vector<std::string> all_rule_ids() {
  std::vector<std::string> ids;
  for (const auto& r : kCatalog) ids.push_back(r.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace hopfcheck::rules

namespace hopfcheck::trace {

TraceStep make_step(const std::string& rule_id, std::string detail,
                    std::map<std::string, std::string> data) {
  const auto& info = rules::rule(rule_id);
  return TraceStep{info.id, info.citation, std::move(detail), std::move(data)};
}

}  // namespace hopfcheck::trace
