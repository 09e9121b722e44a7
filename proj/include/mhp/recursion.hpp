#ifndef MHP_RECURSION_HPP
#define MHP_RECURSION_HPP

// Rank recursions for the GL(n) invariants, independent of the Weyl class
// sums.  Three routes to the same polynomials:
//   1. a cofactor recursion in n that divides each window product
//      prod_{i=n-k+1}^{n} (1 - w^i) by (1 - w^k) before multiplying,
//   2. the same recursion with the division applied to the whole term
//      instead (the two are algebraically identical; both are exposed so
//      tests can confirm that),
//   3. a plethystic exponential whose y^n coefficient recovers the rank-n
//      invariant after clearing the denominator product.
// Every route is compared against the closed-form class sums in the tests.

#include "mhp/rational_poly.hpp"
#include "mhp/series.hpp"

#include <optional>
#include <utility>

namespace mhp {

// Identity-component mixed Hodge polynomial of Hom(Z^r, GL(n)) in (x, w),
// by the divided-cofactor recursion (route 1).
RationalPoly mu_rep_gl_recursive(int n, int r);

// Same value by the whole-term-division recursion (route 2).
RationalPoly mu_rep_gl_recursive_term_division(int n, int r);

// Character-variety polynomial of GL(n) in x, by the rank recursion
// nu_n = (1/n) sum_k (1 - (-x)^k)^r nu_{n-k}.
RationalPoly mu_char_gl_recursive(int n, int r);

// Character-variety polynomial of SL(n) in x, as the exact quotient of the
// GL(n) polynomial by (1 + x)^r.  Throws std::domain_error if the division
// does not clear.
RationalPoly mu_char_sl(int n, int r);

// PE(f * y) = exp(sum_{k>=1} f(vars^k) y^k / k) truncated at the given
// order in y.  If var_cap = (index, bound) is present, every coefficient is
// truncated to that degree bound in the named variable after each step;
// callers passing an f that is itself a truncated series in that variable
// get coefficients valid modulo the next power.
SeriesTruncation plethystic_exp(const RationalPoly& f, unsigned order,
                                std::optional<std::pair<std::size_t, unsigned>> var_cap = {});

// Route 3 for the two GL invariants: the representation-variety polynomial
// needs a truncated geometric series in w inside f, the character-variety
// one is exact.
RationalPoly mu_rep_gl_via_pe(int n, int r);
RationalPoly mu_char_gl_via_pe(int n, int r);

}  // namespace mhp

#endif
