#ifndef MHP_EXOTIC_HPP
#define MHP_EXOTIC_HPP

// Whole-variety invariants for central quotients G = SL(p)^m / Delta, with
// Delta the diagonally embedded center of order p.  Unlike every other group
// handled here, Hom(Z^r, G) is disconnected for r >= 2: besides the identity
// component there is a family of mutually homeomorphic extra components,
// counted by component_count, each one a torus power.

#include "mhp/rational_poly.hpp"

#include <gmpxx.h>

namespace mhp {

struct ExoticSpec {
    long p = 2;  // prime
    long m = 1;  // number of SL(p) factors, >= 1
    int r = 1;   // free abelian rank, >= 1

    void validate() const;  // throws std::invalid_argument
};

bool is_prime(long n);

// Number of non-identity components of Hom(Z^r, SL(p)^m / Delta):
// p^{(m-1)(r-2)} (p^r - 1)(p^{r-1} - 1) / (p^2 - 1).
// Evaluated in exact rationals (the power of p may have negative exponent);
// throws std::domain_error if the result is not a nonnegative integer.
mpz_class component_count(const ExoticSpec& spec);

// Mixed Hodge polynomial of the whole of Hom(Z^r, G), in (x, w):
// the identity-component contribution mu_rep(SL(p))^m plus component_count
// copies of the extra-component contribution prod_{j=2}^{p} (1 + x w^{j-1})^m.
RationalPoly mu_rep_exotic(const ExoticSpec& spec);

// Mixed Hodge polynomial of the whole character variety, in x: the extra
// components each collapse to a point, so this is mu_char(SL(p))^m plus the
// component count.
RationalPoly mu_char_exotic(const ExoticSpec& spec);

}  // namespace mhp

#endif
