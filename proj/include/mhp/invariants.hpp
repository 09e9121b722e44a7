#ifndef MHP_INVARIANTS_HPP
#define MHP_INVARIANTS_HPP

// Mixed Hodge polynomials and their specializations for identity components
// of representation and character varieties of Z^r targets, evaluated as
// Weyl-class sums over a WeylClassTable.
//
// All structures here are Hodge-Tate, so two variable conventions coexist:
// the compressed pair (x, w) = (tuv, t^2uv) used internally, and the full
// (t, u, v) obtained by monomial expansion at the output boundary.

#include "mhp/rational_poly.hpp"
#include "mhp/weyl.hpp"

#include <string>
#include <vector>

namespace mhp {

// Mixed Hodge polynomial of the identity component of Hom(Z^r, G), in
// (x, w).  Evaluates (1/|W|) * prod_i (1 - w^{d_i}) * sum over classes of
// det(I + xA)^r / det(I - wA) by clearing the class denominators into a
// single fraction and dividing exactly once.  Throws std::domain_error if
// the division does not clear or a coefficient comes out non-integral,
// either of which signals a corrupted table.  Requires r >= 1.
RationalPoly mu_rep(const WeylClassTable& table, int r);

// Mixed Hodge polynomial of the identity component of the character variety,
// in x alone: (1/|W|) * sum of det(I + xA)^r.  Same integrality contract.
RationalPoly mu_char(const WeylClassTable& table, int r);

// Compactly supported mixed Hodge polynomial of the character-variety
// identity component, in (t, u, v):
// (t^{r dim T} / |W|) * sum of det(tuv I + A)^r.
RationalPoly mu_char_compact(const WeylClassTable& table, int r);

// Polynomial P with P(q) = number of F_q-points of the character-variety
// identity component (q any prime power):
// ((-1)^{r dim T} / |W|) * sum of det(A - xI)^r.  Also evaluates the
// mu_char_compact specialization t = -1, uv = x and throws std::logic_error
// if the two routes disagree.
RationalPoly counting_poly(const WeylClassTable& table, int r);

struct ClassFraction {
    RationalPoly numerator;    // det(I + xA)^r
    RationalPoly denominator;  // det(I - wA)
    mpz_class size;
};

struct EquivariantMu {
    RationalPoly series;  // truncated in total (x, w) degree
    unsigned order = 0;
    std::vector<ClassFraction> class_terms;  // merged classes, exact rational forms
    mpz_class group_order;
};

// Equivariant mixed Hodge series of the torus representation variety before
// passing to W-invariants: (1/|W|) * sum of det(I + xA)^r / det(I - wA) as
// a power series, truncated at the given total degree.
EquivariantMu equivariant_mu(const WeylClassTable& table, int r, unsigned order = 20);

// Monomial expansions between variable conventions.
RationalPoly expand_xw_to_tuv(const RationalPoly& p);  // x -> tuv, w -> t^2uv
RationalPoly expand_x_to_tuv(const RationalPoly& p);   // x -> tuv

// Specializations of a (t, u, v) polynomial.
RationalPoly poincare_poly(const RationalPoly& mu_tuv);  // u = v = 1, in t
RationalPoly e_polynomial(const RationalPoly& mu_tuv);   // t = -1, in (u, v)
mpz_class euler_characteristic(const RationalPoly& mu_tuv);  // t = -1, u = v = 1
mpz_class total_dimension(const RationalPoly& mu_tuv);       // t = u = v = 1

enum class InvariantKind {
    mu_rep,
    mu_char,
    mu_char_compact,
    counting_poly,
    equivariant_mu,
    poincare,
    e_poly,
    euler_char,
    total_dim,
};

enum class VariableMode { xw, tuv };

InvariantKind parse_invariant_kind(const std::string& text);
std::string invariant_kind_name(InvariantKind kind);
VariableMode parse_variable_mode(const std::string& text);
std::string variable_mode_name(VariableMode mode);

struct InvariantRequest {
    int rank_r = 1;
    InvariantKind kind = InvariantKind::mu_rep;
    VariableMode mode = VariableMode::tuv;
    unsigned series_order = 20;  // equivariant_mu only
};

// Evaluates a request against a group presented as an atom product,
// multiplying per-atom invariants.  Central-quotient (exotic) groups route
// through the whole-variety formulas; only mu_rep, mu_char, and the mu_rep
// specializations exist there, and other kinds throw std::invalid_argument.
// Specialization kinds (poincare, e_poly, euler_char, total_dim) apply to
// mu_rep.  The xw mode is rejected for kinds whose output does not live in
// (x, w).
RationalPoly assemble(const GroupDescriptor& group, const InvariantRequest& request);

}  // namespace mhp

#endif
