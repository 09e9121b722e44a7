#ifndef MHP_RATIONAL_POLY_HPP
#define MHP_RATIONAL_POLY_HPP

// Sparse multivariate polynomials with exact rational coefficients.
//
// A polynomial carries its own ordered variable list; all binary operations
// require both operands to declare the same list and throw otherwise.  Terms
// are kept in a canonical order: ascending total degree, ties broken by the
// declared variable precedence (higher power of an earlier variable first).
// The term map never stores a zero coefficient, so operator== on the map is
// semantic equality and printing is deterministic.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mhp {

using Exponents = std::vector<unsigned>;
using VarList = std::vector<std::string>;

unsigned total_degree(const Exponents& e);

// Strict weak order used for the term map: graded, with ties resolved so
// that within one degree the term with the larger power of the earliest
// variable sorts first.  Admissible as a monomial order, so the last map
// entry is a valid leading term for exact division.
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

using TermMap = std::map<Exponents, mpq_class, TermOrder>;

class RationalPoly {
  public:
    RationalPoly() = default;
    explicit RationalPoly(VarList vars);

    static RationalPoly zero(VarList vars);
    static RationalPoly constant(VarList vars, const mpq_class& c);
    static RationalPoly variable(const VarList& vars, const std::string& name);
    static RationalPoly monomial(VarList vars, Exponents exps, const mpq_class& c);

    const VarList& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (coefficient of the all-zero exponent vector).
    mpq_class constant_term() const;
    mpq_class coefficient(const Exponents& e) const;
    unsigned degree() const;                    // total degree, 0 for the zero poly
    unsigned var_degree(std::size_t var_index) const;
    std::size_t term_count() const { return terms_.size(); }
    bool has_integer_coefficients() const;

    RationalPoly& operator+=(const RationalPoly& rhs);
    RationalPoly& operator-=(const RationalPoly& rhs);
    RationalPoly& operator*=(const RationalPoly& rhs);
    RationalPoly operator-() const;

    RationalPoly& operator*=(const mpq_class& c);
    RationalPoly& operator/=(const mpq_class& c);

    bool operator==(const RationalPoly& rhs) const = default;

    // Adds c * vars^exps in place.
    void add_term(const Exponents& exps, const mpq_class& c);

    // f(vars^k): multiplies every exponent by k.  No re-expansion happens,
    // so this is exact and cheap.
    RationalPoly scale_exponents(unsigned k) const;

    // Drops terms of total degree > bound.
    RationalPoly truncate_total_degree(unsigned bound) const;
    // Drops terms whose exponent of the given variable exceeds bound.
    RationalPoly truncate_var_degree(std::size_t var_index, unsigned bound) const;

    mpq_class eval(const std::vector<mpq_class>& point) const;

  private:
    VarList vars_;
    TermMap terms_;
};

RationalPoly operator+(RationalPoly a, const RationalPoly& b);
RationalPoly operator-(RationalPoly a, const RationalPoly& b);
RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator*(RationalPoly a, const mpq_class& c);
RationalPoly operator*(const mpq_class& c, RationalPoly a);

RationalPoly pow(const RationalPoly& base, unsigned exponent);

// Exact division: returns q with a == q * b.  Throws std::domain_error if b
// is zero or does not divide a; the caller relying on a clearing division is
// asserting a structural fact, so failure means corrupted input.
RationalPoly div_exact(const RationalPoly& a, const RationalPoly& b);

// Substitutes bindings[i] for variable i of p.  Every binding must share one
// target variable list; the result lives over that list.
RationalPoly substitute(const RationalPoly& p, const std::vector<RationalPoly>& bindings);

// Canonical text form, e.g. "1 + 3*x^2 + 3*x*w - 1/2*w^3".  The zero
// polynomial prints as "0".
std::string to_plain(const RationalPoly& p);
// LaTeX form of the same ordering, e.g. "1 + 3x^{2} + 3xw - \frac{1}{2}w^{3}".
std::string to_latex(const RationalPoly& p);

// Inverse of to_plain on canonical text.  Accepts any term order and
// repeated monomials (they accumulate); throws std::invalid_argument on
// malformed input or unknown variable names.
RationalPoly parse_poly(const VarList& vars, const std::string& text);

}  // namespace mhp

#endif
