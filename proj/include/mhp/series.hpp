#ifndef MHP_SERIES_HPP
#define MHP_SERIES_HPP

// Power series in one distinguished counting variable, truncated at a fixed
// order, with polynomial coefficients.  Used for plethystic-exponential
// recursions where the y^n coefficient is a polynomial in the remaining
// variables.

#include "mhp/rational_poly.hpp"

#include <vector>

namespace mhp {

class SeriesTruncation {
  public:
    // Zero series of the given order; coefficients live over coeff_vars.
    SeriesTruncation(VarList coeff_vars, unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const VarList& coeff_vars() const { return vars_; }

    const RationalPoly& operator[](unsigned n) const;
    void set(unsigned n, RationalPoly value);

    bool operator==(const SeriesTruncation& rhs) const = default;

    SeriesTruncation& operator+=(const SeriesTruncation& rhs);

  private:
    VarList vars_;
    std::vector<RationalPoly> coeffs_;  // index n holds the y^n coefficient
};

SeriesTruncation operator+(SeriesTruncation a, const SeriesTruncation& b);
// Cauchy product, truncated at min(order(a), order(b)).
SeriesTruncation operator*(const SeriesTruncation& a, const SeriesTruncation& b);

// Formal derivative d/dy: order drops by one.
SeriesTruncation series_derivative(const SeriesTruncation& s);

// exp of a series with zero constant term, via the recurrence
// n*e_n = sum_{k=1}^{n} k*s_k*e_{n-k} obtained from E' = s'E.  Throws
// std::domain_error if s has a nonzero y^0 coefficient.
SeriesTruncation series_exp(const SeriesTruncation& s);

}  // namespace mhp

#endif
