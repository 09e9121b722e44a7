#include "mhp/series.hpp"

#include <stdexcept>

namespace mhp {

SeriesTruncation::SeriesTruncation(VarList coeff_vars, unsigned order) : vars_(std::move(coeff_vars)) {
    coeffs_.assign(order + 1, RationalPoly::zero(vars_));
}

const RationalPoly& SeriesTruncation::operator[](unsigned n) const {
    if (n >= coeffs_.size()) throw std::out_of_range("series coefficient beyond truncation order");
    return coeffs_[n];
}

void SeriesTruncation::set(unsigned n, RationalPoly value) {
    if (n >= coeffs_.size()) throw std::out_of_range("series coefficient beyond truncation order");
    if (value.vars() != vars_) throw std::invalid_argument("coefficient over wrong variable list");
    coeffs_[n] = std::move(value);
}

SeriesTruncation& SeriesTruncation::operator+=(const SeriesTruncation& rhs) {
    if (vars_ != rhs.vars_) throw std::invalid_argument("series over different variable lists");
    if (coeffs_.size() > rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
    return *this;
}

SeriesTruncation operator+(SeriesTruncation a, const SeriesTruncation& b) {
    a += b;
    return a;
}

SeriesTruncation operator*(const SeriesTruncation& a, const SeriesTruncation& b) {
    if (a.coeff_vars() != b.coeff_vars())
        throw std::invalid_argument("series over different variable lists");
    unsigned order = std::min(a.order(), b.order());
    SeriesTruncation r(a.coeff_vars(), order);
    for (unsigned n = 0; n <= order; ++n) {
        RationalPoly c = RationalPoly::zero(a.coeff_vars());
        for (unsigned k = 0; k <= n; ++k) c += a[k] * b[n - k];
        r.set(n, std::move(c));
    }
    return r;
}

SeriesTruncation series_derivative(const SeriesTruncation& s) {
    if (s.order() == 0) throw std::domain_error("derivative of an order-0 truncation");
    SeriesTruncation r(s.coeff_vars(), s.order() - 1);
    for (unsigned n = 0; n + 1 <= s.order(); ++n) r.set(n, s[n + 1] * mpq_class(n + 1));
    return r;
}

SeriesTruncation series_exp(const SeriesTruncation& s) {
    if (!s[0].is_zero()) throw std::domain_error("series_exp requires zero constant term");
    SeriesTruncation e(s.coeff_vars(), s.order());
    e.set(0, RationalPoly::constant(s.coeff_vars(), 1));
    for (unsigned n = 1; n <= s.order(); ++n) {
        RationalPoly acc = RationalPoly::zero(s.coeff_vars());
        for (unsigned k = 1; k <= n; ++k) acc += mpq_class(k) * (s[k] * e[n - k]);
        acc /= mpq_class(n);
        e.set(n, std::move(acc));
    }
    return e;
}

}  // namespace mhp
