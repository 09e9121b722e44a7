#include "mhp/exotic.hpp"

#include "mhp/invariants.hpp"
#include "mhp/weyl.hpp"

#include <stdexcept>

namespace mhp {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void ExoticSpec::validate() const {
    if (!is_prime(p)) throw std::invalid_argument("central quotient requires a prime p");
    if (m < 1) throw std::invalid_argument("central quotient requires m >= 1");
    if (r < 1) throw std::invalid_argument("central quotient requires r >= 1");
}

mpz_class component_count(const ExoticSpec& spec) {
    spec.validate();
    const mpq_class p(spec.p);
    // p^{(m-1)(r-2)} can carry a negative exponent (r = 1); the count is
    // still rational and must collapse to a nonnegative integer.
    long e = (spec.m - 1) * (static_cast<long>(spec.r) - 2);
    mpq_class power(1);
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) power *= p;
    if (e < 0) power = 1 / power;
    auto p_pow = [&p](long k) {
        mpq_class v(1);
        for (long i = 0; i < k; ++i) v *= p;
        return v;
    };
    mpq_class count = power * (p_pow(spec.r) - 1) * (p_pow(spec.r - 1) - 1) / (p * p - 1);
    if (count.get_den() != 1 || count < 0)
        throw std::domain_error("component count did not evaluate to a nonnegative integer");
    return count.get_num();
}

RationalPoly mu_rep_exotic(const ExoticSpec& spec) {
    spec.validate();
    const VarList xw{"x", "w"};
    const RationalPoly one = RationalPoly::constant(xw, 1);
    const WeylClassTable sl_table = symmetric_group_table(static_cast<int>(spec.p), true);
    RationalPoly identity_part = pow(mu_rep(sl_table, spec.r), static_cast<unsigned>(spec.m));
    // Each extra component is a product of m compact-group factors whose
    // mixed Hodge polynomial is prod_{j=2}^{p} (1 + x w^{j-1}).
    RationalPoly component = one;
    for (long j = 2; j <= spec.p; ++j)
        component *= one + RationalPoly::monomial(xw, {1, static_cast<unsigned>(j - 1)}, 1);
    component = pow(component, static_cast<unsigned>(spec.m));
    return identity_part + mpq_class(component_count(spec)) * component;
}

RationalPoly mu_char_exotic(const ExoticSpec& spec) {
    spec.validate();
    const WeylClassTable sl_table = symmetric_group_table(static_cast<int>(spec.p), true);
    RationalPoly identity_part = pow(mu_char(sl_table, spec.r), static_cast<unsigned>(spec.m));
    return identity_part +
           RationalPoly::constant(identity_part.vars(), mpq_class(component_count(spec)));
}

}  // namespace mhp
