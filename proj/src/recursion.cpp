#include "mhp/recursion.hpp"

#include <stdexcept>
#include <vector>

namespace mhp {

namespace {

const VarList kXW{"x", "w"};
const VarList kX{"x"};
const VarList kZW{"z", "w"};
const VarList kZ{"z"};

void require_args(int n, int r) {
    if (n < 0) throw std::invalid_argument("recursion requires n >= 0");
    if (r < 1) throw std::invalid_argument("recursion requires r >= 1");
}

// (1 - (-x)^k)^r
RationalPoly signed_binomial_factor(const RationalPoly& x, unsigned k, int r) {
    const RationalPoly one = RationalPoly::constant(x.vars(), 1);
    return pow(one - pow(-x, k), static_cast<unsigned>(r));
}

// prod_{i=n-k+1}^{n} (1 - w^i)
RationalPoly window_product(const RationalPoly& w, int n, int k) {
    const RationalPoly one = RationalPoly::constant(w.vars(), 1);
    RationalPoly prod = one;
    for (int i = n - k + 1; i <= n; ++i) prod *= one - pow(w, static_cast<unsigned>(i));
    return prod;
}

}  // namespace

RationalPoly mu_rep_gl_recursive(int n, int r) {
    require_args(n, r);
    const RationalPoly x = RationalPoly::variable(kXW, "x");
    const RationalPoly w = RationalPoly::variable(kXW, "w");
    const RationalPoly one = RationalPoly::constant(kXW, 1);
    std::vector<RationalPoly> mu{one};
    for (int j = 1; j <= n; ++j) {
        RationalPoly acc = RationalPoly::zero(kXW);
        for (int k = 1; k <= j; ++k) {
            // The window of k consecutive exponents contains exactly one
            // multiple of k, so the cofactor division clears.
            RationalPoly cofactor =
                div_exact(window_product(w, j, k), one - pow(w, static_cast<unsigned>(k)));
            acc += signed_binomial_factor(x, static_cast<unsigned>(k), r) * cofactor * mu[j - k];
        }
        acc /= mpq_class(j);
        mu.push_back(std::move(acc));
    }
    return mu[n];
}

RationalPoly mu_rep_gl_recursive_term_division(int n, int r) {
    require_args(n, r);
    const RationalPoly x = RationalPoly::variable(kXW, "x");
    const RationalPoly w = RationalPoly::variable(kXW, "w");
    const RationalPoly one = RationalPoly::constant(kXW, 1);
    std::vector<RationalPoly> mu{one};
    for (int j = 1; j <= n; ++j) {
        RationalPoly acc = RationalPoly::zero(kXW);
        for (int k = 1; k <= j; ++k) {
            RationalPoly term = signed_binomial_factor(x, static_cast<unsigned>(k), r) *
                                window_product(w, j, k) * mu[j - k];
            acc += div_exact(term, one - pow(w, static_cast<unsigned>(k)));
        }
        acc /= mpq_class(j);
        mu.push_back(std::move(acc));
    }
    return mu[n];
}

RationalPoly mu_char_gl_recursive(int n, int r) {
    require_args(n, r);
    const RationalPoly x = RationalPoly::variable(kX, "x");
    const RationalPoly one = RationalPoly::constant(kX, 1);
    std::vector<RationalPoly> nu{one};
    for (int j = 1; j <= n; ++j) {
        RationalPoly acc = RationalPoly::zero(kX);
        for (int k = 1; k <= j; ++k)
            acc += signed_binomial_factor(x, static_cast<unsigned>(k), r) * nu[j - k];
        acc /= mpq_class(j);
        nu.push_back(std::move(acc));
    }
    return nu[n];
}

RationalPoly mu_char_sl(int n, int r) {
    require_args(n, r);
    if (n < 1) throw std::invalid_argument("mu_char_sl requires n >= 1");
    const RationalPoly x = RationalPoly::variable(kX, "x");
    const RationalPoly one = RationalPoly::constant(kX, 1);
    return div_exact(mu_char_gl_recursive(n, r), pow(one + x, static_cast<unsigned>(r)));
}

SeriesTruncation plethystic_exp(const RationalPoly& f, unsigned order,
                                std::optional<std::pair<std::size_t, unsigned>> var_cap) {
    auto capped = [&var_cap](RationalPoly p) {
        if (var_cap) p = p.truncate_var_degree(var_cap->first, var_cap->second);
        return p;
    };
    SeriesTruncation s(f.vars(), order);
    for (unsigned k = 1; k <= order; ++k) {
        RationalPoly term = capped(f.scale_exponents(k));
        term /= mpq_class(k);
        s.set(k, std::move(term));
    }
    if (!var_cap) return series_exp(s);
    // Same recurrence as series_exp, truncating after every product so the
    // capped variable's degree stays bounded.
    SeriesTruncation e(f.vars(), order);
    e.set(0, RationalPoly::constant(f.vars(), 1));
    for (unsigned n = 1; n <= order; ++n) {
        RationalPoly acc = RationalPoly::zero(f.vars());
        for (unsigned k = 1; k <= n; ++k) acc += mpq_class(k) * capped(s[k] * e[n - k]);
        acc /= mpq_class(n);
        e.set(n, std::move(acc));
    }
    return e;
}

RationalPoly mu_rep_gl_via_pe(int n, int r) {
    require_args(n, r);
    const RationalPoly z = RationalPoly::variable(kZW, "z");
    const RationalPoly w = RationalPoly::variable(kZW, "w");
    const RationalPoly one = RationalPoly::constant(kZW, 1);
    // Truncated geometric series standing in for 1/(1 - w); the bound must
    // dominate the w-degree of the final polynomial, and the denominator
    // product for rank n has degree n(n+1)/2.
    const unsigned bound = static_cast<unsigned>(n) * (static_cast<unsigned>(n) + 1) / 2;
    RationalPoly geometric = RationalPoly::zero(kZW);
    for (unsigned i = 0; i <= bound; ++i) geometric += RationalPoly::monomial(kZW, {0, i}, 1);
    RationalPoly f = pow(one - z, static_cast<unsigned>(r)) * geometric;
    SeriesTruncation pe = plethystic_exp(f, static_cast<unsigned>(n), {{1, bound}});
    RationalPoly phi_n = pe[static_cast<unsigned>(n)];
    RationalPoly cleared = phi_n;
    for (int i = 1; i <= n; ++i)
        cleared *= one - pow(w, static_cast<unsigned>(i));
    cleared = cleared.truncate_var_degree(1, bound);
    // Map (z, w) to (-x, w).
    const RationalPoly x_target = RationalPoly::variable(kXW, "x");
    const RationalPoly w_target = RationalPoly::variable(kXW, "w");
    return substitute(cleared, {-x_target, w_target});
}

RationalPoly mu_char_gl_via_pe(int n, int r) {
    require_args(n, r);
    const RationalPoly z = RationalPoly::variable(kZ, "z");
    const RationalPoly one = RationalPoly::constant(kZ, 1);
    SeriesTruncation pe = plethystic_exp(pow(one - z, static_cast<unsigned>(r)),
                                         static_cast<unsigned>(n));
    const RationalPoly x_target = RationalPoly::variable(kX, "x");
    return substitute(pe[static_cast<unsigned>(n)], {-x_target});
}

}  // namespace mhp
