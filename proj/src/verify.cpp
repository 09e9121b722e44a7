#include "mhp/verify.hpp"

#include "mhp/exotic.hpp"
#include "mhp/invariants.hpp"
#include "mhp/recursion.hpp"
#include "mhp/weyl.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace mhp {

namespace {

const VarList kXW{"x", "w"};
const VarList kX{"x"};

RationalPoly p_xw(const std::string& text) { return parse_poly(kXW, text); }

RationalPoly scaled(const mpq_class& c, RationalPoly p) {
    p *= c;
    return p;
}

}  // namespace

RationalPoly sl2_rep_reference(int r) {
    const unsigned ur = static_cast<unsigned>(r);
    return scaled(mpq_class(1, 2), p_xw("1 + w") * pow(p_xw("1 + x"), ur) +
                                       p_xw("1 - w") * pow(p_xw("1 - x"), ur));
}

RationalPoly sl3_rep_reference(int r) {
    const unsigned ur = static_cast<unsigned>(r);
    return scaled(mpq_class(1, 6), p_xw("1 + 2*w + 2*w^2 + w^3") * pow(p_xw("1 + x"), 2 * ur)) +
           scaled(mpq_class(1, 2), p_xw("1 - w^3") * pow(p_xw("1 - x^2"), ur)) +
           scaled(mpq_class(1, 3), p_xw("1 - w - w^2 + w^3") * pow(p_xw("1 - x + x^2"), ur));
}

RationalPoly sl4_rep_reference(int r) {
    // Each class factor in x has degree equal to the torus rank (three), and
    // the two cycle shapes (2,2) and (4) force (1-x)(1-x^2) and
    // 1 - x + x^2 - x^3 respectively.
    const unsigned ur = static_cast<unsigned>(r);
    RationalPoly t1 = scaled(mpq_class(1, 24), p_xw("1 + w") * p_xw("1 + w + w^2") *
                                                   p_xw("1 + w + w^2 + w^3") *
                                                   pow(p_xw("1 + x"), 3 * ur));
    RationalPoly t2 = scaled(mpq_class(1, 4), p_xw("1 + w + w^2") * p_xw("1 - w^4") *
                                                  pow(p_xw("1 + x"), ur) *
                                                  pow(p_xw("1 - x^2"), ur));
    RationalPoly t3 = scaled(mpq_class(1, 8), p_xw("1 - w^3") * p_xw("1 - w + w^2 - w^3") *
                                                  pow(p_xw("1 - x"), ur) *
                                                  pow(p_xw("1 - x^2"), ur));
    RationalPoly t4 = scaled(mpq_class(1, 3), p_xw("1 - w^2") * p_xw("1 - w^4") *
                                                  pow(p_xw("1 + x^3"), ur));
    RationalPoly t5 = scaled(mpq_class(1, 4), p_xw("1 - w") * p_xw("1 - w^2") * p_xw("1 - w^3") *
                                                  pow(p_xw("1 - x + x^2 - x^3"), ur));
    return t1 + t2 + t3 + t4 + t5;
}

RationalPoly sp4_rep_reference(int r) {
    const unsigned ur = static_cast<unsigned>(r);
    RationalPoly t1 = scaled(mpq_class(1, 8), p_xw("1 + w") * p_xw("1 + w + w^2 + w^3") *
                                                  pow(p_xw("1 + x"), 2 * ur));
    RationalPoly t2 = scaled(mpq_class(1, 4), pow(p_xw("1 - w^2"), 2) * pow(p_xw("1 + x^2"), ur));
    RationalPoly t3 = scaled(mpq_class(1, 8), p_xw("1 - w") * p_xw("1 - w + w^2 - w^3") *
                                                  pow(p_xw("1 - x"), 2 * ur));
    RationalPoly t4 = scaled(mpq_class(1, 2), p_xw("1 - w^4") * pow(p_xw("1 - x^2"), ur));
    return t1 + t2 + t3 + t4;
}

namespace {

struct Checker {
    SuiteResult result;

    explicit Checker(std::string name) { result.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++result.checks;
        if (!ok) result.failures.push_back(what);
    }
};

// A cap of zero keeps the suite default; a positive cap can only shrink it.
int capped(int fallback, int cap) { return cap > 0 && cap < fallback ? cap : fallback; }

// (char poly text -> class size text) after merging; the class data two
// tables share exactly when this map matches.
std::map<std::string, std::string> class_signature(const WeylClassTable& table) {
    const VarList lambda_vars{"lambda"};
    const RationalPoly lambda = RationalPoly::variable(lambda_vars, "lambda");
    std::map<std::string, std::string> sig;
    for (const auto& c : merge_equal_char_polys(table).classes)
        sig[to_plain(char_poly(c.pattern, Sign::minus, lambda))] = c.size.get_str();
    return sig;
}

SuiteResult suite_weyl(SuiteCaps caps) {
    Checker ck("weyl");
    const VarList lambda_vars{"lambda"};
    const RationalPoly lambda = RationalPoly::variable(lambda_vars, "lambda");
    const RationalPoly one = RationalPoly::constant(lambda_vars, 1);
    for (int n = 1; n <= capped(5, caps.max_n); ++n) {
        for (bool sl : {false, true}) {
            WeylClassTable combinatorial = symmetric_group_table(n, sl);
            WeylClassTable brute =
                brute_force_table(sl ? WeylFamily::symmetric_sl : WeylFamily::symmetric_gl, n);
            std::ostringstream what;
            what << (sl ? "SL" : "GL") << "(" << n << ") class signature vs enumeration";
            ck.check(class_signature(combinatorial) == class_signature(brute), what.str());
        }
    }
    for (int n = 1; n <= capped(4, caps.max_n); ++n) {
        WeylClassTable combinatorial = hyperoctahedral_table(n);
        WeylClassTable brute = brute_force_table(WeylFamily::hyperoctahedral, n);
        std::ostringstream what;
        what << "Sp(" << 2 * n << ") class signature vs enumeration";
        ck.check(class_signature(combinatorial) == class_signature(brute), what.str());
    }
    for (int n = 1; n <= capped(10, caps.max_n); ++n) {
        mpz_class total(0);
        for (const auto& sigma : partitions_of(n)) total += symmetric_group_class_size(sigma);
        ck.check(total == factorial(n), "partition class sizes sum to n! at n=" + std::to_string(n));
    }
    // A positive cycle fixes a vector, and only then does det(I - A) vanish.
    for (int n = 1; n <= capped(4, caps.max_n); ++n) {
        for (const auto& c : hyperoctahedral_table(n).classes) {
            mpq_class at_one = char_poly(c.pattern, Sign::minus, lambda).eval({mpq_class(1)});
            ck.check((at_one == 0) == !c.pattern.positive_cycles.empty(),
                     "det(I - A) vanishing at 1 tracks positive cycles");
        }
    }
    for (int n = 1; n <= capped(5, caps.max_n); ++n) {
        for (const auto& sigma : partitions_of(n)) {
            CyclePattern gl{sigma, {}, 0};
            CyclePattern sl{sigma, {}, 1};
            ck.check(char_poly(sl, Sign::minus, lambda) * (one - lambda) ==
                         char_poly(gl, Sign::minus, lambda),
                     "reduced char poly times (1 - lambda) recovers the full one");
        }
    }
    return ck.result;
}

SuiteResult suite_golden(SuiteCaps caps) {
    Checker ck("golden");
    // Matrix size gates the fixed references when a cap is set.
    const int nmax_fixed = capped(4, caps.max_n);
    for (int r = 1; r <= capped(3, caps.max_r); ++r) {
        if (nmax_fixed >= 2)
            ck.check(mu_rep(symmetric_group_table(2, true), r) == sl2_rep_reference(r),
                     "SL(2) closed form at r=" + std::to_string(r));
        if (nmax_fixed >= 3)
            ck.check(mu_rep(symmetric_group_table(3, true), r) == sl3_rep_reference(r),
                     "SL(3) closed form at r=" + std::to_string(r));
        if (nmax_fixed >= 4) {
            ck.check(mu_rep(symmetric_group_table(4, true), r) == sl4_rep_reference(r),
                     "SL(4) closed form at r=" + std::to_string(r));
            ck.check(mu_rep(hyperoctahedral_table(2), r) == sp4_rep_reference(r),
                     "Sp(4) closed form at r=" + std::to_string(r));
        }
    }
    // At r = 1 the representation variety is the group itself, whose mixed
    // Hodge polynomial is prod_j (1 + x w^{j-1}) over j = 2..n.
    for (int n = 2; n <= capped(6, caps.max_n); ++n) {
        RationalPoly expected = RationalPoly::constant(kXW, 1);
        for (int j = 2; j <= n; ++j)
            expected *= RationalPoly::constant(kXW, 1) +
                        RationalPoly::monomial(kXW, {1, static_cast<unsigned>(j - 1)}, 1);
        ck.check(mu_rep(symmetric_group_table(n, true), 1) == expected,
                 "SL(" + std::to_string(n) + ") at r=1 is the group's own invariant");
    }
    return ck.result;
}

SuiteResult suite_recursion(SuiteCaps caps) {
    Checker ck("recursion");
    for (int n = 0; n <= capped(6, caps.max_n); ++n) {
        for (int r = 1; r <= capped(3, caps.max_r); ++r) {
            RationalPoly closed = n == 0 ? RationalPoly::constant(kXW, 1)
                                         : mu_rep(symmetric_group_table(n, false), r);
            std::string tag = " GL(" + std::to_string(n) + ") r=" + std::to_string(r);
            ck.check(mu_rep_gl_recursive(n, r) == closed, "cofactor recursion" + tag);
            ck.check(mu_rep_gl_recursive_term_division(n, r) == closed,
                     "term-division recursion" + tag);
            ck.check(mu_rep_gl_via_pe(n, r) == closed, "plethystic route" + tag);
            RationalPoly closed_char = n == 0 ? RationalPoly::constant(kX, 1)
                                              : mu_char(symmetric_group_table(n, false), r);
            ck.check(mu_char_gl_recursive(n, r) == closed_char, "character recursion" + tag);
            ck.check(mu_char_gl_via_pe(n, r) == closed_char, "character plethystic route" + tag);
            if (n >= 1)
                ck.check(mu_char_sl(n, r) == mu_char(symmetric_group_table(n, true), r),
                         "SL character via exact division" + tag);
        }
    }
    return ck.result;
}

namespace {

// (t^2uv)^{r dim T} mu(1/t, 1/u, 1/v) for a character invariant written in
// x: monomial x^k maps to t^{2D-k} u^{D-k} v^{D-k} with D = r dim T.
RationalPoly char_dual(const RationalPoly& nu_x, int r, int rank) {
    const VarList tuv{"t", "u", "v"};
    const unsigned D = static_cast<unsigned>(r) * static_cast<unsigned>(rank);
    RationalPoly out(tuv);
    for (const auto& [e, c] : nu_x.terms()) {
        unsigned k = e[0];
        if (k > D) throw std::logic_error("character invariant exceeds top degree");
        out.add_term({2 * D - k, D - k, D - k}, c);
    }
    return out;
}

}  // namespace

SuiteResult suite_relations(SuiteCaps caps) {
    Checker ck("relations");
    const RationalPoly one_x = RationalPoly::constant(kX, 1);
    const RationalPoly xplus1 = p_xw("1 + x");
    const int nmax = capped(4, caps.max_n);
    const int rmax = capped(3, caps.max_r);
    for (int n = 1; n <= nmax; ++n) {
        for (int r = 1; r <= rmax; ++r) {
            const unsigned ur = static_cast<unsigned>(r);
            std::string tag = " at n=" + std::to_string(n) + " r=" + std::to_string(r);
            ck.check(mu_rep(symmetric_group_table(n, false), r) ==
                         mu_rep(symmetric_group_table(n, true), r) * pow(xplus1, ur),
                     "GL/SL factorization of the representation invariant" + tag);
            ck.check(mu_char(symmetric_group_table(n, false), r) ==
                         mu_char(symmetric_group_table(n, true), r) *
                             pow(parse_poly(kX, "1 + x"), ur),
                     "GL/SL factorization of the character invariant" + tag);
        }
    }
    // Poincare duality between the compact invariant and the reversed one.
    for (int r = 1; r <= rmax; ++r) {
        for (int n = 2; n <= nmax; ++n) {
            WeylClassTable t = symmetric_group_table(n, true);
            ck.check(mu_char_compact(t, r) == char_dual(mu_char(t, r), r, t.torus_rank),
                     "duality for SL(" + std::to_string(n) + ") r=" + std::to_string(r));
        }
        if (nmax >= 4) {
            WeylClassTable sp = hyperoctahedral_table(2);
            ck.check(mu_char_compact(sp, r) == char_dual(mu_char(sp, r), r, sp.torus_rank),
                     "duality for Sp(4) r=" + std::to_string(r));
        }
    }
    // Product assembly: atom products multiply, and the product table agrees.
    if (nmax >= 2) {
        GroupDescriptor pair = GroupDescriptor::parse("SL:2xSL:2");
        InvariantRequest req{2, InvariantKind::mu_char, VariableMode::xw};
        RationalPoly via_atoms = assemble(pair, req);
        RationalPoly via_table = mu_char(descriptor_table(pair), 2);
        RationalPoly single = mu_char(symmetric_group_table(2, true), 2);
        ck.check(via_atoms == single * single, "SL(2)xSL(2) character invariant squares");
        ck.check(via_table == via_atoms, "product table route matches atom product route");
        RationalPoly rep_via_table = mu_rep(descriptor_table(pair), 2);
        RationalPoly rep_single = mu_rep(symmetric_group_table(2, true), 2);
        ck.check(rep_via_table == rep_single * rep_single,
                 "product table route for the representation invariant");
    }
    {
        // GL(n) and SL(n) x GL(1) present the same group.
        for (int n = 2; n <= nmax; ++n) {
            GroupDescriptor split = GroupDescriptor::parse("SL:" + std::to_string(n) + "xGL:1");
            InvariantRequest req{2, InvariantKind::mu_rep, VariableMode::xw};
            ck.check(assemble(split, req) == mu_rep(symmetric_group_table(n, false), 2),
                     "GL(" + std::to_string(n) + ") equals SL x GL(1)");
        }
    }
    // Counting polynomials: the internal cross-route check runs on every
    // call; the torus case has the closed form (x - 1)^{rk}.
    for (int k = 1; k <= capped(3, caps.max_n); ++k) {
        for (int r = 1; r <= rmax; ++r) {
            RationalPoly expected =
                pow(parse_poly(kX, "x - 1"), static_cast<unsigned>(r) * static_cast<unsigned>(k));
            ck.check(counting_poly(torus_table(k), r) == expected,
                     "torus counting polynomial at k=" + std::to_string(k) +
                         " r=" + std::to_string(r));
        }
    }
    return ck.result;
}

SuiteResult suite_structure(SuiteCaps caps) {
    Checker ck("structure");
    auto balanced = [](const RationalPoly& p_tuv) {
        for (const auto& [e, c] : p_tuv.terms())
            if (e[1] != e[2]) return false;
        return true;
    };
    auto round = [](const RationalPoly& p_tuv) {
        for (const auto& [e, c] : p_tuv.terms())
            if (e[0] != e[1] || e[1] != e[2]) return false;
        return true;
    };
    auto nonneg_integer = [](const RationalPoly& p) {
        for (const auto& [e, c] : p.terms())
            if (c <= 0 || c.get_den() != 1) return false;
        return true;
    };
    for (int n = 2; n <= capped(4, caps.max_n); ++n) {
        for (int r = 1; r <= capped(3, caps.max_r); ++r) {
            std::string tag = " SL(" + std::to_string(n) + ") r=" + std::to_string(r);
            WeylClassTable t = symmetric_group_table(n, true);
            RationalPoly rep = expand_xw_to_tuv(mu_rep(t, r));
            RationalPoly ch = expand_x_to_tuv(mu_char(t, r));
            ck.check(balanced(rep), "representation invariant is balanced" + tag);
            ck.check(round(ch), "character invariant is round" + tag);
            ck.check(nonneg_integer(rep) && nonneg_integer(ch),
                     "coefficients are positive integers" + tag);
            ck.check(euler_characteristic(rep) == 0, "Euler characteristic vanishes" + tag);
            mpz_class expected_dim;
            mpz_ui_pow_ui(expected_dim.get_mpz_t(), 2,
                          static_cast<unsigned long>((n - 1)) * static_cast<unsigned long>(r));
            ck.check(total_dimension(rep) == expected_dim,
                     "total dimension is 2^{(n-1)r}" + tag);
        }
    }
    return ck.result;
}

SuiteResult suite_exotic(SuiteCaps caps) {
    Checker ck("exotic");
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        for (long m = 1; m <= 4; ++m) {
            for (int r = 1; r <= capped(6, caps.max_r); ++r) {
                ExoticSpec spec{p, m, r};
                try {
                    component_count(spec);
                    ++ck.result.checks;
                } catch (const std::exception& e) {
                    ck.check(false, "component count at p=" + std::to_string(p) +
                                        " m=" + std::to_string(m) + " r=" + std::to_string(r) +
                                        ": " + e.what());
                }
            }
        }
    }
    ck.check(component_count({2, 1, 2}) == 1, "single extra component at p=2, m=1, r=2");
    ck.check(component_count({2, 1, 1}) == 0, "no extra components at r=1");
    ck.check(component_count({3, 1, 2}) == 2, "two extra components at p=3, m=1, r=2");
    ck.check(mu_char_exotic({2, 1, 2}) == parse_poly(kX, "2 + x^2"),
             "whole character variety of the p=2 quotient at r=2");
    for (long p : {2L, 3L}) {
        for (long m = 1; m <= 2; ++m) {
            for (int r = 1; r <= capped(3, caps.max_r); ++r) {
                RationalPoly rep = expand_xw_to_tuv(mu_rep_exotic({p, m, r}));
                ck.check(euler_characteristic(rep) == 0,
                         "whole-variety Euler characteristic vanishes at p=" + std::to_string(p) +
                             " m=" + std::to_string(m) + " r=" + std::to_string(r));
            }
        }
    }
    return ck.result;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"weyl", "golden", "recursion", "relations", "structure", "exotic"};
}

std::vector<SuiteResult> run_suites(const std::string& name, SuiteCaps caps) {
    if (caps.max_n < 0 || caps.max_r < 0)
        throw std::invalid_argument("suite size caps must be nonnegative");
    std::vector<SuiteResult> results;
    auto run_one = [&results, caps](const std::string& suite) {
        if (suite == "weyl") results.push_back(suite_weyl(caps));
        else if (suite == "golden") results.push_back(suite_golden(caps));
        else if (suite == "recursion") results.push_back(suite_recursion(caps));
        else if (suite == "relations") results.push_back(suite_relations(caps));
        else if (suite == "structure") results.push_back(suite_structure(caps));
        else if (suite == "exotic") results.push_back(suite_exotic(caps));
        else throw std::invalid_argument("unknown suite '" + suite + "'");
    };
    if (name == "all") {
        for (const auto& suite : suite_names()) run_one(suite);
    } else {
        run_one(name);
    }
    return results;
}

}  // namespace mhp
