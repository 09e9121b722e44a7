#include "doctest.h"

#include "mhp/exotic.hpp"
#include "mhp/invariants.hpp"
#include "mhp/recursion.hpp"
#include "mhp/weyl.hpp"

#include <stdexcept>

using namespace mhp;

namespace {

const VarList kXW = {"x", "w"};

RationalPoly pxw(const std::string& text) { return parse_poly(kXW, text); }
RationalPoly px(const std::string& text) { return parse_poly({"x"}, text); }

}  // namespace

TEST_SUITE("exotic") {

TEST_CASE("primality guard") {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) CHECK(is_prime(p));
    for (long n : {1L, 4L, 6L, 9L, 15L, 21L}) CHECK_FALSE(is_prime(n));
    CHECK_THROWS_AS((ExoticSpec{4, 1, 2}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ExoticSpec{2, 0, 2}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ExoticSpec{2, 1, 0}.validate()), std::invalid_argument);
}

TEST_CASE("component counts, frozen values") {
    CHECK(component_count({2, 1, 1}) == 0);
    CHECK(component_count({2, 1, 2}) == 1);
    CHECK(component_count({2, 1, 3}) == 7);
    CHECK(component_count({2, 1, 4}) == 35);
    CHECK(component_count({3, 1, 2}) == 2);
    CHECK(component_count({5, 1, 2}) == 4);
    CHECK(component_count({2, 2, 2}) == 1);
    CHECK(component_count({2, 2, 3}) == 14);
    CHECK(component_count({3, 2, 3}) == 78);
    CHECK(component_count({2, 3, 2}) == 1);
}

TEST_CASE("component count is a nonnegative integer across the grid") {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        for (long m = 1; m <= 4; ++m) {
            for (int r = 1; r <= 6; ++r) {
                CHECK_NOTHROW(component_count({p, m, r}));
            }
        }
    }
}

TEST_CASE("whole-variety polynomials") {
    CHECK(mu_char_exotic({2, 1, 1}) == px("1"));
    CHECK(mu_char_exotic({2, 1, 2}) == px("2 + x^2"));
    CHECK(mu_char_exotic({2, 2, 2}) == px("2 + 2*x^2 + x^4"));
    CHECK(mu_rep_exotic({2, 1, 2}) == pxw("2 + x^2 + 3*x*w"));

    // At r = 1 the variety is connected, so both reduce to the SL values.
    CHECK(mu_rep_exotic({3, 1, 1}) == mu_rep(symmetric_group_table(3, true), 1));
    CHECK(mu_char_exotic({5, 1, 1}) == mu_char_sl(5, 1));
}

TEST_CASE("extra components are torus powers") {
    // Each extra component contributes prod_{j=2}^{p} (1 + x w^{j-1})^m, the
    // polynomial of (S^1)^{(p-1)m} regraded by weight.
    ExoticSpec spec{3, 2, 2};
    RationalPoly extra =
        pow(pxw("1 + x*w") * pxw("1 + x*w^2"), 2);
    CHECK(mu_rep_exotic(spec) ==
          pow(mu_rep(symmetric_group_table(3, true), 2), 2) + component_count(spec) * extra);
}

TEST_CASE("total dimension splits over components") {
    for (long p : {2L, 3L}) {
        for (long m = 1; m <= 2; ++m) {
            for (int r = 1; r <= 3; ++r) {
                ExoticSpec spec{p, m, r};
                mpz_class identity_part =
                    total_dimension(expand_xw_to_tuv(
                        pow(mu_rep(symmetric_group_table(static_cast<int>(p), true), r),
                            static_cast<unsigned>(m))));
                mpz_class extra_each;
                mpz_ui_pow_ui(extra_each.get_mpz_t(), 2,
                              static_cast<unsigned long>((p - 1) * m));
                CHECK(total_dimension(expand_xw_to_tuv(mu_rep_exotic(spec))) ==
                      identity_part + component_count(spec) * extra_each);
            }
        }
    }
}

TEST_CASE("euler characteristic vanishes on the whole variety") {
    for (long p : {2L, 3L}) {
        for (int r = 1; r <= 3; ++r) {
            CHECK(euler_characteristic(expand_xw_to_tuv(mu_rep_exotic({p, 1, r}))) == 0);
        }
    }
}

TEST_CASE("assemble routes central quotients") {
    GroupDescriptor g;
    g.atoms = {{AtomKind::sl, 2}, {AtomKind::sl, 2}};
    g.quotient = GroupDescriptor::CentralQuotient{2, 2};
    InvariantRequest req{2, InvariantKind::mu_char, VariableMode::xw};
    CHECK(assemble(g, req) == mu_char_exotic({2, 2, 2}));

    InvariantRequest rep{2, InvariantKind::mu_rep, VariableMode::xw};
    CHECK(assemble(g, rep) == mu_rep_exotic({2, 2, 2}));

    InvariantRequest count{2, InvariantKind::counting_poly, VariableMode::xw};
    CHECK_THROWS_AS(assemble(g, count), std::invalid_argument);
}

}
