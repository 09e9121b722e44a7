#include "doctest.h"

#include "mhp/invariants.hpp"
#include "mhp/weyl.hpp"

#include <stdexcept>

using namespace mhp;

namespace {

const VarList kXW = {"x", "w"};
const VarList kX = {"x"};
const VarList kTUV = {"t", "u", "v"};

RationalPoly pxw(const std::string& text) { return parse_poly(kXW, text); }
RationalPoly px(const std::string& text) { return parse_poly(kX, text); }
RationalPoly ptuv(const std::string& text) { return parse_poly(kTUV, text); }

WeylClassTable sl(int n) { return symmetric_group_table(n, true); }
WeylClassTable gl(int n) { return symmetric_group_table(n, false); }

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("representation variety polynomials, low rank") {
    CHECK(mu_rep(sl(2), 1) == pxw("1 + x*w"));
    CHECK(mu_rep(sl(2), 2) == pxw("1 + x^2 + 2*x*w"));
    CHECK(mu_rep(sl(2), 3) == pxw("1 + 3*x^2 + 3*x*w + x^3*w"));
    CHECK(mu_rep(sl(3), 1) == pxw("1 + x*w + x*w^2 + x^2*w^3"));
    CHECK(mu_rep(gl(2), 1) == pxw("1 + x + x*w + x^2*w"));
    CHECK(mu_rep(torus_table(2), 2) == pow(pxw("1 + x"), 4));
}

TEST_CASE("rank one factors over the exponents") {
    // For r = 1 the representation variety is the group itself, so mu is
    // prod_i (1 + x w^{d_i - 1}) with d_i the characteristic exponents.
    for (const auto& table :
         {sl(2), sl(3), sl(4), gl(2), gl(3), hyperoctahedral_table(2), hyperoctahedral_table(3)}) {
        RationalPoly expect = RationalPoly::constant(kXW, 1);
        for (int d : table.exponents) {
            expect *= pxw("1") + RationalPoly::monomial(kXW, {1, static_cast<unsigned>(d - 1)}, 1);
        }
        CHECK(mu_rep(table, 1) == expect);
    }
}

TEST_CASE("character variety polynomials, low rank") {
    CHECK(mu_char(sl(2), 1) == px("1"));
    CHECK(mu_char(sl(2), 2) == px("1 + x^2"));
    CHECK(mu_char(sl(2), 3) == px("1 + 3*x^2"));
    CHECK(mu_char(sl(3), 2) == px("1 + x^2 + x^4"));
    CHECK(mu_char(hyperoctahedral_table(2), 1) == px("1"));
}

TEST_CASE("compactly supported form and counting polynomial") {
    CHECK(mu_char_compact(sl(2), 1) == ptuv("t^2*u*v"));
    CHECK(mu_char_compact(sl(2), 2) == ptuv("t^2 + t^4*u^2*v^2"));
    CHECK(counting_poly(sl(2), 1) == px("x"));
    CHECK(counting_poly(sl(2), 2) == px("1 + x^2"));
    CHECK(counting_poly(sl(3), 2) == px("1 + x^2 + x^4"));
    CHECK(counting_poly(hyperoctahedral_table(2), 1) == px("x^2"));
    CHECK(counting_poly(torus_table(2), 2) == pow(px("x - 1"), 4));
}

TEST_CASE("counting polynomial evaluates to integers at prime powers") {
    RationalPoly f = counting_poly(sl(2), 2);
    CHECK(f.eval({2}) == 5);
    CHECK(f.eval({3}) == 10);
    CHECK(f.eval({4}) == 17);
}

TEST_CASE("duality between compact and ordinary character polynomials") {
    // mu_char_compact is the (t^2uv)^{r dim T} reversal of round mu_char.
    for (int r = 1; r <= 3; ++r) {
        for (const auto& table : {sl(2), sl(3), hyperoctahedral_table(2)}) {
            unsigned big_d = static_cast<unsigned>(r * table.torus_rank);
            RationalPoly expect = RationalPoly::zero(kTUV);
            RationalPoly nu = mu_char(table, r);
            for (const auto& [e, c] : nu.terms()) {
                unsigned k = e[0];
                expect.add_term({2 * big_d - k, big_d - k, big_d - k}, c);
            }
            CHECK(mu_char_compact(table, r) == expect);
        }
    }
}

TEST_CASE("equivariant series") {
    EquivariantMu eq = equivariant_mu(sl(2), 1, 2);
    CHECK(eq.series == pxw("1 + x*w + w^2"));
    CHECK(eq.order == 2);
    CHECK(eq.group_order == 2);
    CHECK(eq.class_terms.size() == 2);
    // Merged classes of S_2 on the SL(2) lattice: identity and the swap.
    CHECK(eq.class_terms[0].numerator + eq.class_terms[1].numerator ==
          pxw("1 + x") + pxw("1 - x"));

    EquivariantMu eq0 = equivariant_mu(sl(2), 1, 0);
    CHECK(eq0.series == pxw("1"));

    // The truncation of the equivariant series reproduces mu_rep up to the
    // truncation order once multiplied by prod (1 - w^{d_i}).
    EquivariantMu eq6 = equivariant_mu(sl(3), 2, 8);
    RationalPoly clearing = pxw("1 - w^2") * pxw("1 - w^3");
    CHECK((eq6.series * clearing).truncate_total_degree(8) ==
          mu_rep(sl(3), 2).truncate_total_degree(8));
}

TEST_CASE("variable expansion and specializations") {
    CHECK(expand_xw_to_tuv(pxw("1 + x*w")) == ptuv("1 + t^3*u^2*v^2"));
    CHECK(expand_x_to_tuv(px("1 + x^2")) == ptuv("1 + t^2*u^2*v^2"));

    RationalPoly mu = expand_xw_to_tuv(mu_rep(sl(2), 2));  // 1 + x^2 + 2xw
    CHECK(poincare_poly(mu) == parse_poly({"t"}, "1 + t^2 + 2*t^3"));
    CHECK(e_polynomial(mu) == parse_poly({"u", "v"}, "1 - u^2*v^2"));
    CHECK(euler_characteristic(mu) == 0);
    CHECK(total_dimension(mu) == 4);

    CHECK(euler_characteristic(expand_xw_to_tuv(mu_rep(torus_table(1), 2))) == 0);
    CHECK(total_dimension(expand_xw_to_tuv(mu_rep(torus_table(1), 2))) == 4);
}

TEST_CASE("Poincare specialization matches the compact group at r=1") {
    // At r=1 the variety is the group itself, a product of odd spheres:
    // S^3 x S^5 for SL(3), S^3 x S^7 for Sp(4).
    const VarList t{"t"};
    CHECK(poincare_poly(expand_xw_to_tuv(mu_rep(sl(3), 1))) ==
          parse_poly(t, "1 + t^3 + t^5 + t^8"));
    CHECK(poincare_poly(expand_xw_to_tuv(mu_rep(hyperoctahedral_table(2), 1))) ==
          parse_poly(t, "1 + t^3 + t^7 + t^10"));
}

TEST_CASE("invariant kind and mode names round trip") {
    for (const char* name : {"mu_rep", "mu_char", "mu_char_compact", "counting_poly",
                             "equivariant_mu", "poincare", "e_poly", "euler_char", "total_dim"}) {
        CHECK(invariant_kind_name(parse_invariant_kind(name)) == name);
    }
    CHECK(parse_variable_mode("xw") == VariableMode::xw);
    CHECK(parse_variable_mode("tuv") == VariableMode::tuv);
    CHECK_THROWS_AS(parse_invariant_kind("betti"), std::invalid_argument);
    CHECK_THROWS_AS(parse_variable_mode("q"), std::invalid_argument);
}

TEST_CASE("assemble over atom products") {
    GroupDescriptor g = GroupDescriptor::parse("SL:2xSL:2");
    InvariantRequest req{2, InvariantKind::mu_char, VariableMode::xw};
    CHECK(assemble(g, req) == px("1 + 2*x^2 + x^4"));

    InvariantRequest rep{2, InvariantKind::mu_rep, VariableMode::xw};
    CHECK(assemble(g, rep) == pow(pxw("1 + x^2 + 2*x*w"), 2));

    InvariantRequest tot{2, InvariantKind::total_dim, VariableMode::tuv};
    CHECK(assemble(GroupDescriptor::parse("SL:2"), tot) ==
          RationalPoly::constant({}, 4));

    InvariantRequest eul{1, InvariantKind::euler_char, VariableMode::tuv};
    CHECK(assemble(GroupDescriptor::parse("Sp:4"), eul) == RationalPoly::constant({}, 0));

    // GL(n) = SL(n) x GL(1) / finite, and the invariants see only the torus
    // factorization, so the assembled product matches GL directly.
    InvariantRequest rep3{3, InvariantKind::mu_rep, VariableMode::xw};
    CHECK(assemble(GroupDescriptor::parse("SL:3xGL:1"), rep3) ==
          assemble(GroupDescriptor::parse("GL:3"), rep3));
}

TEST_CASE("assemble validates requests") {
    GroupDescriptor g = GroupDescriptor::parse("SL:2");
    CHECK_THROWS_AS(assemble(g, InvariantRequest{0, InvariantKind::mu_rep, VariableMode::xw}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        assemble(g, InvariantRequest{1, InvariantKind::mu_char_compact, VariableMode::xw}),
        std::invalid_argument);
    CHECK_THROWS_AS(assemble(g, InvariantRequest{1, InvariantKind::poincare, VariableMode::xw}),
                    std::invalid_argument);
}

TEST_CASE("rejects invalid rank everywhere") {
    CHECK_THROWS_AS(mu_rep(sl(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(mu_char(sl(2), -1), std::invalid_argument);
    CHECK_THROWS_AS(counting_poly(sl(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(equivariant_mu(sl(2), 0), std::invalid_argument);
}

}
