#include "doctest.h"

#include "mhp/rational_poly.hpp"

#include <random>
#include <stdexcept>

using namespace mhp;

namespace {

const VarList kXW = {"x", "w"};

RationalPoly p(const std::string& text) { return parse_poly(kXW, text); }

// Random dense-ish polynomial in (x, w), small degrees and coefficients.
RationalPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<unsigned> exp(0, 4);
    std::uniform_int_distribution<int> nterms(0, 5);
    RationalPoly out = RationalPoly::zero(kXW);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        out.add_term({exp(rng), exp(rng)}, coeff(rng));
    }
    return out;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("construction and basic queries") {
    RationalPoly z = RationalPoly::zero(kXW);
    CHECK(z.is_zero());
    CHECK(z.degree() == 0);
    CHECK(to_plain(z) == "0");

    RationalPoly c = RationalPoly::constant(kXW, mpq_class(3, 4));
    CHECK(c.is_constant());
    CHECK(c.constant_term() == mpq_class(3, 4));
    CHECK_FALSE(c.has_integer_coefficients());

    RationalPoly x = RationalPoly::variable(kXW, "x");
    CHECK(x.degree() == 1);
    CHECK(x.coefficient({1, 0}) == 1);
    CHECK(x.coefficient({0, 1}) == 0);
    CHECK_THROWS_AS(RationalPoly::variable(kXW, "q"), std::invalid_argument);

    RationalPoly m = RationalPoly::monomial(kXW, {2, 3}, 5);
    CHECK(m.degree() == 5);
    CHECK(m.var_degree(0) == 2);
    CHECK(m.var_degree(1) == 3);
}

TEST_CASE("product and average identities") {
    CHECK(p("1 + x") * p("1 - x") == p("1 - x^2"));
    RationalPoly avg = (pow(p("1 + x"), 2) + pow(p("1 - x"), 2)) * mpq_class(1, 2);
    CHECK(avg == p("1 + x^2"));
}

TEST_CASE("canonical term order in printed form") {
    // Ascending degree; within a degree the higher power of x first.
    CHECK(to_plain(p("x*w + w^2 + x^2 + 1")) == "1 + x^2 + x*w + w^2");
    CHECK(to_plain(p("1/2 - x")) == "1/2 - x");
    CHECK(to_plain(p("-x - w^3")) == "-x - w^3");
}

TEST_CASE("latex form") {
    CHECK(to_latex(p("1 + 2*x*w + x^2")) == "1 + x^{2} + 2xw");
    CHECK(to_latex(p("-1/2*w^3")) == "-\\frac{1}{2}w^{3}");
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(p("1 +"), std::invalid_argument);
    CHECK_THROWS_AS(p("y + 1"), std::invalid_argument);
    CHECK_THROWS_AS(p("x^"), std::invalid_argument);
    CHECK_THROWS_AS(p(""), std::invalid_argument);
    CHECK_THROWS_AS(p("2x"), std::invalid_argument);  // '*' is mandatory
}

TEST_CASE("parse accumulates repeated monomials") {
    CHECK(p("x + x + w") == p("2*x + w"));
    CHECK(p("x - x") == RationalPoly::zero(kXW));
}

TEST_CASE("mixed-list arithmetic throws") {
    RationalPoly a = p("x");
    RationalPoly b = RationalPoly::variable({"x"}, "x");
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("div_exact basics") {
    CHECK(div_exact(p("1 - w^4"), p("1 - w")) == p("1 + w + w^2 + w^3"));
    CHECK(div_exact(p("1 - x^2"), p("1 + x")) == p("1 - x"));
    CHECK_THROWS_AS(div_exact(p("1 + x^2"), p("1 + x")), std::domain_error);
    CHECK_THROWS_AS(div_exact(p("1"), RationalPoly::zero(kXW)), std::domain_error);
    CHECK(div_exact(RationalPoly::zero(kXW), p("1 + x")).is_zero());
}

TEST_CASE("substitute expands compressed variables") {
    const VarList tuv = {"t", "u", "v"};
    std::vector<RationalPoly> bindings = {
        RationalPoly::monomial(tuv, {1, 1, 1}, 1),   // x -> tuv
        RationalPoly::monomial(tuv, {2, 1, 1}, 1),   // w -> t^2uv
    };
    CHECK(substitute(p("1 + x*w"), bindings) == parse_poly(tuv, "1 + t^3*u^2*v^2"));
    CHECK(substitute(p("x^2"), bindings) == parse_poly(tuv, "t^2*u^2*v^2"));
}

TEST_CASE("scale_exponents") {
    CHECK(p("1 + x + w^2").scale_exponents(3) == p("1 + x^3 + w^6"));
    // k = 0 collapses every monomial to the constant: sum of coefficients.
    CHECK(p("1 + 2*x - w").scale_exponents(0) == p("2"));
}

TEST_CASE("truncation") {
    CHECK(p("1 + x + x*w + x^2*w^2").truncate_total_degree(2) == p("1 + x + x*w"));
    CHECK(p("1 + x + x*w^2").truncate_var_degree(1, 1) == p("1 + x"));
}

TEST_CASE("eval") {
    RationalPoly f = p("1 + 3*x^2 + 3*x*w + x^3*w");
    CHECK(f.eval({1, 1}) == 8);
    CHECK(f.eval({-1, 1}) == 0);
    CHECK(f.eval({mpq_class(1, 2), 2}) == 5);
}

TEST_CASE("print parse round trip on random polynomials") {
    std::mt19937 rng(60901);
    for (int i = 0; i < 200; ++i) {
        RationalPoly f = random_poly(rng);
        CHECK(parse_poly(kXW, to_plain(f)) == f);
    }
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(2122);
    for (int i = 0; i < 100; ++i) {
        RationalPoly a = random_poly(rng);
        RationalPoly b = random_poly(rng);
        RationalPoly c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RationalPoly::zero(kXW));
    }
}

TEST_CASE("div_exact inverts multiplication on random polynomials") {
    std::mt19937 rng(777);
    int done = 0;
    while (done < 100) {
        RationalPoly a = random_poly(rng);
        RationalPoly b = random_poly(rng);
        if (b.is_zero()) continue;
        CHECK(div_exact(a * b, b) == a);
        ++done;
    }
}

TEST_CASE("pow matches repeated multiplication") {
    RationalPoly base = p("1 - x + 2*w");
    RationalPoly acc = RationalPoly::constant(kXW, 1);
    for (unsigned k = 0; k <= 6; ++k) {
        CHECK(pow(base, k) == acc);
        acc *= base;
    }
}

}
