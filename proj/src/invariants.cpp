#include "mhp/invariants.hpp"

#include "mhp/exotic.hpp"

#include <stdexcept>

namespace mhp {

namespace {

const VarList kXW{"x", "w"};
const VarList kX{"x"};
const VarList kTUV{"t", "u", "v"};

void require_rank(int r) {
    if (r < 1) throw std::invalid_argument("invariants require r >= 1");
}

mpq_class to_mpq(const mpz_class& z) { return mpq_class(z); }

void check_integral(const RationalPoly& p, const char* what) {
    if (!p.has_integer_coefficients())
        throw std::domain_error(std::string(what) + ": non-integer coefficients signal a "
                                                    "corrupted class table");
}

// prod_i (1 - w^{d_i}) over the table's characteristic exponents.
RationalPoly exponent_product(const WeylClassTable& table, const RationalPoly& w) {
    RationalPoly prod = RationalPoly::constant(w.vars(), 1);
    const RationalPoly one = RationalPoly::constant(w.vars(), 1);
    for (int d : table.exponents) prod *= one - pow(w, static_cast<unsigned>(d));
    return prod;
}

}  // namespace

RationalPoly mu_rep(const WeylClassTable& table, int r) {
    require_rank(r);
    const WeylClassTable merged = merge_equal_char_polys(table);
    const RationalPoly x = RationalPoly::variable(kXW, "x");
    const RationalPoly w = RationalPoly::variable(kXW, "w");
    // Running fraction N/D over all classes; denominators are never expanded
    // into series, one exact division clears everything at the end.
    RationalPoly num = RationalPoly::zero(kXW);
    RationalPoly den = RationalPoly::constant(kXW, 1);
    for (const auto& c : merged.classes) {
        RationalPoly class_num = pow(char_poly(c.pattern, Sign::plus, x), static_cast<unsigned>(r));
        class_num *= to_mpq(c.size);
        RationalPoly class_den = char_poly(c.pattern, Sign::minus, w);
        num = num * class_den + class_num * den;
        den = den * class_den;
    }
    RationalPoly cleared = div_exact(exponent_product(merged, w) * num, den);
    cleared /= to_mpq(merged.group_order);
    check_integral(cleared, "mu_rep");
    return cleared;
}

RationalPoly mu_char(const WeylClassTable& table, int r) {
    require_rank(r);
    const WeylClassTable merged = merge_equal_char_polys(table);
    const RationalPoly x = RationalPoly::variable(kX, "x");
    RationalPoly sum = RationalPoly::zero(kX);
    for (const auto& c : merged.classes) {
        RationalPoly term = pow(char_poly(c.pattern, Sign::plus, x), static_cast<unsigned>(r));
        term *= to_mpq(c.size);
        sum += term;
    }
    sum /= to_mpq(merged.group_order);
    check_integral(sum, "mu_char");
    return sum;
}

RationalPoly mu_char_compact(const WeylClassTable& table, int r) {
    require_rank(r);
    const WeylClassTable merged = merge_equal_char_polys(table);
    const RationalPoly t = RationalPoly::variable(kTUV, "t");
    const RationalPoly tuv =
        RationalPoly::monomial(kTUV, {1, 1, 1}, 1);
    RationalPoly sum = RationalPoly::zero(kTUV);
    for (const auto& c : merged.classes) {
        RationalPoly term =
            pow(char_poly_reversed(c.pattern, Sign::plus, tuv), static_cast<unsigned>(r));
        term *= to_mpq(c.size);
        sum += term;
    }
    sum /= to_mpq(merged.group_order);
    sum *= pow(t, static_cast<unsigned>(r) * static_cast<unsigned>(merged.torus_rank));
    check_integral(sum, "mu_char_compact");
    return sum;
}

namespace {

// t = -1, u = v = sqrt(x) on a balanced (t, u, v) polynomial: every monomial
// must have equal u and v exponents, and contributes (-1)^a x^b.
RationalPoly compact_to_counting(const RationalPoly& compact) {
    RationalPoly out(kX);
    for (const auto& [e, c] : compact.terms()) {
        if (e[1] != e[2])
            throw std::logic_error("compact invariant is not balanced in (u, v)");
        mpq_class signed_c = (e[0] % 2 == 0) ? c : -c;
        out.add_term({e[1]}, signed_c);
    }
    return out;
}

}  // namespace

RationalPoly counting_poly(const WeylClassTable& table, int r) {
    require_rank(r);
    const WeylClassTable merged = merge_equal_char_polys(table);
    const RationalPoly x = RationalPoly::variable(kX, "x");
    const int rank = merged.torus_rank;
    RationalPoly sum = RationalPoly::zero(kX);
    for (const auto& c : merged.classes) {
        // det(A - xI) = (-1)^{dim T} det(xI - A).
        RationalPoly det = char_poly_reversed(c.pattern, Sign::minus, x);
        if (rank % 2 == 1) det = -det;
        RationalPoly term = pow(det, static_cast<unsigned>(r));
        term *= to_mpq(c.size);
        sum += term;
    }
    sum /= to_mpq(merged.group_order);
    if ((static_cast<long>(r) * rank) % 2 == 1) sum = -sum;
    check_integral(sum, "counting_poly");
    RationalPoly via_compact = compact_to_counting(mu_char_compact(table, r));
    if (sum != via_compact)
        throw std::logic_error("counting_poly disagrees with the mu_char_compact "
                               "specialization");
    return sum;
}

EquivariantMu equivariant_mu(const WeylClassTable& table, int r, unsigned order) {
    require_rank(r);
    const WeylClassTable merged = merge_equal_char_polys(table);
    const RationalPoly x = RationalPoly::variable(kXW, "x");
    const RationalPoly w = RationalPoly::variable(kXW, "w");
    const RationalPoly one = RationalPoly::constant(kXW, 1);
    EquivariantMu result{RationalPoly::zero(kXW), order, {}, merged.group_order};
    for (const auto& c : merged.classes) {
        ClassFraction f;
        f.numerator = pow(char_poly(c.pattern, Sign::plus, x), static_cast<unsigned>(r));
        f.denominator = char_poly(c.pattern, Sign::minus, w);
        f.size = c.size;
        // Truncated inverse of the denominator: 1/(1 - u) with u = 1 - den;
        // u has no constant term, so order steps of Horner suffice.
        RationalPoly u = one - f.denominator;
        RationalPoly inv = one;
        for (unsigned k = 0; k < order; ++k)
            inv = (one + u * inv).truncate_total_degree(order);
        RationalPoly term = (f.numerator * inv).truncate_total_degree(order);
        term *= to_mpq(f.size);
        result.series += term;
        result.class_terms.push_back(std::move(f));
    }
    result.series /= to_mpq(merged.group_order);
    check_integral(result.series, "equivariant_mu");
    return result;
}

RationalPoly expand_xw_to_tuv(const RationalPoly& p) {
    if (p.vars() != kXW) throw std::invalid_argument("expected a polynomial in (x, w)");
    return substitute(p, {RationalPoly::monomial(kTUV, {1, 1, 1}, 1),
                          RationalPoly::monomial(kTUV, {2, 1, 1}, 1)});
}

RationalPoly expand_x_to_tuv(const RationalPoly& p) {
    if (p.vars() != kX) throw std::invalid_argument("expected a polynomial in (x)");
    return substitute(p, {RationalPoly::monomial(kTUV, {1, 1, 1}, 1)});
}

RationalPoly poincare_poly(const RationalPoly& mu_tuv) {
    if (mu_tuv.vars() != kTUV) throw std::invalid_argument("expected a polynomial in (t, u, v)");
    const VarList t_var{"t"};
    return substitute(mu_tuv, {RationalPoly::variable(t_var, "t"),
                               RationalPoly::constant(t_var, 1),
                               RationalPoly::constant(t_var, 1)});
}

RationalPoly e_polynomial(const RationalPoly& mu_tuv) {
    if (mu_tuv.vars() != kTUV) throw std::invalid_argument("expected a polynomial in (t, u, v)");
    const VarList uv{"u", "v"};
    return substitute(mu_tuv, {RationalPoly::constant(uv, -1),
                               RationalPoly::variable(uv, "u"),
                               RationalPoly::variable(uv, "v")});
}

mpz_class euler_characteristic(const RationalPoly& mu_tuv) {
    if (mu_tuv.vars() != kTUV) throw std::invalid_argument("expected a polynomial in (t, u, v)");
    mpq_class value = mu_tuv.eval({mpq_class(-1), mpq_class(1), mpq_class(1)});
    if (value.get_den() != 1) throw std::logic_error("non-integral Euler characteristic");
    return value.get_num();
}

mpz_class total_dimension(const RationalPoly& mu_tuv) {
    if (mu_tuv.vars() != kTUV) throw std::invalid_argument("expected a polynomial in (t, u, v)");
    mpq_class value = mu_tuv.eval({mpq_class(1), mpq_class(1), mpq_class(1)});
    if (value.get_den() != 1) throw std::logic_error("non-integral total dimension");
    return value.get_num();
}

InvariantKind parse_invariant_kind(const std::string& text) {
    if (text == "mu_rep") return InvariantKind::mu_rep;
    if (text == "mu_char") return InvariantKind::mu_char;
    if (text == "mu_char_compact") return InvariantKind::mu_char_compact;
    if (text == "counting_poly") return InvariantKind::counting_poly;
    if (text == "equivariant_mu") return InvariantKind::equivariant_mu;
    if (text == "poincare") return InvariantKind::poincare;
    if (text == "e_poly") return InvariantKind::e_poly;
    if (text == "euler_char") return InvariantKind::euler_char;
    if (text == "total_dim") return InvariantKind::total_dim;
    throw std::invalid_argument("unknown invariant kind '" + text + "'");
}

std::string invariant_kind_name(InvariantKind kind) {
    switch (kind) {
        case InvariantKind::mu_rep: return "mu_rep";
        case InvariantKind::mu_char: return "mu_char";
        case InvariantKind::mu_char_compact: return "mu_char_compact";
        case InvariantKind::counting_poly: return "counting_poly";
        case InvariantKind::equivariant_mu: return "equivariant_mu";
        case InvariantKind::poincare: return "poincare";
        case InvariantKind::e_poly: return "e_poly";
        case InvariantKind::euler_char: return "euler_char";
        case InvariantKind::total_dim: return "total_dim";
    }
    throw std::logic_error("unreachable invariant kind");
}

VariableMode parse_variable_mode(const std::string& text) {
    if (text == "xw") return VariableMode::xw;
    if (text == "tuv") return VariableMode::tuv;
    throw std::invalid_argument("unknown variable mode '" + text + "' (expected xw or tuv)");
}

std::string variable_mode_name(VariableMode mode) {
    return mode == VariableMode::xw ? "xw" : "tuv";
}

namespace {

RationalPoly assemble_atoms(const GroupDescriptor& group, const InvariantRequest& request) {
    auto product_over_atoms = [&group](auto&& per_atom) {
        RationalPoly result;
        bool first = true;
        for (const auto& atom : group.atoms) {
            RationalPoly factor = per_atom(atom_table(atom));
            if (first) {
                result = std::move(factor);
                first = false;
            } else {
                result *= factor;
            }
        }
        return result;
    };
    const int r = request.rank_r;
    switch (request.kind) {
        case InvariantKind::mu_rep: {
            RationalPoly p = product_over_atoms([r](const WeylClassTable& t) { return mu_rep(t, r); });
            return request.mode == VariableMode::xw ? p : expand_xw_to_tuv(p);
        }
        case InvariantKind::mu_char: {
            RationalPoly p = product_over_atoms([r](const WeylClassTable& t) { return mu_char(t, r); });
            return request.mode == VariableMode::xw ? p : expand_x_to_tuv(p);
        }
        case InvariantKind::mu_char_compact: {
            if (request.mode == VariableMode::xw)
                throw std::invalid_argument("mu_char_compact lives in (t, u, v) only");
            return product_over_atoms(
                [r](const WeylClassTable& t) { return mu_char_compact(t, r); });
        }
        case InvariantKind::counting_poly:
            return product_over_atoms(
                [r](const WeylClassTable& t) { return counting_poly(t, r); });
        case InvariantKind::equivariant_mu: {
            unsigned order = request.series_order;
            RationalPoly p = product_over_atoms([r, order](const WeylClassTable& t) {
                return equivariant_mu(t, r, order).series;
            });
            p = p.truncate_total_degree(order);
            return request.mode == VariableMode::xw ? p : expand_xw_to_tuv(p);
        }
        case InvariantKind::poincare:
        case InvariantKind::e_poly:
        case InvariantKind::euler_char:
        case InvariantKind::total_dim: {
            if (request.mode == VariableMode::xw &&
                (request.kind == InvariantKind::poincare || request.kind == InvariantKind::e_poly))
                throw std::invalid_argument("specialization '" + invariant_kind_name(request.kind) +
                                            "' does not live in (x, w)");
            RationalPoly mu = product_over_atoms([r](const WeylClassTable& t) { return mu_rep(t, r); });
            RationalPoly mu_tuv = expand_xw_to_tuv(mu);
            switch (request.kind) {
                case InvariantKind::poincare: return poincare_poly(mu_tuv);
                case InvariantKind::e_poly: return e_polynomial(mu_tuv);
                case InvariantKind::euler_char:
                    return RationalPoly::constant({}, mpq_class(euler_characteristic(mu_tuv)));
                case InvariantKind::total_dim:
                    return RationalPoly::constant({}, mpq_class(total_dimension(mu_tuv)));
                default: break;
            }
            throw std::logic_error("unreachable specialization kind");
        }
    }
    throw std::logic_error("unreachable invariant kind");
}

RationalPoly assemble_exotic(const GroupDescriptor& group, const InvariantRequest& request) {
    ExoticSpec spec{group.quotient->p, group.quotient->m, request.rank_r};
    if (request.mode == VariableMode::xw &&
        (request.kind == InvariantKind::poincare || request.kind == InvariantKind::e_poly))
        throw std::invalid_argument("specialization '" + invariant_kind_name(request.kind) +
                                    "' does not live in (x, w)");
    switch (request.kind) {
        case InvariantKind::mu_char: {
            RationalPoly p = mu_char_exotic(spec);
            return request.mode == VariableMode::xw ? p : expand_x_to_tuv(p);
        }
        case InvariantKind::mu_rep: {
            RationalPoly p = mu_rep_exotic(spec);
            return request.mode == VariableMode::xw ? p : expand_xw_to_tuv(p);
        }
        case InvariantKind::poincare: return poincare_poly(expand_xw_to_tuv(mu_rep_exotic(spec)));
        case InvariantKind::e_poly: return e_polynomial(expand_xw_to_tuv(mu_rep_exotic(spec)));
        case InvariantKind::euler_char:
            return RationalPoly::constant(
                {}, mpq_class(euler_characteristic(expand_xw_to_tuv(mu_rep_exotic(spec)))));
        case InvariantKind::total_dim:
            return RationalPoly::constant(
                {}, mpq_class(total_dimension(expand_xw_to_tuv(mu_rep_exotic(spec)))));
        default:
            throw std::invalid_argument("invariant kind '" + invariant_kind_name(request.kind) +
                                        "' is not defined for central-quotient groups");
    }
}

}  // namespace

RationalPoly assemble(const GroupDescriptor& group, const InvariantRequest& request) {
    if (group.atoms.empty()) throw std::invalid_argument("empty group descriptor");
    if (group.quotient) return assemble_exotic(group, request);
    return assemble_atoms(group, request);
}

}  // namespace mhp
