#include "mhp/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mhp {

int CyclePattern::symbol_size() const {
    int s = 0;
    for (int j : positive_cycles) s += j;
    for (int j : negative_cycles) s += j;
    return s;
}

void WeylClassTable::validate() const {
    if (static_cast<int>(exponents.size()) != torus_rank)
        throw std::logic_error("class table: exponent count does not match torus rank");
    mpz_class total(0);
    for (const auto& c : classes) {
        if (c.pattern.symbol_size() - c.pattern.fixed_line_reductions != torus_rank)
            throw std::logic_error("class table: pattern rank does not match torus rank");
        if (c.size <= 0) throw std::logic_error("class table: nonpositive class size");
        total += c.size;
    }
    if (total != group_order)
        throw std::logic_error("class table: class sizes do not sum to the group order");
}

RationalPoly char_poly(const CyclePattern& p, Sign sign, const RationalPoly& scalar) {
    const RationalPoly one = RationalPoly::constant(scalar.vars(), 1);
    // c = s for minus, -s for plus; blocks contribute 1 - c^j and 1 + c^j.
    const RationalPoly c = sign == Sign::minus ? scalar : -scalar;
    RationalPoly det = one;
    for (int j : p.positive_cycles) det *= one - pow(c, static_cast<unsigned>(j));
    for (int j : p.negative_cycles) det *= one + pow(c, static_cast<unsigned>(j));
    for (int k = 0; k < p.fixed_line_reductions; ++k) det = div_exact(det, one - c);
    return det;
}

RationalPoly char_poly_reversed(const CyclePattern& p, Sign sign, const RationalPoly& scalar) {
    const RationalPoly one = RationalPoly::constant(scalar.vars(), 1);
    RationalPoly det = one;
    for (int j : p.positive_cycles) {
        int unit = sign == Sign::minus ? -1 : (j % 2 == 1 ? 1 : -1);
        det *= pow(scalar, static_cast<unsigned>(j)) + mpq_class(unit) * one;
    }
    for (int j : p.negative_cycles) {
        int unit = sign == Sign::minus ? 1 : (j % 2 == 0 ? 1 : -1);
        det *= pow(scalar, static_cast<unsigned>(j)) + mpq_class(unit) * one;
    }
    const RationalPoly reducer =
        sign == Sign::minus ? scalar - one : scalar + one;
    for (int k = 0; k < p.fixed_line_reductions; ++k) det = div_exact(det, reducer);
    return det;
}

WeylClassTable symmetric_group_table(int n, bool sl) {
    if (n < 1) throw std::invalid_argument("symmetric_group_table: n must be >= 1");
    WeylClassTable t;
    t.family = sl ? WeylFamily::symmetric_sl : WeylFamily::symmetric_gl;
    t.torus_rank = sl ? n - 1 : n;
    t.group_order = factorial(n);
    for (int d = sl ? 2 : 1; d <= n; ++d) t.exponents.push_back(d);
    for (const auto& sigma : partitions_of(n)) {
        CyclePattern p{sigma, {}, sl ? 1 : 0};
        t.classes.push_back({std::move(p), symmetric_group_class_size(sigma)});
    }
    t.validate();
    return t;
}

WeylClassTable hyperoctahedral_table(int n) {
    if (n < 1) throw std::invalid_argument("hyperoctahedral_table: n must be >= 1");
    WeylClassTable t;
    t.family = WeylFamily::hyperoctahedral;
    t.torus_rank = n;
    t.group_order = factorial(n);
    mpz_mul_2exp(t.group_order.get_mpz_t(), t.group_order.get_mpz_t(), n);
    for (int d = 1; d <= n; ++d) t.exponents.push_back(2 * d);
    for (const auto& [alpha, beta] : bipartitions_of(n)) {
        CyclePattern p{alpha, beta, 0};
        t.classes.push_back({std::move(p), hyperoctahedral_class_size(alpha, beta)});
    }
    t.validate();
    return t;
}

WeylClassTable torus_table(int k) {
    if (k < 0) throw std::invalid_argument("torus_table: rank must be >= 0");
    WeylClassTable t;
    t.family = WeylFamily::torus;
    t.torus_rank = k;
    t.group_order = 1;
    t.exponents.assign(k, 1);
    CyclePattern identity{std::vector<int>(k, 1), {}, 0};
    t.classes.push_back({std::move(identity), 1});
    t.validate();
    return t;
}

namespace {

// Determinant by cofactor expansion along successive rows, skipping zero
// entries.  Matrices here have at most two nonzero entries per row, so the
// branching stays tiny.
RationalPoly matrix_determinant(const std::vector<std::vector<RationalPoly>>& m, const VarList& vars) {
    const std::size_t n = m.size();
    std::function<RationalPoly(std::size_t, unsigned)> rec =
        [&](std::size_t row, unsigned col_mask) -> RationalPoly {
        if (row == n) return RationalPoly::constant(vars, 1);
        RationalPoly acc = RationalPoly::zero(vars);
        int parity = 0;
        for (std::size_t col = 0; col < n; ++col) {
            if (!(col_mask & (1u << col))) continue;
            if (!m[row][col].is_zero()) {
                RationalPoly sub = rec(row + 1, col_mask & ~(1u << col));
                sub *= m[row][col];
                if (parity % 2 == 1) sub = -sub;
                acc += sub;
            }
            ++parity;
        }
        return acc;
    };
    return rec(0, (1u << n) - 1);
}

CyclePattern pattern_of_signed_permutation(const std::vector<int>& perm,
                                           const std::vector<int>& signs, int reductions) {
    const int n = static_cast<int>(perm.size());
    CyclePattern p;
    p.fixed_line_reductions = reductions;
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        int len = 0;
        int sign_product = 1;
        int i = start;
        do {
            seen[i] = true;
            sign_product *= signs[i];
            i = perm[i];
            ++len;
        } while (i != start);
        (sign_product == 1 ? p.positive_cycles : p.negative_cycles).push_back(len);
    }
    auto desc = [](std::vector<int>& v) { std::sort(v.begin(), v.end(), std::greater<int>()); };
    desc(p.positive_cycles);
    desc(p.negative_cycles);
    return p;
}

}  // namespace

WeylClassTable brute_force_table(WeylFamily family, int n) {
    const bool sl = family == WeylFamily::symmetric_sl;
    const bool hyper = family == WeylFamily::hyperoctahedral;
    if (family == WeylFamily::product)
        throw std::invalid_argument("brute_force_table covers atom families only");
    if (family == WeylFamily::torus) return torus_table(n);
    if (n < 1) throw std::invalid_argument("brute_force_table: n must be >= 1");
    if (hyper ? n > 4 : n > 6)
        throw std::invalid_argument("brute_force_table: rank beyond enumeration cap");

    const VarList lambda_vars{"lambda"};
    const RationalPoly lambda = RationalPoly::variable(lambda_vars, "lambda");
    const RationalPoly one = RationalPoly::constant(lambda_vars, 1);

    struct Bucket {
        CyclePattern pattern;
        mpz_class count;
    };
    // Keyed by the canonical text of det(I - lambda*A); map order makes the
    // resulting class order deterministic.
    std::map<std::string, Bucket> buckets;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const unsigned sign_patterns = hyper ? (1u << n) : 1u;
        for (unsigned bits = 0; bits < sign_patterns; ++bits) {
            std::vector<int> signs(n, 1);
            for (int i = 0; i < n; ++i)
                if (bits & (1u << i)) signs[i] = -1;
            // A e_i = signs[i] * e_{perm(i)}; M = I - lambda*A.
            std::vector<std::vector<RationalPoly>> m(
                n, std::vector<RationalPoly>(n, RationalPoly::zero(lambda_vars)));
            for (int i = 0; i < n; ++i) m[i][i] += one;
            for (int i = 0; i < n; ++i) m[perm[i]][i] -= mpq_class(signs[i]) * lambda;
            RationalPoly det = matrix_determinant(m, lambda_vars);
            CyclePattern pat = pattern_of_signed_permutation(perm, signs, sl ? 1 : 0);
            CyclePattern unreduced = pat;
            unreduced.fixed_line_reductions = 0;
            if (det != char_poly(unreduced, Sign::minus, lambda))
                throw std::logic_error("brute_force_table: cofactor determinant disagrees "
                                       "with cycle-pattern product");
            if (sl) det = div_exact(det, one - lambda);
            auto [it, inserted] = buckets.emplace(to_plain(det), Bucket{pat, 1});
            if (!inserted) it->second.count += 1;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    WeylClassTable t;
    t.family = family;
    t.torus_rank = sl ? n - 1 : n;
    t.group_order = factorial(n);
    if (hyper) mpz_mul_2exp(t.group_order.get_mpz_t(), t.group_order.get_mpz_t(), n);
    if (hyper) {
        for (int d = 1; d <= n; ++d) t.exponents.push_back(2 * d);
    } else {
        for (int d = sl ? 2 : 1; d <= n; ++d) t.exponents.push_back(d);
    }
    for (auto& [key, bucket] : buckets)
        t.classes.push_back({std::move(bucket.pattern), std::move(bucket.count)});
    t.validate();
    return t;
}

WeylClassTable product_table(std::span<const WeylClassTable> factors) {
    if (factors.empty()) throw std::invalid_argument("product_table: empty factor list");
    if (factors.size() == 1) return factors.front();
    WeylClassTable t;
    t.family = WeylFamily::product;
    t.torus_rank = 0;
    t.group_order = 1;
    t.classes.push_back({CyclePattern{}, 1});
    for (const auto& factor : factors) {
        t.torus_rank += factor.torus_rank;
        t.group_order *= factor.group_order;
        t.exponents.insert(t.exponents.end(), factor.exponents.begin(), factor.exponents.end());
        std::vector<WeylClass> next;
        next.reserve(t.classes.size() * factor.classes.size());
        for (const auto& left : t.classes) {
            for (const auto& right : factor.classes) {
                CyclePattern merged = left.pattern;
                merged.positive_cycles.insert(merged.positive_cycles.end(),
                                              right.pattern.positive_cycles.begin(),
                                              right.pattern.positive_cycles.end());
                merged.negative_cycles.insert(merged.negative_cycles.end(),
                                              right.pattern.negative_cycles.begin(),
                                              right.pattern.negative_cycles.end());
                merged.fixed_line_reductions += right.pattern.fixed_line_reductions;
                std::sort(merged.positive_cycles.begin(), merged.positive_cycles.end(),
                          std::greater<int>());
                std::sort(merged.negative_cycles.begin(), merged.negative_cycles.end(),
                          std::greater<int>());
                next.push_back({std::move(merged), left.size * right.size});
            }
        }
        t.classes = std::move(next);
    }
    std::sort(t.exponents.begin(), t.exponents.end());
    t.validate();
    return t;
}

WeylClassTable merge_equal_char_polys(const WeylClassTable& table) {
    const VarList lambda_vars{"lambda"};
    const RationalPoly lambda = RationalPoly::variable(lambda_vars, "lambda");
    WeylClassTable t;
    t.family = table.family;
    t.torus_rank = table.torus_rank;
    t.group_order = table.group_order;
    t.exponents = table.exponents;
    std::map<std::string, std::size_t> index_of;
    for (const auto& c : table.classes) {
        std::string key = to_plain(char_poly(c.pattern, Sign::minus, lambda));
        auto it = index_of.find(key);
        if (it == index_of.end()) {
            index_of.emplace(std::move(key), t.classes.size());
            t.classes.push_back(c);
        } else {
            t.classes[it->second].size += c.size;
        }
    }
    t.validate();
    return t;
}

int GroupAtom::torus_rank() const {
    switch (kind) {
        case AtomKind::gl: return size;
        case AtomKind::sl: return size - 1;
        case AtomKind::sp: return size / 2;
        case AtomKind::torus: return size;
    }
    throw std::logic_error("unreachable atom kind");
}

std::string GroupAtom::str() const {
    std::ostringstream out;
    switch (kind) {
        case AtomKind::gl: out << "GL:"; break;
        case AtomKind::sl: out << "SL:"; break;
        case AtomKind::sp: out << "Sp:"; break;
        case AtomKind::torus: out << "T:"; break;
    }
    out << size;
    return out.str();
}

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
    GroupDescriptor g;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t sep = text.find('x', pos);
        std::string token = text.substr(pos, sep == std::string::npos ? sep : sep - pos);
        auto bad = [&token](const std::string& why) {
            throw std::invalid_argument("bad group token '" + token + "': " + why);
        };
        std::size_t colon = token.find(':');
        if (colon == std::string::npos) bad("expected KIND:SIZE");
        std::string kind_text = token.substr(0, colon);
        std::string size_text = token.substr(colon + 1);
        AtomKind kind;
        if (kind_text == "GL") kind = AtomKind::gl;
        else if (kind_text == "SL") kind = AtomKind::sl;
        else if (kind_text == "Sp") kind = AtomKind::sp;
        else if (kind_text == "T") kind = AtomKind::torus;
        else bad("unknown family (expected GL, SL, Sp, or T)");
        int size = 0;
        try {
            std::size_t used = 0;
            size = std::stoi(size_text, &used);
            if (used != size_text.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            bad("size is not an integer");
        }
        if (size < 1) bad("size must be positive");
        if (kind == AtomKind::sp && size % 2 != 0) bad("Sp takes an even matrix size");
        g.atoms.push_back({kind, size});
        if (sep == std::string::npos) break;
        pos = sep + 1;
    }
    if (g.atoms.empty()) throw std::invalid_argument("empty group descriptor");
    return g;
}

std::string GroupDescriptor::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i > 0) out << "x";
        out << atoms[i].str();
    }
    return out.str();
}

WeylClassTable atom_table(const GroupAtom& atom) {
    switch (atom.kind) {
        case AtomKind::gl: return symmetric_group_table(atom.size, false);
        case AtomKind::sl: return symmetric_group_table(atom.size, true);
        case AtomKind::sp: return hyperoctahedral_table(atom.size / 2);
        case AtomKind::torus: return torus_table(atom.size);
    }
    throw std::logic_error("unreachable atom kind");
}

WeylClassTable descriptor_table(const GroupDescriptor& group) {
    std::vector<WeylClassTable> tables;
    tables.reserve(group.atoms.size());
    for (const auto& atom : group.atoms) tables.push_back(atom_table(atom));
    return product_table(tables);
}

}  // namespace mhp
