#include "mhp/rational_poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mhp {

unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // Same degree: a precedes b when a is lexicographically larger, so x^2
    // sorts before x*w which sorts before w^2 under variable order (x, w).
    return b < a;
}

RationalPoly::RationalPoly(VarList vars) : vars_(std::move(vars)) {}

RationalPoly RationalPoly::zero(VarList vars) { return RationalPoly(std::move(vars)); }

RationalPoly RationalPoly::constant(VarList vars, const mpq_class& c) {
    RationalPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    return p;
}

RationalPoly RationalPoly::variable(const VarList& vars, const std::string& name) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == name) {
            Exponents e(vars.size(), 0);
            e[i] = 1;
            return monomial(vars, std::move(e), 1);
        }
    }
    throw std::invalid_argument("unknown variable '" + name + "'");
}

RationalPoly RationalPoly::monomial(VarList vars, Exponents exps, const mpq_class& c) {
    if (exps.size() != vars.size())
        throw std::invalid_argument("exponent vector length does not match variable list");
    RationalPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(std::move(exps), c);
    return p;
}

bool RationalPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

mpq_class RationalPoly::constant_term() const {
    return coefficient(Exponents(vars_.size(), 0));
}

mpq_class RationalPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

unsigned RationalPoly::degree() const {
    if (terms_.empty()) return 0;
    return total_degree(terms_.rbegin()->first);
}

unsigned RationalPoly::var_degree(std::size_t var_index) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        if (e[var_index] > d) d = e[var_index];
    return d;
}

bool RationalPoly::has_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

namespace {

void require_same_vars(const RationalPoly& a, const RationalPoly& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("polynomials over different variable lists");
}

}  // namespace

void RationalPoly::add_term(const Exponents& exps, const mpq_class& c) {
    if (exps.size() != vars_.size())
        throw std::invalid_argument("exponent vector length does not match variable list");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
    require_same_vars(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
    require_same_vars(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

RationalPoly& RationalPoly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

RationalPoly& RationalPoly::operator/=(const mpq_class& c) {
    if (c == 0) throw std::domain_error("division of polynomial by zero scalar");
    for (auto& [e, coeff] : terms_) coeff /= c;
    return *this;
}

RationalPoly RationalPoly::scale_exponents(unsigned k) const {
    if (k == 0) {
        // f(vars^0) collapses every monomial to its coefficient.
        mpq_class sum = 0;
        for (const auto& [e, c] : terms_) sum += c;
        return constant(vars_, sum);
    }
    RationalPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents scaled(e);
        for (auto& x : scaled) x *= k;
        r.terms_.emplace(std::move(scaled), c);
    }
    return r;
}

RationalPoly RationalPoly::truncate_total_degree(unsigned bound) const {
    RationalPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) > bound) break;  // terms are degree-sorted
        r.terms_.emplace(e, c);
    }
    return r;
}

RationalPoly RationalPoly::truncate_var_degree(std::size_t var_index, unsigned bound) const {
    RationalPoly r(vars_);
    for (const auto& [e, c] : terms_)
        if (e[var_index] <= bound) r.terms_.emplace(e, c);
    return r;
}

mpq_class RationalPoly::eval(const std::vector<mpq_class>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("evaluation point has wrong dimension");
    mpq_class result = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), point[i].get_num().get_mpz_t(), e[i]);
            mpz_pow_ui(den.get_mpz_t(), point[i].get_den().get_mpz_t(), e[i]);
            term *= mpq_class(num, den);
        }
        result += term;
    }
    return result;
}

RationalPoly operator+(RationalPoly a, const RationalPoly& b) {
    a += b;
    return a;
}

RationalPoly operator-(RationalPoly a, const RationalPoly& b) {
    a -= b;
    return a;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    require_same_vars(a, b);
    RationalPoly r(a.vars());
    Exponents e(a.vars().size());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

RationalPoly operator*(RationalPoly a, const mpq_class& c) {
    a *= c;
    return a;
}

RationalPoly operator*(const mpq_class& c, RationalPoly a) {
    a *= c;
    return a;
}

RationalPoly pow(const RationalPoly& base, unsigned exponent) {
    RationalPoly result = RationalPoly::constant(base.vars(), 1);
    RationalPoly sq = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result *= sq;
        e >>= 1u;
        if (e > 0) sq *= sq;
    }
    return result;
}

RationalPoly div_exact(const RationalPoly& a, const RationalPoly& b) {
    require_same_vars(a, b);
    if (b.is_zero()) throw std::domain_error("exact division by zero polynomial");
    RationalPoly quotient(a.vars());
    RationalPoly remainder = a;
    const auto& lead_b = *b.terms().rbegin();
    while (!remainder.is_zero()) {
        const auto& lead_r = *remainder.terms().rbegin();
        Exponents q_exp(lead_r.first.size());
        for (std::size_t i = 0; i < q_exp.size(); ++i) {
            if (lead_r.first[i] < lead_b.first[i])
                throw std::domain_error("non-exact polynomial division");
            q_exp[i] = lead_r.first[i] - lead_b.first[i];
        }
        mpq_class q_coeff = lead_r.second / lead_b.second;
        quotient.add_term(q_exp, q_coeff);
        RationalPoly t = RationalPoly::monomial(a.vars(), std::move(q_exp), q_coeff);
        remainder -= t * b;
    }
    return quotient;
}

RationalPoly substitute(const RationalPoly& p, const std::vector<RationalPoly>& bindings) {
    if (bindings.size() != p.vars().size())
        throw std::invalid_argument("binding count does not match variable list");
    for (const auto& b : bindings)
        if (b.vars() != bindings.front().vars())
            throw std::invalid_argument("substitution targets differ in variable list");
    const VarList& target = bindings.empty() ? p.vars() : bindings.front().vars();
    // Powers of each binding are cached; exponents repeat heavily across terms.
    std::vector<std::vector<RationalPoly>> powers(bindings.size());
    for (std::size_t i = 0; i < bindings.size(); ++i)
        powers[i].push_back(RationalPoly::constant(target, 1));
    RationalPoly result(target);
    for (const auto& [e, c] : p.terms()) {
        RationalPoly term = RationalPoly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * bindings[i]);
            if (e[i] > 0) term *= powers[i][e[i]];
        }
        result += term;
    }
    return result;
}

namespace {

void append_monomial_plain(std::ostringstream& out, const VarList& vars, const Exponents& e,
                           const mpq_class& abs_coeff) {
    bool trivial_monomial = total_degree(e) == 0;
    bool need_coeff = trivial_monomial || abs_coeff != 1;
    if (need_coeff) out << abs_coeff.get_str();
    bool first_factor = !need_coeff;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first_factor || need_coeff) out << "*";
        out << vars[i];
        if (e[i] > 1) out << "^" << e[i];
        first_factor = false;
    }
}

void append_monomial_latex(std::ostringstream& out, const VarList& vars, const Exponents& e,
                           const mpq_class& abs_coeff) {
    bool trivial_monomial = total_degree(e) == 0;
    if (trivial_monomial || abs_coeff != 1) {
        if (abs_coeff.get_den() == 1)
            out << abs_coeff.get_str();
        else
            out << "\\frac{" << abs_coeff.get_num().get_str() << "}{"
                << abs_coeff.get_den().get_str() << "}";
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (e[i] == 0) continue;
        out << vars[i];
        if (e[i] > 1) out << "^{" << e[i] << "}";
    }
}

}  // namespace

std::string to_plain(const RationalPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        append_monomial_plain(out, p.vars(), e, abs(c));
        first = false;
    }
    return out.str();
}

std::string to_latex(const RationalPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        append_monomial_latex(out, p.vars(), e, abs(c));
        first = false;
    }
    return out.str();
}

namespace {

struct Parser {
    const VarList& vars;
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return text[pos];
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + what);
    }

    mpz_class parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return mpz_class(text.substr(start, pos - start));
    }

    std::optional<std::size_t> try_parse_var() {
        skip_ws();
        std::size_t best_len = 0;
        std::size_t best_index = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const std::string& v = vars[i];
            if (v.size() > best_len && text.compare(pos, v.size(), v) == 0) {
                best_len = v.size();
                best_index = i;
            }
        }
        if (best_len == 0) return std::nullopt;
        pos += best_len;
        return best_index;
    }

    // term := [coefficient] ('*'? var ['^' int])*
    void parse_term(RationalPoly& acc, bool negate) {
        mpq_class coeff(1);
        bool saw_coeff = false;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num = parse_integer();
            mpz_class den(1);
            if (!eof() && peek() == '/') {
                ++pos;
                den = parse_integer();
                if (den == 0) fail("zero denominator");
            }
            coeff = mpq_class(num, den);
            coeff.canonicalize();
            saw_coeff = true;
        }
        Exponents exps(vars.size(), 0);
        bool saw_factor = false;
        while (!eof()) {
            skip_ws();
            if (text[pos] == '*') {
                ++pos;
                skip_ws();
            } else if (saw_coeff || saw_factor) {
                // Factors after the first must be '*'-joined; anything else
                // ends the term.
                if (text[pos] == '+' || text[pos] == '-') break;
                if (try_parse_var()) fail("missing '*' between factors");
                break;
            }
            auto vi = try_parse_var();
            if (!vi) {
                if (!saw_coeff && !saw_factor) fail("expected coefficient or variable");
                fail("expected variable after '*'");
            }
            unsigned e = 1;
            if (!eof() && peek() == '^') {
                ++pos;
                e = static_cast<unsigned>(parse_integer().get_ui());
            }
            exps[*vi] += e;
            saw_factor = true;
        }
        if (!saw_coeff && !saw_factor) fail("empty term");
        acc.add_term(exps, negate ? -coeff : coeff);
    }

    RationalPoly run() {
        RationalPoly acc(vars);
        if (eof()) fail("empty input");
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos;
        }
        parse_term(acc, negate);
        while (!eof()) {
            char s = peek();
            if (s != '+' && s != '-') fail("expected '+' or '-'");
            ++pos;
            parse_term(acc, s == '-');
        }
        return acc;
    }
};

}  // namespace

RationalPoly parse_poly(const VarList& vars, const std::string& text) {
    if (text == "0") return RationalPoly::zero(vars);
    Parser parser{vars, text};
    return parser.run();
}

}  // namespace mhp
