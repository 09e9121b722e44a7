#include "mhp/partitions.hpp"

#include <stdexcept>

namespace mhp {

namespace {

void extend(Partition& prefix, int remaining, int max_part, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        extend(prefix, remaining - part, part, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    Partition prefix;
    extend(prefix, n, n == 0 ? 1 : n, out);
    return out;
}

std::vector<std::pair<Partition, Partition>> bipartitions_of(int n) {
    if (n < 0) throw std::invalid_argument("bipartitions_of: negative n");
    std::vector<std::pair<Partition, Partition>> out;
    for (int a = n; a >= 0; --a) {
        for (const auto& alpha : partitions_of(a))
            for (const auto& beta : partitions_of(n - a)) out.emplace_back(alpha, beta);
    }
    return out;
}

mpz_class factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

int part_multiplicity(const Partition& p, int j) {
    int m = 0;
    for (int part : p)
        if (part == j) ++m;
    return m;
}

namespace {

mpz_class pow_z(mpz_class base, int e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// prod over distinct parts j of (c*j)^{m_j} * m_j!
mpz_class centralizer_factor(const Partition& p, int c) {
    mpz_class f(1);
    int max_part = p.empty() ? 0 : p.front();
    for (int j = 1; j <= max_part; ++j) {
        int m = part_multiplicity(p, j);
        if (m == 0) continue;
        f *= pow_z(mpz_class(c) * j, m) * factorial(m);
    }
    return f;
}

}  // namespace

mpz_class symmetric_group_class_size(const Partition& sigma) {
    int n = 0;
    for (int part : sigma) n += part;
    mpz_class size = factorial(n) / centralizer_factor(sigma, 1);
    return size;
}

mpz_class hyperoctahedral_class_size(const Partition& alpha, const Partition& beta) {
    int n = 0;
    for (int part : alpha) n += part;
    for (int part : beta) n += part;
    mpz_class order = pow_z(2, n) * factorial(n);
    return order / (centralizer_factor(alpha, 2) * centralizer_factor(beta, 2));
}

}  // namespace mhp
