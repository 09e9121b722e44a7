#ifndef MHP_WEYL_HPP
#define MHP_WEYL_HPP

// Conjugacy-class data for Weyl groups acting on the character lattice of a
// maximal torus, reduced to what the invariant formulas consume: for each
// class a signed cycle pattern, a class size, and the characteristic
// polynomial factors the pattern induces.
//
// Patterns describe the action on the standard lattice.  For SL(n) the
// natural representation is the fixed-sum sublattice of rank n-1, which we
// handle by keeping the full S_n cycle pattern and dividing one (1 -+ s)
// factor out of every determinant; fixed_line_reductions counts how many
// such divisions apply (one per SL factor in a product).

#include "mhp/partitions.hpp"
#include "mhp/rational_poly.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mhp {

enum class WeylFamily {
    symmetric_gl,   // S_n on the rank-n lattice of GL(n)
    symmetric_sl,   // S_n on the rank-(n-1) lattice of SL(n)
    hyperoctahedral,  // signed permutations, Sp(2n)
    torus,          // trivial group on a rank-k lattice
    product,        // direct product of atom tables
};

struct CyclePattern {
    std::vector<int> positive_cycles;  // weakly decreasing
    std::vector<int> negative_cycles;  // weakly decreasing
    int fixed_line_reductions = 0;

    int symbol_size() const;  // sum of all cycle lengths
    auto operator<=>(const CyclePattern&) const = default;
};

struct WeylClass {
    CyclePattern pattern;
    mpz_class size;
};

struct WeylClassTable {
    WeylFamily family;
    int torus_rank = 0;
    std::vector<WeylClass> classes;
    mpz_class group_order;
    std::vector<int> exponents;  // characteristic exponents d_i, one per rank

    // Throws std::logic_error if class sizes do not sum to group_order or an
    // exponent/rank count mismatches.  Every constructor checks this.
    void validate() const;
};

enum class Sign { plus, minus };

// det(I + sA) (plus) or det(I - sA) (minus) for a lattice automorphism A
// with the given signed cycle pattern; s may be any polynomial scalar.  A
// positive j-cycle contributes 1 - (-+s)^j, a negative j-cycle 1 + (-+s)^j,
// and each fixed-line reduction divides by (1 -+ s).
RationalPoly char_poly(const CyclePattern& p, Sign sign, const RationalPoly& scalar);

// det(sI + A) (plus) or det(sI - A) (minus), the reversed companion of
// char_poly; same contract.
RationalPoly char_poly_reversed(const CyclePattern& p, Sign sign, const RationalPoly& scalar);

WeylClassTable symmetric_group_table(int n, bool sl);  // n >= 1
WeylClassTable hyperoctahedral_table(int n);           // n >= 1
WeylClassTable torus_table(int k);                     // k >= 0

// Independent construction by exhaustive enumeration of (signed) permutation
// matrices: characteristic polynomials come from cofactor expansion of the
// actual matrices and classes are grouped by that polynomial.  Restricted to
// n <= 6 for the symmetric families and n <= 4 hyperoctahedral; throws
// std::invalid_argument beyond.  Every element's cofactor determinant is
// cross-checked against the cycle-pattern product form and a mismatch throws
// std::logic_error.
WeylClassTable brute_force_table(WeylFamily family, int n);

// Direct product: cartesian classes with multiplied sizes, concatenated
// patterns and exponents, multiplied group orders.
WeylClassTable product_table(std::span<const WeylClassTable> factors);

// Collapses classes with identical det(I - lambda*A) into one, summing
// sizes.  All invariant formulas factor through that polynomial, so the
// merged table evaluates identically.
WeylClassTable merge_equal_char_polys(const WeylClassTable& table);

enum class AtomKind { gl, sl, sp, torus };

struct GroupAtom {
    AtomKind kind;
    int size;  // GL(n)/SL(n): n; Sp(2n): matrix size 2n; torus: rank

    int torus_rank() const;
    std::string str() const;
};

// A reductive group presented as a product of classical atoms, optionally
// marked as the quotient of SL(p)^m by a diagonal central subgroup of order
// p.  The marker changes which variety the invariants describe; plain atom
// products always refer to identity components.
struct GroupDescriptor {
    std::vector<GroupAtom> atoms;
    struct CentralQuotient {
        long p = 0;
        long m = 0;
    };
    std::optional<CentralQuotient> quotient;

    // Accepts strings like "SL:2", "Sp:4", "GL:3xGL:1", "T:2".  Throws
    // std::invalid_argument naming the offending token.
    static GroupDescriptor parse(const std::string& text);
    std::string str() const;
};

WeylClassTable atom_table(const GroupAtom& atom);
WeylClassTable descriptor_table(const GroupDescriptor& group);

}  // namespace mhp

#endif
