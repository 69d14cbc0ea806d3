#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "torstab/errors.hpp"

namespace torstab {

// All lattice arithmetic is exact. Int/Rat wrap GMP; no operation in the
// library ever touches floating point.
using Int = mpz_class;
using Rat = mpq_class;

// Column vector in the cocharacter lattice N (ray generators, 1-PS vectors).
struct LatticeVector {
    std::vector<Int> c;

    LatticeVector() = default;
    explicit LatticeVector(std::vector<Int> coords) : c(std::move(coords)) {}
    LatticeVector(std::initializer_list<long> coords) {
        for (long x : coords) c.emplace_back(x);
    }

    std::size_t rank() const { return c.size(); }
    bool is_zero() const;

    bool operator==(const LatticeVector& o) const { return c == o.c; }
    // Lexicographic; used for canonical orderings only.
    std::strong_ordering operator<=>(const LatticeVector& o) const;
};

// Row vector in the character lattice N* (weights, roots, separating vectors).
// Kept as a distinct type so pairings can't be formed accidentally backwards.
struct DualVector {
    std::vector<Int> c;

    DualVector() = default;
    explicit DualVector(std::vector<Int> coords) : c(std::move(coords)) {}
    DualVector(std::initializer_list<long> coords) {
        for (long x : coords) c.emplace_back(x);
    }

    std::size_t rank() const { return c.size(); }
    bool is_zero() const;

    bool operator==(const DualVector& o) const { return c == o.c; }
    std::strong_ordering operator<=>(const DualVector& o) const;
};

DualVector negate(const DualVector& r);
LatticeVector negate(const LatticeVector& v);
DualVector add(const DualVector& a, const DualVector& b);
LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector sub(const LatticeVector& a, const LatticeVector& b);
LatticeVector scale(const Int& k, const LatticeVector& v);
DualVector scale(const Int& k, const DualVector& r);

// Canonical pairing <R, v>. Throws rank_mismatch.
Int pairing(const DualVector& r, const LatticeVector& v);

// v / gcd(coords). Throws zero_vector.
LatticeVector primitive(const LatticeVector& v);
DualVector primitive(const DualVector& r);

// 2x2 determinant of (u, v). Throws rank_mismatch unless both have rank 2.
Int det2(const LatticeVector& u, const LatticeVector& v);

// Square integer matrix acting on N by v -> M v. |det M| must be 1 for the
// change-of-basis entry points below.
struct IntMatrix {
    std::vector<std::vector<Int>> m; // row-major

    std::size_t rows() const { return m.size(); }
    std::size_t cols() const { return m.empty() ? 0 : m[0].size(); }
};

Int det(const IntMatrix& M);
IntMatrix transpose(const IntMatrix& M);
// Inverse of a matrix with det = +-1 (integer adjugate). Throws not_unimodular.
IntMatrix unimodular_inverse(const IntMatrix& M);

// Basis change: lattice vectors map by v -> M v, dual vectors by R -> M^-T R,
// so pairings are preserved. Throws not_unimodular / rank_mismatch.
LatticeVector change_of_basis(const IntMatrix& M, const LatticeVector& v);
DualVector change_of_basis(const IntMatrix& M, const DualVector& r);

// "2e1*-e2*" style label for report output; zero coefficients are omitted.
std::string weight_label(const DualVector& r);
std::string coords_label(const std::vector<Int>& c);

} // namespace torstab
