#pragma once

#include <cstdint>
#include <vector>

#include "mv2/numeric.hpp"

namespace mv2 {

/// Vector over the two-element field, packed into one machine word. Ambient
/// dimensions here never exceed a handful, so 64 bits is ample.
struct F2Vector {
    std::uint64_t bits = 0;
    unsigned n = 0;

    F2Vector() = default;
    F2Vector(std::uint64_t b, unsigned len) : bits(b & mask(len)), n(len) {}

    static std::uint64_t mask(unsigned len) {
        return len >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << len) - 1);
    }
    bool get(unsigned i) const { return (bits >> i) & 1; }
    void set(unsigned i, bool v) {
        if (v)
            bits |= std::uint64_t(1) << i;
        else
            bits &= ~(std::uint64_t(1) << i);
    }
    F2Vector operator+(const F2Vector& o) const { return F2Vector(bits ^ o.bits, n); }
    /// Coordinatewise product (the Hadamard product entering det2's formula).
    F2Vector operator*(const F2Vector& o) const { return F2Vector(bits & o.bits, n); }
    bool operator==(const F2Vector& o) const { return n == o.n && bits == o.bits; }
};

/// Dense bit matrix over F2, one word per row.
struct F2Matrix {
    std::vector<std::uint64_t> rows;
    unsigned cols = 0;

    F2Matrix() = default;
    F2Matrix(unsigned r, unsigned c) : rows(r, 0), cols(c) {}
    unsigned row_count() const { return static_cast<unsigned>(rows.size()); }
    bool get(unsigned i, unsigned j) const { return (rows[i] >> j) & 1; }
    void set(unsigned i, unsigned j, bool v) {
        if (v)
            rows[i] |= std::uint64_t(1) << j;
        else
            rows[i] &= ~(std::uint64_t(1) << j);
    }
    static F2Matrix from_columns(const std::vector<F2Vector>& cols);
};

/// Coordinatewise parity of an integer vector.
F2Vector reduce_mod2(const IntVector& v);

int f2_rank(F2Matrix M);

/// Determinant over F2 (requires a square matrix).
int f2_det(F2Matrix M);

/// The 2-determinant of n+1 vectors in F2^n via the coordinate formula: the
/// sum over pairs i < j of the determinant of the n x n matrix whose first
/// n-1 columns are the remaining vectors in order and whose last column is
/// the coordinatewise product of vectors i and j. Production path.
int det2(const std::vector<F2Vector>& k);

/// Independent definitional path: 0 if the vectors span less than F2^n;
/// otherwise lambda_1 + ... + lambda_{n+1} + 1 for the unique nonzero kernel
/// relation lambda. Exists purely for cross-validation of det2.
int det2_oracle(const std::vector<F2Vector>& k);

/// Block formula: det2 of (head, tail) equals det2 of the head (inside its
/// own m-dimensional span) times the F2 determinant of the tail projected to
/// the quotient by that span. `head` must consist of m+1 vectors of rank m.
int det2_block(const std::vector<F2Vector>& head, const std::vector<F2Vector>& tail);

}  // namespace mv2
