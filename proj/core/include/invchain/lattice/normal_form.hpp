#pragma once

#include <optional>
#include <vector>

#include "invchain/lattice/int_matrix.hpp"

namespace invchain {

/// U * A * V = D. For the Hermite form V is absent and U * A = D.
struct NormalFormResult {
    IntMatrix D;
    IntMatrix U;
    std::optional<IntMatrix> V;
    /// Number of nonzero rows of D.
    std::size_t rank = 0;
};

/// Row Hermite normal form U * A = H: H is in row echelon form, pivots are
/// positive and entries above a pivot lie in [0, pivot). H is uniquely
/// determined by the row lattice of A; its nonzero rows are a basis of it.
/// Elimination picks the pivot of least absolute value at each step.
NormalFormResult hnf(const IntMatrix& A);

/// Smith normal form U * A * V = D with nonnegative diagonal d_1 | d_2 | ...
NormalFormResult snf(const IntMatrix& A);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& A);

/// Z-basis of {x : A x = 0}.
std::vector<IntVector> kernel_basis(const IntMatrix& A);

/// Some x with A x = b over Z, or nothing if b is outside the column lattice.
std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b);

/// Incrementally maintained basis of a sublattice of Z^n in echelon form.
/// Used to compare lattices generated by many vectors without building the
/// full transform.
class LatticeBasis {
public:
    explicit LatticeBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    void add(IntVector v);
    void add(const std::vector<std::int64_t>& v) { add(to_int_vector(v)); }
    bool contains(const IntVector& v) const;
    /// Canonical Hermite basis; equal lattices give equal matrices.
    IntMatrix hermite() const;

    friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
        return a.dim_ == b.dim_ && a.hermite() == b.hermite();
    }

private:
    std::size_t pivot(const IntVector& r) const;
    /// Reduces entries above each pivot modulo the pivot.
    void size_reduce();
    std::size_t dim_;
    std::size_t adds_since_reduce_ = 0;
    std::vector<IntVector> rows_;  // sorted by pivot column
};

}  // namespace invchain
