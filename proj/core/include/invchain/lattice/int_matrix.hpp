#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "invchain/algebra/variable.hpp"

namespace invchain {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers. Columns may carry
/// variable labels (tuple or multiset); labels are kept through transforms
/// that act on rows only.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);
    /// Matrix whose columns are the given vectors (all of equal length).
    static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    IntMatrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;
    /// Zero off the diagonal.
    bool is_diagonal() const;
    IntVector diagonal() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += c * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& c);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    const std::vector<Variable>& labels() const { return labels_; }
    void set_labels(std::vector<Variable> labels);
    bool has_labels() const { return !labels_.empty(); }

    std::string to_string() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntVector operator*(const IntMatrix& a, const IntVector& x);
    /// Entry equality only; labels are ignored.
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
    std::vector<Variable> labels_;
};

IntVector to_int_vector(const std::vector<std::int64_t>& v);
/// Throws ResourceError if an entry does not fit.
std::vector<std::int64_t> to_int64_vector(const IntVector& v);

}  // namespace invchain
