#include "invchain/lattice/int_matrix.hpp"

#include "invchain/error.hpp"

namespace invchain {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<IntVector> big;
    big.reserve(rows.size());
    for (const auto& r : rows) big.push_back(to_int_vector(r));
    return from_rows(big);
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InputError("matrix rows have different lengths");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
    return from_rows(columns, rows).transpose();
}

IntVector IntMatrix::row(std::size_t i) const { return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

IntVector IntMatrix::column(std::size_t j) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

IntVector IntMatrix::diagonal() const {
    IntVector d;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
    return d;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
    if (!labels_.empty()) std::swap(labels_[a], labels_[b]);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::set_labels(std::vector<Variable> labels) {
    if (!labels.empty() && labels.size() != cols_)
        throw InputError("label count " + std::to_string(labels.size()) + " does not match column count " +
                         std::to_string(cols_));
    labels_ = std::move(labels);
}

std::string IntMatrix::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out += '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out += ' ';
            out += (*this)(i, j).get_str();
        }
        out += "]\n";
    }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix dimension mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const auto& x = a(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(l, j);
        }
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
    if (a.cols_ != x.size()) throw InputError("matrix-vector dimension mismatch");
    IntVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
}

IntVector to_int_vector(const std::vector<std::int64_t>& v) {
    IntVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

std::vector<std::int64_t> to_int64_vector(const IntVector& v) {
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.fits_slong_p()) throw ResourceError("integer " + x.get_str() + " does not fit in 64 bits");
        out.push_back(x.get_si());
    }
    return out;
}

}  // namespace invchain
