#include "invchain/lattice/normal_form.hpp"

#include <algorithm>

#include "invchain/error.hpp"

namespace invchain {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Index of the row i >= from with A(i, j) != 0 of least absolute value.
std::optional<std::size_t> min_pivot_row(const IntMatrix& A, std::size_t from, std::size_t j) {
    std::optional<std::size_t> best;
    for (std::size_t i = from; i < A.rows(); ++i) {
        if (A(i, j) == 0) continue;
        if (!best || abs(A(i, j)) < abs(A(*best, j))) best = i;
    }
    return best;
}

}  // namespace

NormalFormResult hnf(const IntMatrix& A) {
    IntMatrix H = A;
    IntMatrix U = IntMatrix::identity(A.rows());
    std::size_t r = 0;
    for (std::size_t j = 0; j < H.cols() && r < H.rows(); ++j) {
        bool any = false;
        while (auto p = min_pivot_row(H, r, j)) {
            any = true;
            H.swap_rows(r, *p);
            U.swap_rows(r, *p);
            bool clean = true;
            for (std::size_t i = r + 1; i < H.rows(); ++i) {
                if (H(i, j) == 0) continue;
                Integer q = floor_div(H(i, j), H(r, j));
                H.add_row_multiple(i, r, -q);
                U.add_row_multiple(i, r, -q);
                if (H(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!any) continue;
        if (H(r, j) < 0) {
            H.negate_row(r);
            U.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = floor_div(H(i, j), H(r, j));
            H.add_row_multiple(i, r, -q);
            U.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    H.set_labels(A.labels());
    return {std::move(H), std::move(U), std::nullopt, r};
}

NormalFormResult snf(const IntMatrix& A) {
    IntMatrix D = A;
    D.set_labels({});
    IntMatrix U = IntMatrix::identity(A.rows());
    IntMatrix V = IntMatrix::identity(A.cols());
    const std::size_t m = D.rows(), n = D.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0 && (!best || abs(D(i, j)) < abs(D(best->first, best->second)))) best = {{i, j}};
            if (!best) goto done;
            D.swap_rows(t, best->first);
            U.swap_rows(t, best->first);
            D.swap_cols(t, best->second);
            V.swap_cols(t, best->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                Integer q = floor_div(D(i, t), D(t, t));
                D.add_row_multiple(i, t, -q);
                U.add_row_multiple(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                Integer q = floor_div(D(t, j), D(t, t));
                D.add_col_multiple(j, t, -q);
                V.add_col_multiple(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce divisibility of the remaining block by the pivot.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < m && !bad_row; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            D.add_row_multiple(t, *bad_row, 1);
            U.add_row_multiple(t, *bad_row, 1);
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
done:
    std::size_t rank = 0;
    for (std::size_t i = 0; i < std::min(m, n); ++i)
        if (D(i, i) != 0) ++rank;
    return {std::move(D), std::move(U), std::move(V), rank};
}

Integer determinant(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    IntMatrix M = A;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M(p, k) == 0) ++p;
            if (p == n) return 0;
            M.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M(i, j) = v;
            }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

std::vector<IntVector> kernel_basis(const IntMatrix& A) {
    auto res = hnf(A.transpose());
    std::vector<IntVector> out;
    for (std::size_t i = res.rank; i < res.U.rows(); ++i) out.push_back(res.U.row(i));
    return out;
}

std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b) {
    if (b.size() != A.rows()) throw InputError("right-hand side has the wrong length");
    auto res = hnf(A.transpose());
    const auto& H = res.D;
    IntVector residual = b;
    IntVector c(H.rows());
    std::size_t col = 0;
    for (std::size_t r = 0; r < res.rank; ++r) {
        while (H(r, col) == 0) {
            if (residual[col] != 0) return std::nullopt;
            ++col;
        }
        if (residual[col] % H(r, col) != 0) return std::nullopt;
        c[r] = residual[col] / H(r, col);
        for (std::size_t j = col; j < H.cols(); ++j) residual[j] -= c[r] * H(r, j);
        ++col;
    }
    for (const auto& x : residual)
        if (x != 0) return std::nullopt;
    IntVector x(A.cols());
    for (std::size_t r = 0; r < res.rank; ++r)
        if (c[r] != 0)
            for (std::size_t j = 0; j < A.cols(); ++j) x[j] += c[r] * res.U(r, j);
    if (A * x != b) throw VerificationError("integer solve produced a wrong solution");
    return x;
}

std::size_t LatticeBasis::pivot(const IntVector& r) const {
    for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] != 0) return j;
    return r.size();
}

void LatticeBasis::size_reduce() {
    for (std::size_t s = rows_.size(); s-- > 0;) {
        std::size_t p = pivot(rows_[s]);
        for (std::size_t r = 0; r < s; ++r) {
            if (rows_[r][p] == 0) continue;
            Integer q = floor_div(rows_[r][p], rows_[s][p]);
            for (std::size_t j = p; j < dim_; ++j) rows_[r][j] -= q * rows_[s][j];
        }
    }
    adds_since_reduce_ = 0;
}

void LatticeBasis::add(IntVector v) {
    if (v.size() != dim_) throw InputError("lattice vector has the wrong dimension");
    if (++adds_since_reduce_ >= 128) size_reduce();
    std::size_t at = 0;
    while (true) {
        std::size_t p = pivot(v);
        if (p == dim_) return;
        while (at < rows_.size() && pivot(rows_[at]) < p) ++at;
        if (at == rows_.size() || pivot(rows_[at]) > p) {
            if (v[p] < 0)
                for (auto& x : v) x = -x;
            rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
            return;
        }
        auto& row = rows_[at];
        // Euclid on the pivot entries of row and v.
        while (v[p] != 0) {
            Integer q = floor_div(row[p], v[p]);
            for (std::size_t j = p; j < dim_; ++j) row[j] -= q * v[j];
            std::swap(row, v);
        }
        if (row[p] < 0)
            for (auto& x : row) x = -x;
    }
}

bool LatticeBasis::contains(const IntVector& v) const {
    if (v.size() != dim_) return false;
    IntVector w = v;
    for (const auto& row : rows_) {
        std::size_t p = pivot(row);
        for (std::size_t j = 0; j < p; ++j)
            if (w[j] != 0) return false;
        if (w[p] % row[p] != 0) return false;
        Integer q = w[p] / row[p];
        for (std::size_t j = p; j < dim_; ++j) w[j] -= q * row[j];
    }
    return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix LatticeBasis::hermite() const {
    return hnf(IntMatrix::from_rows(rows_, dim_)).D;
}

}  // namespace invchain
