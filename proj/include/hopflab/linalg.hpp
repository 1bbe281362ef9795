#pragma once

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace hopflab {

using Vec = std::vector<Scalar>;

/// Dense matrix over an exact field.  Row-major; deterministic elimination
/// (pivot = first nonzero entry in index order) so results are reproducible.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(int r, int c, const FieldSpec& f) : rows(r), cols(c), a(size_t(r) * c, Scalar::zero(f)) {}

    Scalar& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Scalar& at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static Mat identity(int n, const FieldSpec& f) {
        Mat m(n, n, f);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }
};

inline Vec zero_vec(int n, const FieldSpec& f) { return Vec(n, Scalar::zero(f)); }

inline bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), errc::shape_mismatch, "vector size mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), errc::shape_mismatch, "vector size mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

inline Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = c * x;
    return r;
}

inline Mat mat_mul(const Mat& A, const Mat& B) {
    require(A.cols == B.rows, errc::shape_mismatch, "matrix product shape mismatch");
    FieldSpec f = A.a.empty() ? (B.a.empty() ? FieldSpec::Q() : B.a[0].field()) : A.a[0].field();
    Mat C(A.rows, B.cols, f);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            if (A.at(i, k).is_zero()) continue;
            for (int j = 0; j < B.cols; ++j) {
                if (B.at(k, j).is_zero()) continue;
                C.at(i, j) = C.at(i, j) + A.at(i, k) * B.at(k, j);
            }
        }
    return C;
}

inline Vec mat_vec(const Mat& A, const Vec& v) {
    require(A.cols == int(v.size()), errc::shape_mismatch, "matrix-vector shape mismatch");
    FieldSpec f = A.a.empty() ? FieldSpec::Q() : A.a[0].field();
    Vec r = zero_vec(A.rows, f);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            if (A.at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] = r[i] + A.at(i, j) * v[j];
        }
    return r;
}

inline Mat mat_transpose(const Mat& A) {
    FieldSpec f = A.a.empty() ? FieldSpec::Q() : A.a[0].field();
    Mat T(A.cols, A.rows, f);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

namespace detail {

// Row echelon form in place; returns pivot column per eliminated row.
inline std::vector<int> row_reduce(Mat& M) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < M.cols && row < M.rows; ++col) {
        int pr = -1;
        for (int r = row; r < M.rows; ++r)
            if (!M.at(r, col).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = 0; c < M.cols; ++c) std::swap(M.at(pr, c), M.at(row, c));
        Scalar inv = M.at(row, col).inverse();
        for (int c = col; c < M.cols; ++c) M.at(row, c) = inv * M.at(row, c);
        for (int r = 0; r < M.rows; ++r) {
            if (r == row || M.at(r, col).is_zero()) continue;
            Scalar factor = M.at(r, col);
            for (int c = col; c < M.cols; ++c) M.at(r, c) = M.at(r, c) - factor * M.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

inline int mat_rank(Mat M) { return int(detail::row_reduce(M).size()); }

/// Solves A x = b; nullopt when inconsistent.  With free variables the
/// deterministic solution setting all free variables to zero is returned.
inline std::optional<Vec> mat_solve(const Mat& A, const Vec& b) {
    require(A.rows == int(b.size()), errc::shape_mismatch, "solve shape mismatch");
    FieldSpec f = A.a.empty() ? (b.empty() ? FieldSpec::Q() : b[0].field()) : A.a[0].field();
    Mat M(A.rows, A.cols + 1, f);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, A.cols) = b[i];
    }
    auto pivots = detail::row_reduce(M);
    for (size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] == A.cols) return std::nullopt; // pivot in rhs column
    Vec x = zero_vec(A.cols, f);
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = M.at(int(k), A.cols);
    // rows below the pivot rows must be consistent (0 = 0) -- guaranteed by echelon form
    return x;
}

inline std::optional<Mat> mat_inverse(const Mat& A) {
    require(A.rows == A.cols, errc::shape_mismatch, "inverse of non-square matrix");
    FieldSpec f = A.a.empty() ? FieldSpec::Q() : A.a[0].field();
    int n = A.rows;
    Mat M(n, 2 * n, f);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, n + i) = Scalar::one(f);
    }
    auto pivots = detail::row_reduce(M);
    // all pivots must land in the left block, otherwise A is singular
    if (int(pivots.size()) < n || pivots[n - 1] >= n) return std::nullopt;
    Mat R(n, n, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R.at(i, j) = M.at(i, n + j);
    return R;
}

/// Basis of the null space of A, one vector per free column, in column order.
inline std::vector<Vec> mat_kernel(Mat M) {
    FieldSpec f = M.a.empty() ? FieldSpec::Q() : M.a[0].field();
    int cols = M.cols;
    auto pivots = detail::row_reduce(M);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(cols, f);
        v[free] = Scalar::one(f);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -M.at(int(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace hopflab
