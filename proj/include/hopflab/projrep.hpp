#pragma once

#include "galois.hpp"

namespace hopflab {

/// Projective representation (sigma, V, pi): an algebra morphism
/// pi : A(sigma) -> End(V), stored as one dim_V x dim_V matrix per basis
/// element of A.
struct ProjRep {
    std::shared_ptr<const HopfAlgebra> H;
    BiForm sigma;
    int dim_v = 0;
    std::vector<Mat> pi;

    Mat act(const Vec& a) const {
        Mat out(dim_v, dim_v, H->field);
        for (int i = 0; i < H->dim; ++i) {
            if (a[i].is_zero()) continue;
            for (int r = 0; r < dim_v; ++r)
                for (int c = 0; c < dim_v; ++c)
                    if (!pi[i].at(r, c).is_zero()) out.at(r, c) = out.at(r, c) + a[i] * pi[i].at(r, c);
        }
        return out;
    }
};

/// pi respects the sigma-twisted product and the unit.
inline bool check_projrep(const ProjRep& X) {
    const HopfAlgebra& H = *X.H;
    if (!is_lazy2(H, X.sigma) || !is_left_cocycle(H, X.sigma)) return false;
    if (X.act(H.unit) != Mat::identity(X.dim_v, H.field)) return false;
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) {
            Vec prod = left_twist_mul(H, X.sigma, basis_vec(H, i), basis_vec(H, j));
            if (X.act(prod) != mat_mul(X.pi[i], X.pi[j])) return false;
        }
    return true;
}

inline std::optional<std::vector<int>> projrep_fail(const ProjRep& X) {
    const HopfAlgebra& H = *X.H;
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) {
            Vec prod = left_twist_mul(H, X.sigma, basis_vec(H, i), basis_vec(H, j));
            if (X.act(prod) != mat_mul(X.pi[i], X.pi[j])) return std::vector<int>{i, j};
        }
    return std::nullopt;
}

/// Left multiplication of _sigma A on itself.
inline ProjRep regular_projrep(std::shared_ptr<const HopfAlgebra> Hp, const BiForm& sigma) {
    const HopfAlgebra& H = *Hp;
    require(is_lazy2(H, sigma), errc::not_lazy, "projective representations need lazy cocycles");
    require(is_left_cocycle(H, sigma), errc::not_a_cocycle, "sigma is not a left 2-cocycle");
    ProjRep X;
    X.H = Hp;
    X.sigma = sigma;
    X.dim_v = H.dim;
    X.pi.resize(H.dim, Mat(H.dim, H.dim, H.field));
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) {
            Vec col = left_twist_mul(H, sigma, basis_vec(H, i), basis_vec(H, j));
            for (int m = 0; m < H.dim; ++m) X.pi[i].at(m, j) = col[m];
        }
    require(check_projrep(X), errc::internal, "regular representation fails the algebra-map check");
    return X;
}

inline Mat kron(const Mat& a, const Mat& b, const FieldSpec& F) {
    Mat out(a.rows * b.rows, a.cols * b.cols, F);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int r = 0; r < b.rows; ++r)
                for (int c = 0; c < b.cols; ++c)
                    if (!b.at(r, c).is_zero()) out.at(i * b.rows + r, j * b.cols + c) = a.at(i, j) * b.at(r, c);
        }
    return out;
}

/// X (x) Y = (sigma * omega, V (x) W, (pi_V (x) pi_W) o Delta).
inline ProjRep tensor_projrep(const ProjRep& X, const ProjRep& Y) {
    require(X.H.get() == Y.H.get() || hopf_equal(*X.H, *Y.H), errc::shape_mismatch,
            "tensor factors over different Hopf algebras");
    const HopfAlgebra& H = *X.H;
    ProjRep T;
    T.H = X.H;
    T.sigma = convolve(H, X.sigma, Y.sigma);
    T.dim_v = X.dim_v * Y.dim_v;
    T.pi.resize(H.dim, Mat(T.dim_v, T.dim_v, H.field));
    for (int i = 0; i < H.dim; ++i) {
        Mat acc(T.dim_v, T.dim_v, H.field);
        for (const auto& d : H.comult[i]) {
            Mat k = kron(X.pi[d.left], Y.pi[d.right], H.field);
            for (auto& s : k.a) s = d.c * s;
            for (size_t m = 0; m < acc.a.size(); ++m) acc.a[m] = acc.a[m] + k.a[m];
        }
        T.pi[i] = std::move(acc);
    }
    require(check_projrep(T), errc::internal, "tensor representation fails the algebra-map check");
    return T;
}

/// X^* = (sigma^{-1}, V^*, a -> transpose(pi_V(phi_{sigma^{-1}}(a)))).
inline ProjRep dual_projrep(const ProjRep& X) {
    const HopfAlgebra& H = *X.H;
    BiForm sinv = conv_inverse(H, X.sigma);
    LinMap phi = gen_antipode(H, sinv);
    ProjRep D;
    D.H = X.H;
    D.sigma = sinv;
    D.dim_v = X.dim_v;
    D.pi.resize(H.dim, Mat(X.dim_v, X.dim_v, H.field));
    for (int i = 0; i < H.dim; ++i) D.pi[i] = mat_transpose(X.act(apply_map(phi, basis_vec(H, i))));
    require(check_projrep(D), errc::internal, "dual representation fails the algebra-map check");
    return D;
}

inline ProjRep unit_projrep(std::shared_ptr<const HopfAlgebra> Hp) {
    const HopfAlgebra& H = *Hp;
    ProjRep U;
    U.H = Hp;
    U.sigma = conv_unit2(H);
    U.dim_v = 1;
    U.pi.resize(H.dim, Mat(1, 1, H.field));
    for (int i = 0; i < H.dim; ++i) U.pi[i].at(0, 0) = H.counit[i];
    return U;
}

/// Basic morphism test: f o pi_V(a) = mu(a1) pi_W(a2) o f for a lazy
/// invertible mu.
inline bool is_basic_morphism(const Mat& f, const ProjRep& X, const ProjRep& Y, const LinForm& mu) {
    const HopfAlgebra& H = *X.H;
    require(f.rows == Y.dim_v && f.cols == X.dim_v, errc::shape_mismatch, "morphism shape mismatch");
    require(is_lazy1(H, mu) && is_conv_invertible(H, mu), errc::not_lazy, "mu must be a lazy unit");
    for (int i = 0; i < H.dim; ++i) {
        Mat lhs = mat_mul(f, X.pi[i]);
        Mat rhs(Y.dim_v, X.dim_v, H.field);
        for (const auto& d : H.comult[i]) {
            if (mu.v[d.left].is_zero()) continue;
            Mat term = mat_mul(Y.pi[d.right], f);
            Scalar c = d.c * mu.v[d.left];
            for (size_t m = 0; m < rhs.a.size(); ++m) rhs.a[m] = rhs.a[m] + c * term.a[m];
        }
        if (lhs != rhs) return false;
    }
    return true;
}

/// Basis of the space { f : f pi_V(a) = mu(a1) pi_W(a2) f } for fixed mu
/// (an exact linear solve; Lemma 6.4 is exercised through its dimension).
inline std::vector<Mat> basic_morphism_space(const ProjRep& X, const ProjRep& Y, const LinForm& mu) {
    const HopfAlgebra& H = *X.H;
    int rows = Y.dim_v, cols = X.dim_v, nf = rows * cols;
    std::vector<Vec> eqrows;
    for (int i = 0; i < H.dim; ++i) {
        // (f pi_X(i) - sum mu(a1) pi_Y(a2) f)_(r,c) = 0, linear in f:
        // f pi_X(i) has entry (r,c) = sum_m f(r,m) pi_X(i)(m,c) and the
        // mu-side collapses to P f with P = sum mu(a1) a1-weighted pi_Y(a2)
        Mat P(rows, rows, H.field);
        for (const auto& d : H.comult[i]) {
            if (mu.v[d.left].is_zero()) continue;
            Scalar c = d.c * mu.v[d.left];
            for (int r = 0; r < rows; ++r)
                for (int m = 0; m < rows; ++m)
                    if (!Y.pi[d.right].at(r, m).is_zero()) P.at(r, m) = P.at(r, m) + c * Y.pi[d.right].at(r, m);
        }
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                Vec row = zero_vec(nf, H.field);
                for (int m = 0; m < cols; ++m) row[r * cols + m] = row[r * cols + m] + X.pi[i].at(m, c);
                for (int m = 0; m < rows; ++m) row[m * cols + c] = row[m * cols + c] - P.at(r, m);
                if (!is_zero_vec(row)) eqrows.push_back(std::move(row));
            }
    }
    Mat M(int(eqrows.size()), nf, H.field);
    for (size_t r = 0; r < eqrows.size(); ++r)
        for (int c = 0; c < nf; ++c) M.at(int(r), c) = eqrows[r][c];
    std::vector<Mat> out;
    for (const auto& v : mat_kernel(M)) {
        Mat f(rows, cols, H.field);
        f.a = v;
        out.push_back(std::move(f));
    }
    return out;
}

/// Evaluation V^* (x) V -> k as a 1 x (dim^2) matrix, a morphism X^* (x) X -> 1.
inline Mat evaluation_matrix(const ProjRep& X) {
    Mat e(1, X.dim_v * X.dim_v, X.H->field);
    for (int i = 0; i < X.dim_v; ++i) e.at(0, i * X.dim_v + i) = Scalar::one(X.H->field);
    return e;
}

/// Coevaluation k -> V (x) V^* as a (dim^2) x 1 matrix, a morphism 1 -> X (x) X^*.
inline Mat coevaluation_matrix(const ProjRep& X) {
    Mat d(X.dim_v * X.dim_v, 1, X.H->field);
    for (int i = 0; i < X.dim_v; ++i) d.at(i * X.dim_v + i, 0) = Scalar::one(X.H->field);
    return d;
}

} // namespace hopflab
