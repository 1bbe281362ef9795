#pragma once

#include "galois.hpp"

namespace hopflab {

/// Plain associative unital algebra by structure constants (the base ring R
/// of a crossed system).
struct AssocAlgebra {
    FieldSpec field;
    int dim = 0;
    std::vector<std::string> basis;
    std::vector<std::vector<SparseVec>> mult;
    Vec unit;

    Vec mul(const Vec& u, const Vec& v) const {
        Vec r = zero_vec(dim, field);
        for (int i = 0; i < dim; ++i) {
            if (u[i].is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                if (v[j].is_zero()) continue;
                Scalar c = u[i] * v[j];
                for (const auto& t : mult[i][j]) r[t.idx] = r[t.idx] + c * t.c;
            }
        }
        return r;
    }
    Vec basis_el(int i) const {
        Vec v = zero_vec(dim, field);
        v[i] = Scalar::one(field);
        return v;
    }

    void validate() const {
        for (int i = 0; i < dim; ++i) {
            require(mul(unit, basis_el(i)) == basis_el(i) && mul(basis_el(i), unit) == basis_el(i),
                    errc::invalid_datum, "unit fails in R");
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k)
                    require(mul(mul(basis_el(i), basis_el(j)), basis_el(k)) ==
                                mul(basis_el(i), mul(basis_el(j), basis_el(k))),
                            errc::invalid_datum, "associativity fails in R");
        }
    }

    static AssocAlgebra base_field(const FieldSpec& F) {
        AssocAlgebra R;
        R.field = F;
        R.dim = 1;
        R.basis = {"1"};
        R.mult = {{{{0, Scalar::one(F)}}}};
        R.unit = {Scalar::one(F)};
        return R;
    }

    /// k[y]/(y^2): the 2-dimensional algebra with a square-zero generator.
    static AssocAlgebra dual_numbers(const FieldSpec& F) {
        AssocAlgebra R;
        R.field = F;
        R.dim = 2;
        R.basis = {"1", "y"};
        R.mult.assign(2, std::vector<SparseVec>(2));
        R.mult[0][0] = {{0, Scalar::one(F)}};
        R.mult[0][1] = {{1, Scalar::one(F)}};
        R.mult[1][0] = {{1, Scalar::one(F)}};
        R.mult[1][1] = {}; // y^2 = 0
        R.unit = {Scalar::one(F), Scalar::zero(F)};
        return R;
    }
};

/// Crossed system (measuring, sigma) of A over R: act[a][r] in R, and an
/// R-valued bilinear map sig[a][b] in R.
struct CrossedSystem {
    std::shared_ptr<const HopfAlgebra> A;
    AssocAlgebra R;
    std::vector<std::vector<SparseVec>> act; // act[a][r] = a -> y_r, element of R
    std::vector<std::vector<Vec>> sig;       // sig[a][b] = sigma(a,b), element of R

    Vec action(const Vec& av, const Vec& rv) const {
        Vec out = zero_vec(R.dim, R.field);
        for (int a = 0; a < A->dim; ++a) {
            if (av[a].is_zero()) continue;
            for (int r = 0; r < R.dim; ++r) {
                if (rv[r].is_zero()) continue;
                Scalar c = av[a] * rv[r];
                for (const auto& t : act[a][r]) out[t.idx] = out[t.idx] + c * t.c;
            }
        }
        return out;
    }

    Vec sigma(int a, int b) const { return sig[a][b]; }

    /// Trivial-action, scalar-sigma crossed system over R = k.
    static CrossedSystem scalar(std::shared_ptr<const HopfAlgebra> Ap, const BiForm& s) {
        const HopfAlgebra& A = *Ap;
        CrossedSystem cs;
        cs.A = Ap;
        cs.R = AssocAlgebra::base_field(A.field);
        cs.act.assign(A.dim, std::vector<SparseVec>(1));
        for (int a = 0; a < A.dim; ++a)
            if (!A.counit[a].is_zero()) cs.act[a][0] = {{0, A.counit[a]}};
        cs.sig.assign(A.dim, std::vector<Vec>(A.dim, zero_vec(1, A.field)));
        for (int a = 0; a < A.dim; ++a)
            for (int b = 0; b < A.dim; ++b) cs.sig[a][b][0] = s.m.at(a, b);
        return cs;
    }
};

namespace detail {

/// Convolution invertibility of an R-valued bi-map, decided through the left
/// regular representation of R (an exact scalar linear system).
inline bool crossed_sigma_invertible(const CrossedSystem& cs) {
    const HopfAlgebra& A = *cs.A;
    const AssocAlgebra& R = cs.R;
    const FieldSpec& F = R.field;
    int n = A.dim, m = R.dim;
    // unknown tau : A (x) A -> R with sigma(a1,b1) tau(a2,b2) = eps(a)eps(b) 1_R
    int unknowns = n * n * m;
    Mat M(unknowns, unknowns, F);
    Vec rhs = zero_vec(unknowns, F);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int r = 0; r < m; ++r)
                rhs[(a * n + b) * m + r] = A.counit[a] * A.counit[b] * R.unit[r];
            for (const auto& da : A.comult[a])
                for (const auto& db : A.comult[b]) {
                    const Vec& sv = cs.sig[da.left][db.left];
                    Scalar c = da.c * db.c;
                    // sigma-value times tau(da.right, db.right): left regular rep of R
                    for (int r1 = 0; r1 < m; ++r1) {
                        if (sv[r1].is_zero()) continue;
                        for (int r2 = 0; r2 < m; ++r2)
                            for (const auto& t : R.mult[r1][r2])
                                M.at((a * n + b) * m + t.idx, (da.right * n + db.right) * m + r2) =
                                    M.at((a * n + b) * m + t.idx,
                                         (da.right * n + db.right) * m + r2) +
                                    c * sv[r1] * t.c;
                    }
                }
        }
    return mat_solve(M, rhs).has_value();
}

} // namespace detail

struct CrossedReport {
    bool ok = true;
    std::string failed;
    std::vector<int> at;
};

/// The crossed-system axioms: measuring, twisted module condition and the
/// R-valued cocycle condition, plus convolution invertibility of sigma.
inline CrossedReport check_crossed_system(const CrossedSystem& cs) {
    const HopfAlgebra& A = *cs.A;
    const AssocAlgebra& R = cs.R;
    const FieldSpec& F = R.field;
    R.validate();
    auto fail = [](const std::string& w, std::vector<int> at) {
        return CrossedReport{false, w, std::move(at)};
    };
    // measuring: a -> 1 = eps(a) 1, a -> (x y) = (a1 -> x)(a2 -> y)
    for (int a = 0; a < A.dim; ++a) {
        if (cs.action(basis_vec(A, a), R.unit) != vec_scale(A.counit[a], R.unit))
            return fail("measuring_unit", {a});
        for (int x = 0; x < R.dim; ++x)
            for (int y = 0; y < R.dim; ++y) {
                Vec lhs = cs.action(basis_vec(A, a), R.mul(R.basis_el(x), R.basis_el(y)));
                Vec rhs = zero_vec(R.dim, F);
                for (const auto& d : A.comult[a])
                    rhs = vec_add(rhs, vec_scale(d.c, R.mul(cs.action(basis_vec(A, d.left), R.basis_el(x)),
                                                            cs.action(basis_vec(A, d.right), R.basis_el(y)))));
                if (lhs != rhs) return fail("measuring", {a, x, y});
            }
    }
    // normalization sigma(a,1) = sigma(1,a) = eps(a) 1
    for (int a = 0; a < A.dim; ++a) {
        Vec s1 = zero_vec(R.dim, F), s2 = zero_vec(R.dim, F);
        for (int u = 0; u < A.dim; ++u) {
            if (!A.unit[u].is_zero()) {
                s1 = vec_add(s1, vec_scale(A.unit[u], cs.sig[a][u]));
                s2 = vec_add(s2, vec_scale(A.unit[u], cs.sig[u][a]));
            }
        }
        if (s1 != vec_scale(A.counit[a], R.unit) || s2 != vec_scale(A.counit[a], R.unit))
            return fail("sigma_normalization", {a});
    }
    if (!detail::crossed_sigma_invertible(cs)) return fail("sigma_invertibility", {});
    // twisted module: (a1 -> b1 -> x) sigma(a2,b2) = sigma(a1,b1) (a2 b2 -> x)
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b)
            for (int x = 0; x < R.dim; ++x) {
                Vec lhs = zero_vec(R.dim, F), rhs = zero_vec(R.dim, F);
                for (const auto& da : A.comult[a])
                    for (const auto& db : A.comult[b]) {
                        Scalar c = da.c * db.c;
                        Vec inner = cs.action(basis_vec(A, da.left),
                                              cs.action(basis_vec(A, db.left), R.basis_el(x)));
                        lhs = vec_add(lhs, vec_scale(c, R.mul(inner, cs.sig[da.right][db.right])));
                        Vec prod = hopf_mul(A, basis_vec(A, da.right), basis_vec(A, db.right));
                        rhs = vec_add(rhs, vec_scale(c, R.mul(cs.sig[da.left][db.left],
                                                              cs.action(prod, R.basis_el(x)))));
                    }
                if (lhs != rhs) return fail("twisted_module", {a, b, x});
            }
    // cocycle: sigma(a1,b1) sigma(a2 b2, c) = (a1 -> sigma(b1,c1)) sigma(a2, b2 c2)
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b)
            for (int c = 0; c < A.dim; ++c) {
                Vec lhs = zero_vec(R.dim, F), rhs = zero_vec(R.dim, F);
                for (const auto& da : A.comult[a])
                    for (const auto& db : A.comult[b]) {
                        Scalar cc = da.c * db.c;
                        Vec prod = hopf_mul(A, basis_vec(A, da.right), basis_vec(A, db.right));
                        Vec sprod = zero_vec(R.dim, F);
                        for (int m = 0; m < A.dim; ++m)
                            if (!prod[m].is_zero()) sprod = vec_add(sprod, vec_scale(prod[m], cs.sig[m][c]));
                        lhs = vec_add(lhs, vec_scale(cc, R.mul(cs.sig[da.left][db.left], sprod)));
                    }
                for (const auto& da : A.comult[a])
                    for (const auto& db : A.comult[b])
                        for (const auto& dc : A.comult[c]) {
                            Scalar cc = da.c * db.c * dc.c;
                            Vec acted = cs.action(basis_vec(A, da.left), cs.sig[db.left][dc.left]);
                            Vec prod = hopf_mul(A, basis_vec(A, db.right), basis_vec(A, dc.right));
                            Vec s2 = zero_vec(R.dim, F);
                            for (int m = 0; m < A.dim; ++m)
                                if (!prod[m].is_zero())
                                    s2 = vec_add(s2, vec_scale(prod[m], cs.sig[da.right][m]));
                            rhs = vec_add(rhs, vec_scale(cc, R.mul(acted, s2)));
                        }
                if (lhs != rhs) return fail("cocycle", {a, b, c});
            }
    return {};
}

/// Laziness of a crossed system:
/// a1 b1 (x) ((a2 -> y) sigma(a3, b2)) = a3 b2 (x) ((a1 -> y) sigma(a2, b1)).
inline bool is_lazy_crossed(const CrossedSystem& cs) {
    const HopfAlgebra& A = *cs.A;
    const AssocAlgebra& R = cs.R;
    const FieldSpec& F = R.field;
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b)
            for (int y = 0; y < R.dim; ++y) {
                Vec lhs = zero_vec(A.dim * R.dim, F), rhs = zero_vec(A.dim * R.dim, F);
                for (const auto& ta : delta_terms(A, a, 3))
                    for (const auto& tb : delta_terms(A, b, 2)) {
                        Scalar c = ta.c * tb.c;
                        {
                            Vec prod = hopf_mul(A, basis_vec(A, ta.idx[0]), basis_vec(A, tb.idx[0]));
                            Vec rv = R.mul(cs.action(basis_vec(A, ta.idx[1]), R.basis_el(y)),
                                           cs.sig[ta.idx[2]][tb.idx[1]]);
                            for (int m = 0; m < A.dim; ++m)
                                if (!prod[m].is_zero())
                                    for (int r = 0; r < R.dim; ++r)
                                        if (!rv[r].is_zero())
                                            lhs[m * R.dim + r] = lhs[m * R.dim + r] + c * prod[m] * rv[r];
                        }
                        {
                            Vec prod = hopf_mul(A, basis_vec(A, ta.idx[2]), basis_vec(A, tb.idx[1]));
                            Vec rv = R.mul(cs.action(basis_vec(A, ta.idx[0]), R.basis_el(y)),
                                           cs.sig[ta.idx[1]][tb.idx[0]]);
                            for (int m = 0; m < A.dim; ++m)
                                if (!prod[m].is_zero())
                                    for (int r = 0; r < R.dim; ++r)
                                        if (!rv[r].is_zero())
                                            rhs[m * R.dim + r] = rhs[m * R.dim + r] + c * prod[m] * rv[r];
                        }
                    }
                if (lhs != rhs) return false;
            }
    return true;
}

/// Right action of Z^2_L(A) on crossed systems: (->, sigma) * omega =
/// (->, sigma * omega) with (sigma * omega)(a,b) = sigma(a1,b1) omega(a2,b2).
inline CrossedSystem act_on_crossed(const CrossedSystem& cs, const BiForm& omega) {
    const HopfAlgebra& A = *cs.A;
    require(is_lazy2(A, omega) && is_left_cocycle(A, omega), errc::not_lazy,
            "crossed systems carry a right action of lazy cocycles only");
    CrossedSystem out = cs;
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b) {
            Vec acc = zero_vec(cs.R.dim, cs.R.field);
            for (const auto& da : A.comult[a])
                for (const auto& db : A.comult[b]) {
                    const Scalar& w = omega.m.at(da.right, db.right);
                    if (w.is_zero()) continue;
                    acc = vec_add(acc, vec_scale(da.c * db.c * w, cs.sig[da.left][db.left]));
                }
            out.sig[a][b] = acc;
        }
    auto rep = check_crossed_system(out);
    require(rep.ok, errc::internal, "acted crossed system fails " + rep.failed);
    return out;
}

/// Crossed product R #_sigma A: algebra on R (x) A with
/// (x # a)(y # b) = x (a1 -> y) sigma(a2, b1) # a3 b2, right coaction id (x) Delta.
inline ComoduleAlgebra crossed_product(const CrossedSystem& cs) {
    const HopfAlgebra& A = *cs.A;
    const AssocAlgebra& R = cs.R;
    const FieldSpec& F = R.field;
    auto rep = check_crossed_system(cs);
    require(rep.ok, errc::invalid_datum, "crossed system fails axiom " + rep.failed);
    ComoduleAlgebra Z;
    Z.field = F;
    Z.dim = R.dim * A.dim;
    auto ix = [&](int r, int a) { return r * A.dim + a; };
    Z.basis.resize(Z.dim);
    for (int r = 0; r < R.dim; ++r)
        for (int a = 0; a < A.dim; ++a) Z.basis[ix(r, a)] = R.basis[r] + "#" + A.basis[a];
    Z.mult.assign(Z.dim, std::vector<SparseVec>(Z.dim));
    for (int x = 0; x < R.dim; ++x)
        for (int a = 0; a < A.dim; ++a)
            for (int y = 0; y < R.dim; ++y)
                for (int b = 0; b < A.dim; ++b) {
                    Vec out = zero_vec(Z.dim, F);
                    for (const auto& ta : delta_terms(A, a, 3))
                        for (const auto& tb : delta_terms(A, b, 2)) {
                            Scalar c = ta.c * tb.c;
                            Vec rpart = R.mul(R.basis_el(x),
                                              R.mul(cs.action(basis_vec(A, ta.idx[0]), R.basis_el(y)),
                                                    cs.sig[ta.idx[1]][tb.idx[0]]));
                            Vec apart = hopf_mul(A, basis_vec(A, ta.idx[2]), basis_vec(A, tb.idx[1]));
                            for (int r = 0; r < R.dim; ++r)
                                if (!rpart[r].is_zero())
                                    for (int m = 0; m < A.dim; ++m)
                                        if (!apart[m].is_zero())
                                            out[ix(r, m)] = out[ix(r, m)] + c * rpart[r] * apart[m];
                        }
                    SparseVec sv;
                    for (int k = 0; k < Z.dim; ++k)
                        if (!out[k].is_zero()) sv.push_back({k, out[k]});
                    Z.mult[ix(x, a)][ix(y, b)] = std::move(sv);
                }
    Z.unit = zero_vec(Z.dim, F);
    for (int r = 0; r < R.dim; ++r)
        for (int a = 0; a < A.dim; ++a)
            if (!R.unit[r].is_zero() && !A.unit[a].is_zero()) Z.unit[ix(r, a)] = R.unit[r] * A.unit[a];
    Z.Hr = cs.A;
    Z.rho.assign(Z.dim, {});
    for (int r = 0; r < R.dim; ++r)
        for (int a = 0; a < A.dim; ++a)
            for (const auto& d : A.comult[a]) Z.rho[ix(r, a)].push_back({ix(r, d.left), d.right, d.c});
    auto crep = check_comodule_algebra(Z);
    require(crep.ok, errc::internal, "crossed product fails " + crep.failed);
    return Z;
}

/// The left coaction beta(x # a) = a1 (x) (x # a2) is an algebra morphism
/// precisely for lazy crossed systems.
inline bool crossed_beta_is_algebra_morphism(const CrossedSystem& cs, const ComoduleAlgebra& Z) {
    const HopfAlgebra& A = *cs.A;
    int rd = cs.R.dim;
    ComoduleAlgebra W = Z;
    W.Hl = cs.A;
    W.lco.assign(Z.dim, {});
    for (int r = 0; r < rd; ++r)
        for (int a = 0; a < A.dim; ++a)
            for (const auto& d : A.comult[a])
                W.lco[r * A.dim + a].push_back({d.left, r * A.dim + d.right, d.c});
    auto rep = check_comodule_algebra(W);
    if (!rep.ok && rep.failed != "left_comodule_algebra" && rep.failed != "left_coaction_unit")
        raise(errc::internal, "crossed beta fails coaction axiom " + rep.failed);
    return rep.ok;
}

} // namespace hopflab
