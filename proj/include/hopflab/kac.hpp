#pragma once

#include "families.hpp"
#include "lazy.hpp"

namespace hopflab {

/// Central B |><| A pairing: a convolution invertible beta : B (x) A -> k
/// subject to the six conditions of the Kac-Schauenburg sequence.
/// Stored B-major: beta.at(b, a).
struct CentralPairing {
    Mat beta;
    bool operator==(const CentralPairing& o) const { return beta == o.beta; }
};

namespace detail {

/// Convolution invertibility of a mixed form on B (x) A.
inline bool mixed_form_invertible(const HopfAlgebra& B, const HopfAlgebra& A, const Mat& beta) {
    int nb = B.dim, na = A.dim, n = nb * na;
    Mat T(n, n, B.field);
    for (int b = 0; b < nb; ++b)
        for (int a = 0; a < na; ++a)
            for (const auto& db : B.comult[b])
                for (const auto& da : A.comult[a]) {
                    const Scalar& v = beta.at(db.left, da.left);
                    if (v.is_zero()) continue;
                    T.at(b * na + a, db.right * na + da.right) =
                        T.at(b * na + a, db.right * na + da.right) + db.c * da.c * v;
                }
    Vec rhs = zero_vec(n, B.field);
    for (int b = 0; b < nb; ++b)
        for (int a = 0; a < na; ++a) rhs[b * na + a] = B.counit[b] * A.counit[a];
    return mat_solve(T, rhs).has_value();
}

} // namespace detail

struct PairingReport {
    bool ok = true;
    std::string failed;
    std::vector<int> at;
};

/// All six conditions of a central pairing, plus convolution invertibility.
inline PairingReport central_pairing_report(const MatchedPair& mp, const Mat& beta) {
    const HopfAlgebra& B = *mp.B;
    const HopfAlgebra& A = *mp.A;
    const FieldSpec& F = B.field;
    require(beta.rows == B.dim && beta.cols == A.dim, errc::shape_mismatch, "pairing shape mismatch");
    auto fail = [](const std::string& what, std::vector<int> at) {
        return PairingReport{false, what, std::move(at)};
    };
    auto beta_eval = [&](const Vec& bv, const Vec& av) {
        Scalar acc = Scalar::zero(F);
        for (int b = 0; b < B.dim; ++b) {
            if (bv[b].is_zero()) continue;
            for (int a = 0; a < A.dim; ++a)
                if (!av[a].is_zero() && !beta.at(b, a).is_zero()) acc = acc + bv[b] * av[a] * beta.at(b, a);
        }
        return acc;
    };
    // unit normalizations
    for (int a = 0; a < A.dim; ++a)
        if (beta_eval(B.unit, basis_vec(A, a)) != A.counit[a]) return fail("unit_B", {a});
    for (int b = 0; b < B.dim; ++b)
        if (beta_eval(basis_vec(B, b), A.unit) != B.counit[b]) return fail("unit_A", {b});
    if (!detail::mixed_form_invertible(B, A, beta)) return fail("invertibility", {});
    // (1) beta(b b', a) = beta(b1, a1) beta(b', a2 <- b2)
    for (int b = 0; b < B.dim; ++b)
        for (int b2 = 0; b2 < B.dim; ++b2)
            for (int a = 0; a < A.dim; ++a) {
                Scalar lhs = beta_eval(hopf_mul(B, basis_vec(B, b), basis_vec(B, b2)), basis_vec(A, a));
                Scalar rhs = Scalar::zero(F);
                for (const auto& db : B.comult[b])
                    for (const auto& da : A.comult[a]) {
                        const Scalar& v = beta.at(db.left, da.left);
                        if (v.is_zero()) continue;
                        Vec acted = mp.right(basis_vec(A, da.right), basis_vec(B, db.right));
                        rhs = rhs + db.c * da.c * v * beta_eval(basis_vec(B, b2), acted);
                    }
                if (lhs != rhs) return fail("mult_B", {b, b2, a});
            }
    // (2) beta(b, a a') = beta(b1, a'1) beta(a'2 -> b2, a)
    for (int b = 0; b < B.dim; ++b)
        for (int a = 0; a < A.dim; ++a)
            for (int a2 = 0; a2 < A.dim; ++a2) {
                Scalar lhs = beta_eval(basis_vec(B, b), hopf_mul(A, basis_vec(A, a), basis_vec(A, a2)));
                Scalar rhs = Scalar::zero(F);
                for (const auto& db : B.comult[b])
                    for (const auto& da : A.comult[a2]) {
                        const Scalar& v = beta.at(db.left, da.left);
                        if (v.is_zero()) continue;
                        Vec acted = mp.left(basis_vec(A, da.right), basis_vec(B, db.right));
                        rhs = rhs + db.c * da.c * v * beta_eval(acted, basis_vec(A, a));
                    }
                if (lhs != rhs) return fail("mult_A", {b, a, a2});
            }
    // (3) beta(b2, a2) a1 <- b1 = beta(b1, a1) a2 <- b2   in A
    for (int b = 0; b < B.dim; ++b)
        for (int a = 0; a < A.dim; ++a) {
            Vec lhs = zero_vec(A.dim, F), rhs = zero_vec(A.dim, F);
            for (const auto& db : B.comult[b])
                for (const auto& da : A.comult[a]) {
                    Scalar c = db.c * da.c;
                    const Scalar& v2 = beta.at(db.right, da.right);
                    if (!v2.is_zero())
                        lhs = vec_add(lhs, vec_scale(c * v2, mp.right(basis_vec(A, da.left),
                                                                      basis_vec(B, db.left))));
                    const Scalar& v1 = beta.at(db.left, da.left);
                    if (!v1.is_zero())
                        rhs = vec_add(rhs, vec_scale(c * v1, mp.right(basis_vec(A, da.right),
                                                                      basis_vec(B, db.right))));
                }
            if (lhs != rhs) return fail("central_A", {b, a});
        }
    // (4) beta(b1, a1) a2 -> b2 = beta(b2, a2) a1 -> b1   in B
    for (int b = 0; b < B.dim; ++b)
        for (int a = 0; a < A.dim; ++a) {
            Vec lhs = zero_vec(B.dim, F), rhs = zero_vec(B.dim, F);
            for (const auto& db : B.comult[b])
                for (const auto& da : A.comult[a]) {
                    Scalar c = db.c * da.c;
                    const Scalar& v1 = beta.at(db.left, da.left);
                    if (!v1.is_zero())
                        lhs = vec_add(lhs, vec_scale(c * v1, mp.left(basis_vec(A, da.right),
                                                                     basis_vec(B, db.right))));
                    const Scalar& v2 = beta.at(db.right, da.right);
                    if (!v2.is_zero())
                        rhs = vec_add(rhs, vec_scale(c * v2, mp.left(basis_vec(A, da.left),
                                                                     basis_vec(B, db.left))));
                }
            if (lhs != rhs) return fail("central_B", {b, a});
        }
    return {};
}

inline bool is_central_pairing(const MatchedPair& mp, const CentralPairing& p) {
    return central_pairing_report(mp, p.beta).ok;
}

/// Lambda(phi_B, phi_A)(b,a) = phi_A^{-1}(a1) phi_B^{-1}(b1) phi_B(a2 -> b2) phi_A(a3 <- b3).
/// Requires lazy algebra maps (elements of H^1_L); the output is verified central.
inline CentralPairing lambda_map(const MatchedPair& mp, const LinForm& phi_B, const LinForm& phi_A) {
    const HopfAlgebra& B = *mp.B;
    const HopfAlgebra& A = *mp.A;
    require(is_algebra_map(B, phi_B) && is_lazy1(B, phi_B), errc::not_lazy_algebra_map,
            "phi_B is not a lazy algebra map");
    require(is_algebra_map(A, phi_A) && is_lazy1(A, phi_A), errc::not_lazy_algebra_map,
            "phi_A is not a lazy algebra map");
    LinForm phiB_inv = conv_inverse(B, phi_B);
    LinForm phiA_inv = conv_inverse(A, phi_A);
    CentralPairing out{Mat(B.dim, A.dim, B.field)};
    for (int b = 0; b < B.dim; ++b) {
        auto db3 = delta_terms(B, b, 3);
        for (int a = 0; a < A.dim; ++a) {
            Scalar acc = Scalar::zero(B.field);
            for (const auto& ta : delta_terms(A, a, 3))
                for (const auto& tb : db3) {
                    Scalar c = ta.c * tb.c * phiA_inv.v[ta.idx[0]] * phiB_inv.v[tb.idx[0]];
                    if (c.is_zero()) continue;
                    Vec acted_b = mp.left(basis_vec(A, ta.idx[1]), basis_vec(B, tb.idx[1]));
                    Scalar vb = eval(phi_B, acted_b);
                    if (vb.is_zero()) continue;
                    Vec acted_a = mp.right(basis_vec(A, ta.idx[2]), basis_vec(B, tb.idx[2]));
                    acc = acc + c * vb * eval(phi_A, acted_a);
                }
            out.beta.at(b, a) = acc;
        }
    }
    auto rep = central_pairing_report(mp, out.beta);
    require(rep.ok, errc::internal, "Lambda output fails pairing condition " + rep.failed);
    return out;
}

/// sigma_beta(b (x) a, b' (x) a') = beta(b', a) eps_B(b) eps_A(a'), a lazy
/// 2-cocycle on B |><| A (verified).
inline BiForm sigma_from_pairing(const MatchedPair& mp, const HopfAlgebra& D, const CentralPairing& p) {
    const HopfAlgebra& B = *mp.B;
    const HopfAlgebra& A = *mp.A;
    require(D.dim == B.dim * A.dim, errc::shape_mismatch, "D is not the double crossed product");
    require(is_central_pairing(mp, p), errc::invalid_datum, "beta is not a central pairing");
    auto ix = [&](int b, int a) { return b * A.dim + a; };
    BiForm s{Mat(D.dim, D.dim, D.field)};
    for (int b = 0; b < B.dim; ++b)
        for (int a = 0; a < A.dim; ++a)
            for (int b2 = 0; b2 < B.dim; ++b2)
                for (int a2 = 0; a2 < A.dim; ++a2)
                    s.m.at(ix(b, a), ix(b2, a2)) = p.beta.at(b2, a) * B.counit[b] * A.counit[a2];
    require(is_lazy2(D, s), errc::internal, "sigma_beta is not lazy");
    require(is_left_cocycle(D, s), errc::internal, "sigma_beta is not a left 2-cocycle");
    return s;
}

/// Lemma-4.6 class normalization: sigma' = sigma * d(mu) with
/// mu(b (x) a) = sigma(b (x) 1, 1 (x) a); sigma' satisfies the two displayed
/// normalization identities.
inline BiForm normalize_class(const MatchedPair& mp, const HopfAlgebra& D, const BiForm& sigma) {
    const HopfAlgebra& B = *mp.B;
    const HopfAlgebra& A = *mp.A;
    require(is_lazy2(D, sigma) && is_left_cocycle(D, sigma), errc::not_a_cocycle,
            "normalize_class needs a lazy 2-cocycle");
    auto ix = [&](int b, int a) { return b * A.dim + a; };
    auto embB = [&](int b) { // b (x) 1
        Vec v = zero_vec(D.dim, D.field);
        for (int a = 0; a < A.dim; ++a)
            if (!A.unit[a].is_zero()) v[ix(b, a)] = A.unit[a];
        return v;
    };
    auto embA = [&](int a) { // 1 (x) a
        Vec v = zero_vec(D.dim, D.field);
        for (int b = 0; b < B.dim; ++b)
            if (!B.unit[b].is_zero()) v[ix(b, a)] = B.unit[b];
        return v;
    };
    LinForm mu{zero_vec(D.dim, D.field)};
    for (int b = 0; b < B.dim; ++b)
        for (int a = 0; a < A.dim; ++a) mu.v[ix(b, a)] = eval(sigma, embB(b), embA(a));
    require(is_lazy1(D, mu), errc::internal, "normalization cochain is not lazy");
    BiForm out = convolve(D, sigma, coboundary(D, mu));
    for (int b = 0; b < B.dim; ++b)
        for (int b2 = 0; b2 < B.dim; ++b2)
            for (int a2 = 0; a2 < A.dim; ++a2) {
                Scalar lhs = Scalar::zero(D.field);
                Vec right = zero_vec(D.dim, D.field);
                right[ix(b2, a2)] = Scalar::one(D.field);
                lhs = eval(out, embB(b), right);
                Scalar rhs = eval(sigma, embB(b), embB(b2)) * A.counit[a2];
                require(lhs == rhs, errc::internal, "first normalization identity fails");
            }
    for (int b = 0; b < B.dim; ++b)
        for (int a = 0; a < A.dim; ++a)
            for (int a2 = 0; a2 < A.dim; ++a2) {
                Vec left = zero_vec(D.dim, D.field);
                left[ix(b, a)] = Scalar::one(D.field);
                Scalar lhs = eval(out, left, embA(a2));
                Scalar rhs = eval(sigma, embA(a), embA(a2)) * B.counit[b];
                require(lhs == rhs, errc::internal, "second normalization identity fails");
            }
    return out;
}

/// Restriction of a lazy cocycle on B |><| A to the factors.
inline std::pair<BiForm, BiForm> restrict_cocycle(const MatchedPair& mp, const HopfAlgebra& D,
                                                  const BiForm& sigma) {
    const HopfAlgebra& B = *mp.B;
    const HopfAlgebra& A = *mp.A;
    auto ix = [&](int b, int a) { return b * A.dim + a; };
    BiForm sB{Mat(B.dim, B.dim, D.field)}, sA{Mat(A.dim, A.dim, D.field)};
    for (int b = 0; b < B.dim; ++b)
        for (int b2 = 0; b2 < B.dim; ++b2) {
            Scalar acc = Scalar::zero(D.field);
            for (int a = 0; a < A.dim; ++a)
                for (int a2 = 0; a2 < A.dim; ++a2)
                    if (!A.unit[a].is_zero() && !A.unit[a2].is_zero())
                        acc = acc + A.unit[a] * A.unit[a2] * sigma.m.at(ix(b, a), ix(b2, a2));
            sB.m.at(b, b2) = acc;
        }
    for (int a = 0; a < A.dim; ++a)
        for (int a2 = 0; a2 < A.dim; ++a2) {
            Scalar acc = Scalar::zero(D.field);
            for (int b = 0; b < B.dim; ++b)
                for (int b2 = 0; b2 < B.dim; ++b2)
                    if (!B.unit[b].is_zero() && !B.unit[b2].is_zero())
                        acc = acc + B.unit[b] * B.unit[b2] * sigma.m.at(ix(b, a), ix(b2, a2));
            sA.m.at(a, a2) = acc;
        }
    require(is_lazy2(B, sB) && is_left_cocycle(B, sB), errc::internal, "restriction to B fails");
    require(is_lazy2(A, sA) && is_left_cocycle(A, sA), errc::internal, "restriction to A fails");
    return {sB, sA};
}

/// Schur-Yamazaki join for trivial actions: sigma(b (x) a, b' (x) a') =
/// sigma_1(b, b') sigma_2(a, a').
inline BiForm yamazaki_join(const MatchedPair& mp, const HopfAlgebra& D, const BiForm& sigma_B,
                            const BiForm& sigma_A) {
    const HopfAlgebra& B = *mp.B;
    const HopfAlgebra& A = *mp.A;
    require(mp.trivial_actions(), errc::nontrivial_actions,
            "the Yamazaki join needs a trivial matched pair");
    require(is_lazy2(B, sigma_B) && is_left_cocycle(B, sigma_B), errc::not_a_cocycle,
            "sigma_B is not a lazy cocycle");
    require(is_lazy2(A, sigma_A) && is_left_cocycle(A, sigma_A), errc::not_a_cocycle,
            "sigma_A is not a lazy cocycle");
    auto ix = [&](int b, int a) { return b * A.dim + a; };
    BiForm s{Mat(D.dim, D.dim, D.field)};
    for (int b = 0; b < B.dim; ++b)
        for (int a = 0; a < A.dim; ++a)
            for (int b2 = 0; b2 < B.dim; ++b2)
                for (int a2 = 0; a2 < A.dim; ++a2)
                    s.m.at(ix(b, a), ix(b2, a2)) = sigma_B.m.at(b, b2) * sigma_A.m.at(a, a2);
    require(is_lazy2(D, s) && is_left_cocycle(D, s), errc::internal, "join fails the cocycle identities");
    return s;
}

// ---------------------------------------------------------------------------
// the group L(A,B) of special Hopf morphisms (condition (4.1))

struct LMorphismReport {
    bool algebra = true, central = true, symmetric = true, coalgebra = true;
    std::vector<int> at;
    bool ok() const { return algebra && central && symmetric && coalgebra; }
};

/// f : A -> B with f(A) central in B and f(a1) (x) a2 = f(a2) (x) a1.
/// Checked in the order: algebra morphism (precondition), centrality,
/// the symmetry condition, then coalgebra compatibility.
inline LMorphismReport l_morphism_report(const LinMap& f, const HopfAlgebra& A, const HopfAlgebra& B) {
    LMorphismReport rep;
    require(f.m.rows == B.dim && f.m.cols == A.dim, errc::shape_mismatch, "morphism shape mismatch");
    require(apply_map(f, A.unit) == B.unit, errc::not_a_hopf_map, "f(1) != 1");
    for (int i = 0; i < A.dim && rep.algebra; ++i)
        for (int j = 0; j < A.dim && rep.algebra; ++j) {
            Vec prod = zero_vec(A.dim, A.field);
            for (const auto& t : A.mult[i][j]) prod[t.idx] = prod[t.idx] + t.c;
            if (apply_map(f, prod) !=
                hopf_mul(B, apply_map(f, basis_vec(A, i)), apply_map(f, basis_vec(A, j)))) {
                rep.algebra = false;
                rep.at = {i, j};
            }
        }
    require(rep.algebra, errc::not_a_hopf_map, "f is not an algebra morphism");
    for (int i = 0; i < A.dim && rep.central; ++i) {
        Vec fi = apply_map(f, basis_vec(A, i));
        for (int b = 0; b < B.dim; ++b)
            if (hopf_mul(B, fi, basis_vec(B, b)) != hopf_mul(B, basis_vec(B, b), fi)) {
                rep.central = false;
                rep.at = {i, b};
                break;
            }
    }
    if (!rep.central) return rep;
    for (int i = 0; i < A.dim && rep.symmetric; ++i) {
        Vec lhs = zero_vec(B.dim * A.dim, A.field), rhs = zero_vec(B.dim * A.dim, A.field);
        for (const auto& d : A.comult[i]) {
            Vec l = apply_map(f, basis_vec(A, d.left));
            for (int m = 0; m < B.dim; ++m)
                if (!l[m].is_zero()) lhs[m * A.dim + d.right] = lhs[m * A.dim + d.right] + d.c * l[m];
            Vec r = apply_map(f, basis_vec(A, d.right));
            for (int m = 0; m < B.dim; ++m)
                if (!r[m].is_zero()) rhs[m * A.dim + d.left] = rhs[m * A.dim + d.left] + d.c * r[m];
        }
        if (lhs != rhs) {
            rep.symmetric = false;
            rep.at = {i};
        }
    }
    if (!rep.symmetric) return rep;
    for (int i = 0; i < A.dim && rep.coalgebra; ++i) {
        Vec lhs = comult_vec(B, apply_map(f, basis_vec(A, i)));
        Vec rhs = zero_vec(B.dim * B.dim, B.field);
        for (const auto& d : A.comult[i]) {
            Vec l = apply_map(f, basis_vec(A, d.left)), r = apply_map(f, basis_vec(A, d.right));
            for (int u = 0; u < B.dim; ++u)
                for (int v = 0; v < B.dim; ++v)
                    if (!l[u].is_zero() && !r[v].is_zero())
                        rhs[u * B.dim + v] = rhs[u * B.dim + v] + d.c * l[u] * r[v];
        }
        if (lhs != rhs) {
            rep.coalgebra = false;
            rep.at = {i};
        }
        if (eval(LinForm{B.counit}, apply_map(f, basis_vec(A, i))) != A.counit[i]) {
            rep.coalgebra = false;
            rep.at = {i};
        }
    }
    return rep;
}

inline bool is_L_morphism(const LinMap& f, const HopfAlgebra& A, const HopfAlgebra& B) {
    return l_morphism_report(f, A, B).ok();
}

/// Lemma-4.8 transport: for a pairing beta on B (x) A (trivial actions), the
/// map f_beta : A -> B^*, f_beta(a) = beta(., a).
inline LinMap pairing_to_hopf_map(const CentralPairing& p) { return LinMap{p.beta}; }

} // namespace hopflab
