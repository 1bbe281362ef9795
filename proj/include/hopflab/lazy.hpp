#pragma once

#include <optional>

#include "hopf.hpp"

namespace hopflab {

// ---------------------------------------------------------------------------
// laziness and cocycle predicates (all exact, first failing tuple reported)

/// mu * id = id * mu, i.e. mu(a1) a2 = a1 mu(a2) on every basis element.
inline std::optional<std::vector<int>> lazy1_fail(const HopfAlgebra& H, const LinForm& mu) {
    for (int i = 0; i < H.dim; ++i) {
        Vec lhs = zero_vec(H.dim, H.field), rhs = zero_vec(H.dim, H.field);
        for (const auto& d : H.comult[i]) {
            lhs[d.right] = lhs[d.right] + d.c * mu.v[d.left];
            rhs[d.left] = rhs[d.left] + d.c * mu.v[d.right];
        }
        if (lhs != rhs) return std::vector<int>{i};
    }
    return std::nullopt;
}

inline bool is_lazy1(const HopfAlgebra& H, const LinForm& mu) { return !lazy1_fail(H, mu); }

/// sigma * m = m * sigma, i.e. sigma(a1,b1) a2 b2 = sigma(a2,b2) a1 b1.
inline std::optional<std::vector<int>> lazy2_fail(const HopfAlgebra& H, const BiForm& s) {
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) {
            Vec lhs = zero_vec(H.dim, H.field), rhs = zero_vec(H.dim, H.field);
            for (const auto& di : H.comult[i])
                for (const auto& dj : H.comult[j]) {
                    Scalar c = di.c * dj.c;
                    const Scalar& sl = s.m.at(di.left, dj.left);
                    if (!sl.is_zero()) {
                        Scalar cc = c * sl;
                        for (const auto& t : H.mult[di.right][dj.right])
                            lhs[t.idx] = lhs[t.idx] + cc * t.c;
                    }
                    const Scalar& sr = s.m.at(di.right, dj.right);
                    if (!sr.is_zero()) {
                        Scalar cc = c * sr;
                        for (const auto& t : H.mult[di.left][dj.left])
                            rhs[t.idx] = rhs[t.idx] + cc * t.c;
                    }
                }
            if (lhs != rhs) return std::vector<int>{i, j};
        }
    return std::nullopt;
}

inline bool is_lazy2(const HopfAlgebra& H, const BiForm& s) { return !lazy2_fail(H, s); }

/// Left 2-cocycle: sigma(a1,b1) sigma(a2 b2, c) = sigma(b1,c1) sigma(a, b2 c2).
inline std::optional<std::vector<int>> left_cocycle_fail(const HopfAlgebra& H, const BiForm& s) {
    for (int a = 0; a < H.dim; ++a)
        for (int b = 0; b < H.dim; ++b)
            for (int c = 0; c < H.dim; ++c) {
                Scalar lhs = Scalar::zero(H.field), rhs = Scalar::zero(H.field);
                for (const auto& da : H.comult[a])
                    for (const auto& db : H.comult[b]) {
                        const Scalar& s1 = s.m.at(da.left, db.left);
                        if (s1.is_zero()) continue;
                        Scalar inner = Scalar::zero(H.field);
                        for (const auto& t : H.mult[da.right][db.right])
                            inner = inner + t.c * s.m.at(t.idx, c);
                        lhs = lhs + da.c * db.c * s1 * inner;
                    }
                for (const auto& db : H.comult[b])
                    for (const auto& dc : H.comult[c]) {
                        const Scalar& s1 = s.m.at(db.left, dc.left);
                        if (s1.is_zero()) continue;
                        Scalar inner = Scalar::zero(H.field);
                        for (const auto& t : H.mult[db.right][dc.right])
                            inner = inner + t.c * s.m.at(a, t.idx);
                        rhs = rhs + db.c * dc.c * s1 * inner;
                    }
                if (lhs != rhs) return std::vector<int>{a, b, c};
            }
    return std::nullopt;
}

inline bool is_left_cocycle(const HopfAlgebra& H, const BiForm& s) { return !left_cocycle_fail(H, s); }

/// Right 2-cocycle: sigma(a1 b1, c) sigma(a2, b2) = sigma(a, b1 c1) sigma(b2, c2).
inline std::optional<std::vector<int>> right_cocycle_fail(const HopfAlgebra& H, const BiForm& s) {
    for (int a = 0; a < H.dim; ++a)
        for (int b = 0; b < H.dim; ++b)
            for (int c = 0; c < H.dim; ++c) {
                Scalar lhs = Scalar::zero(H.field), rhs = Scalar::zero(H.field);
                for (const auto& da : H.comult[a])
                    for (const auto& db : H.comult[b]) {
                        const Scalar& s2 = s.m.at(da.right, db.right);
                        if (s2.is_zero()) continue;
                        Scalar inner = Scalar::zero(H.field);
                        for (const auto& t : H.mult[da.left][db.left])
                            inner = inner + t.c * s.m.at(t.idx, c);
                        lhs = lhs + da.c * db.c * s2 * inner;
                    }
                for (const auto& db : H.comult[b])
                    for (const auto& dc : H.comult[c]) {
                        const Scalar& s2 = s.m.at(db.right, dc.right);
                        if (s2.is_zero()) continue;
                        Scalar inner = Scalar::zero(H.field);
                        for (const auto& t : H.mult[db.left][dc.left])
                            inner = inner + t.c * s.m.at(a, t.idx);
                        rhs = rhs + db.c * dc.c * s2 * inner;
                    }
                if (lhs != rhs) return std::vector<int>{a, b, c};
            }
    return std::nullopt;
}

inline bool is_right_cocycle(const HopfAlgebra& H, const BiForm& s) { return !right_cocycle_fail(H, s); }

/// Absolute centrality: sigma(a1,b1) a2 (x) b2 = sigma(a2,b2) a1 (x) b1 in A (x) A.
inline std::optional<std::vector<int>> absolutely_central_fail(const HopfAlgebra& H, const BiForm& s) {
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) {
            Vec lhs = zero_vec(H.dim * H.dim, H.field), rhs = zero_vec(H.dim * H.dim, H.field);
            for (const auto& di : H.comult[i])
                for (const auto& dj : H.comult[j]) {
                    Scalar c = di.c * dj.c;
                    const Scalar& sl = s.m.at(di.left, dj.left);
                    if (!sl.is_zero()) {
                        int k = di.right * H.dim + dj.right;
                        lhs[k] = lhs[k] + c * sl;
                    }
                    const Scalar& sr = s.m.at(di.right, dj.right);
                    if (!sr.is_zero()) {
                        int k = di.left * H.dim + dj.left;
                        rhs[k] = rhs[k] + c * sr;
                    }
                }
            if (lhs != rhs) return std::vector<int>{i, j};
        }
    return std::nullopt;
}

inline bool is_absolutely_central(const HopfAlgebra& H, const BiForm& s) {
    return !absolutely_central_fail(H, s);
}

/// Reg^2 membership: normalization sigma(a,1) = eps(a) = sigma(1,a) plus
/// convolution invertibility.
inline bool is_reg2(const HopfAlgebra& H, const BiForm& s) {
    for (int j = 0; j < H.dim; ++j) {
        Scalar left = Scalar::zero(H.field), right = Scalar::zero(H.field);
        for (int i = 0; i < H.dim; ++i) {
            if (!H.unit[i].is_zero()) {
                left = left + H.unit[i] * s.m.at(i, j);
                right = right + H.unit[i] * s.m.at(j, i);
            }
        }
        if (left != H.counit[j] || right != H.counit[j]) return false;
    }
    return is_conv_invertible(H, s);
}

inline bool is_reg1(const HopfAlgebra& H, const LinForm& mu) {
    return eval(mu, H.unit).is_one() && is_conv_invertible(H, mu);
}

struct CocyclePredicateReport {
    bool is_reg = false;
    bool is_lazy = false;
    bool is_left_cocycle = false;
    bool is_right_cocycle = false;
    bool is_absolutely_central = false;
    std::optional<std::vector<int>> lazy_fail, left_fail, right_fail, central_fail;
};

inline CocyclePredicateReport cocycle_report(const HopfAlgebra& H, const BiForm& s) {
    CocyclePredicateReport r;
    r.is_reg = is_reg2(H, s);
    r.lazy_fail = lazy2_fail(H, s);
    r.left_fail = left_cocycle_fail(H, s);
    r.right_fail = right_cocycle_fail(H, s);
    r.central_fail = absolutely_central_fail(H, s);
    r.is_lazy = !r.lazy_fail;
    r.is_left_cocycle = !r.left_fail;
    r.is_right_cocycle = !r.right_fail;
    r.is_absolutely_central = !r.central_fail;
    // Lemma 1.2.2 consistency: a lazy left cocycle must be a right cocycle
    if (r.is_reg && r.is_lazy && r.is_left_cocycle)
        require(r.is_right_cocycle, errc::internal, "lazy left cocycle fails the right cocycle identity");
    return r;
}

// ---------------------------------------------------------------------------
// coboundary, adjoint, almost-lazy machinery

/// d(mu)(a,b) = mu(a1) mu(b1) mu^{-1}(a2 b2).
inline BiForm coboundary(const HopfAlgebra& H, const LinForm& mu) {
    LinForm mu_inv = conv_inverse(H, mu);
    BiForm r{Mat(H.dim, H.dim, H.field)};
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) {
            Scalar acc = Scalar::zero(H.field);
            for (const auto& di : H.comult[i]) {
                if (mu.v[di.left].is_zero()) continue;
                for (const auto& dj : H.comult[j]) {
                    if (mu.v[dj.left].is_zero()) continue;
                    Scalar inner = Scalar::zero(H.field);
                    for (const auto& t : H.mult[di.right][dj.right])
                        inner = inner + t.c * mu_inv.v[t.idx];
                    acc = acc + di.c * dj.c * mu.v[di.left] * mu.v[dj.left] * inner;
                }
            }
            r.m.at(i, j) = acc;
        }
    return r;
}

/// Checks that mu is a lazy coboundary witness for sigma: mu lazy, invertible,
/// with d(mu) = sigma (B^2_L membership certificate).
inline bool verify_coboundary_witness(const HopfAlgebra& H, const BiForm& sigma, const LinForm& mu) {
    if (!is_reg1(H, mu) || !is_lazy1(H, mu)) return false;
    return coboundary(H, mu) == sigma;
}

inline LinMap identity_map(const HopfAlgebra& H) { return LinMap{Mat::identity(H.dim, H.field)}; }

/// ad(gamma)(a) = gamma^{-1}(a1) a2 gamma(a3).
inline LinMap ad_map(const HopfAlgebra& H, const LinForm& gamma) {
    LinForm inv = conv_inverse(H, gamma);
    return convolve(H, convolve(H, inv, identity_map(H)), gamma);
}

/// (phi o S) * id * phi, the coinner automorphism attached to an algebra map phi.
inline LinMap coinner_map(const HopfAlgebra& H, const LinForm& phi) {
    LinForm phiS{mat_vec(mat_transpose(H.antipode), phi.v)};
    return convolve(H, convolve(H, phiS, identity_map(H)), phi);
}

struct HopfMorphismReport {
    bool algebra = true, unit = true, coalgebra = true, counit = true, antipode = true;
    std::vector<int> at;
    bool ok() const { return algebra && unit && coalgebra && counit; }
};

/// f : Hs -> Hd respects multiplication, unit, comultiplication and counit.
/// The antipode is automatic for bialgebra morphisms; checked anyway and reported.
inline HopfMorphismReport hopf_morphism_report(const LinMap& f, const HopfAlgebra& Hs,
                                               const HopfAlgebra& Hd) {
    require(f.m.cols == Hs.dim && f.m.rows == Hd.dim, errc::shape_mismatch, "morphism shape mismatch");
    HopfMorphismReport rep;
    if (apply_map(f, Hs.unit) != Hd.unit) {
        rep.unit = false;
        return rep;
    }
    for (int i = 0; i < Hs.dim && rep.algebra; ++i)
        for (int j = 0; j < Hs.dim && rep.algebra; ++j) {
            Vec prod = zero_vec(Hs.dim, Hs.field);
            for (const auto& t : Hs.mult[i][j]) prod[t.idx] = prod[t.idx] + t.c;
            if (apply_map(f, prod) != hopf_mul(Hd, apply_map(f, basis_vec(Hs, i)), apply_map(f, basis_vec(Hs, j)))) {
                rep.algebra = false;
                rep.at = {i, j};
            }
        }
    if (!rep.algebra) return rep;
    for (int i = 0; i < Hs.dim && rep.coalgebra; ++i) {
        Vec lhs = comult_vec(Hd, apply_map(f, basis_vec(Hs, i)));
        Vec rhs = zero_vec(Hd.dim * Hd.dim, Hd.field);
        for (const auto& d : Hs.comult[i]) {
            Vec l = apply_map(f, basis_vec(Hs, d.left)), r = apply_map(f, basis_vec(Hs, d.right));
            for (int u = 0; u < Hd.dim; ++u)
                for (int v = 0; v < Hd.dim; ++v)
                    if (!l[u].is_zero() && !r[v].is_zero())
                        rhs[u * Hd.dim + v] = rhs[u * Hd.dim + v] + d.c * l[u] * r[v];
        }
        if (lhs != rhs) {
            rep.coalgebra = false;
            rep.at = {i};
        }
    }
    if (!rep.coalgebra) return rep;
    for (int i = 0; i < Hs.dim && rep.counit; ++i) {
        if (eval(LinForm{Hd.counit}, apply_map(f, basis_vec(Hs, i))) != Hs.counit[i]) {
            rep.counit = false;
            rep.at = {i};
        }
    }
    if (rep.ok()) {
        rep.antipode = mat_mul(f.m, Hs.antipode) == mat_mul(Hd.antipode, f.m);
        require(rep.antipode, errc::internal, "bialgebra morphism fails antipode compatibility");
    }
    return rep;
}

inline bool is_hopf_morphism(const LinMap& f, const HopfAlgebra& Hs, const HopfAlgebra& Hd) {
    return hopf_morphism_report(f, Hs, Hd).ok();
}

inline bool is_hopf_automorphism(const LinMap& f, const HopfAlgebra& H) {
    return mat_inverse(f.m).has_value() && is_hopf_morphism(f, H, H);
}

/// Almost-lazy test (gamma with lazy coboundary): computes both routes of the
/// criterion -- d(gamma) lazy and ad(gamma) a Hopf automorphism -- and insists
/// they agree.
inline bool is_almost_lazy(const HopfAlgebra& H, const LinForm& gamma) {
    BiForm d = coboundary(H, gamma); // throws NotInvertible for non-units
    bool via_coboundary = is_lazy2(H, d);
    bool via_ad = is_hopf_automorphism(ad_map(H, gamma), H);
    require(via_coboundary == via_ad, errc::internal,
            "almost-lazy criterion mismatch between d(gamma) and ad(gamma)");
    return via_coboundary;
}

// ---------------------------------------------------------------------------
// CoInt / CoInn classification

/// A complete list of algebra maps A -> k, with a completeness certificate.
struct AlgMapSet {
    std::vector<LinForm> maps;
    bool certified_complete = false;
};

enum class CointernalClass { coinner, cointernal_only, not_cointernal_certificate_absent };

inline const char* to_string(CointernalClass c) {
    switch (c) {
        case CointernalClass::coinner: return "CoInner";
        case CointernalClass::cointernal_only: return "CoInternalOnly";
        case CointernalClass::not_cointernal_certificate_absent: return "NotCoInternal-certificate-absent";
    }
    return "?";
}

/// Classifies a Hopf automorphism f against CoInn (coinner witnesses from the
/// certified list of algebra maps) and CoInt (supplied almost-lazy ad-witnesses).
inline CointernalClass classify_cointernal(const HopfAlgebra& H, const LinMap& f,
                                           const AlgMapSet& alg_maps,
                                           const std::vector<LinForm>& ad_witnesses = {}) {
    require(alg_maps.certified_complete, errc::incomplete_witness_set,
            "algebra map list is not certified complete");
    require(is_hopf_automorphism(f, H), errc::not_a_hopf_map, "f is not a Hopf automorphism");
    for (const auto& phi : alg_maps.maps) {
        require(is_algebra_map(H, phi), errc::invalid_datum, "supplied non-algebra map");
        if (coinner_map(H, phi) == f) return CointernalClass::coinner;
    }
    for (const auto& gamma : ad_witnesses) {
        if (!is_reg1(H, gamma)) continue;
        if (ad_map(H, gamma) == f && is_almost_lazy(H, gamma)) return CointernalClass::cointernal_only;
    }
    return CointernalClass::not_cointernal_certificate_absent;
}

// ---------------------------------------------------------------------------
// pullback action of Hopf automorphisms on forms

/// sigma <- alpha = sigma o (alpha (x) alpha).
inline BiForm pullback_action(const HopfAlgebra& H, const BiForm& s, const LinMap& alpha) {
    require(is_hopf_automorphism(alpha, H), errc::not_a_hopf_map, "alpha is not a Hopf automorphism");
    BiForm r{Mat(H.dim, H.dim, H.field)};
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j)
            r.m.at(i, j) = eval(s, apply_map(alpha, basis_vec(H, i)), apply_map(alpha, basis_vec(H, j)));
    return r;
}

inline LinForm pullback(const HopfAlgebra& H, const LinForm& mu, const LinMap& alpha) {
    LinForm r{zero_vec(H.dim, H.field)};
    for (int j = 0; j < H.dim; ++j) r.v[j] = eval(mu, apply_map(alpha, basis_vec(H, j)));
    return r;
}

// ---------------------------------------------------------------------------
// linear presolves: affine spaces of lazy units / normalized lazy bi-forms

struct AffineSpace {
    Vec base;                   // one solution
    std::vector<Vec> directions; // kernel basis
};

/// { mu : mu lazy, mu(1) = 1 } as an affine subspace of A^* (epsilon + kernel).
inline AffineSpace lazy1_affine(const HopfAlgebra& H) {
    int n = H.dim;
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i) {
        // mu(a1) a2 - a1 mu(a2) = 0: one row per (basis a, output index)
        Mat coeff(n, n, H.field); // coeff.at(out, mu-index)
        for (const auto& d : H.comult[i]) {
            coeff.at(d.right, d.left) = coeff.at(d.right, d.left) + d.c;
            coeff.at(d.left, d.right) = coeff.at(d.left, d.right) - d.c;
        }
        for (int out = 0; out < n; ++out) {
            Vec row(coeff.a.begin() + size_t(out) * n, coeff.a.begin() + size_t(out + 1) * n);
            if (!is_zero_vec(row)) rows.push_back(std::move(row));
        }
    }
    // unit-normalization direction: mu(1) stays fixed
    rows.push_back(H.unit);
    Mat M(int(rows.size()), n, H.field);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < n; ++c) M.at(int(r), c) = rows[r][c];
    AffineSpace sp;
    sp.base = H.counit;
    sp.directions = mat_kernel(M);
    return sp;
}

/// { sigma : sigma(a,1)=eps(a)=sigma(1,a), sigma lazy } as an affine subspace
/// of (A (x) A)^*; base point eps (x) eps.
inline AffineSpace lazy2_affine(const HopfAlgebra& H) {
    int n = H.dim, n2 = n * n;
    std::vector<Vec> rows;
    auto push_row = [&](const Vec& row) {
        if (!is_zero_vec(row)) rows.push_back(row);
    };
    // normalization rows
    for (int j = 0; j < n; ++j) {
        Vec row1 = zero_vec(n2, H.field), row2 = zero_vec(n2, H.field);
        for (int i = 0; i < n; ++i) {
            if (H.unit[i].is_zero()) continue;
            row1[i * n + j] = row1[i * n + j] + H.unit[i];
            row2[j * n + i] = row2[j * n + i] + H.unit[i];
        }
        push_row(row1);
        push_row(row2);
    }
    // laziness rows: sigma(a1,b1)(a2 b2)_k - sigma(a2,b2)(a1 b1)_k = 0
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat coeff(n, n2, H.field);
            for (const auto& di : H.comult[i])
                for (const auto& dj : H.comult[j]) {
                    Scalar c = di.c * dj.c;
                    for (const auto& t : H.mult[di.right][dj.right])
                        coeff.at(t.idx, di.left * n + dj.left) =
                            coeff.at(t.idx, di.left * n + dj.left) + c * t.c;
                    for (const auto& t : H.mult[di.left][dj.left])
                        coeff.at(t.idx, di.right * n + dj.right) =
                            coeff.at(t.idx, di.right * n + dj.right) - c * t.c;
                }
            for (int out = 0; out < n; ++out) {
                Vec row(coeff.a.begin() + size_t(out) * n2, coeff.a.begin() + size_t(out + 1) * n2);
                push_row(row);
            }
        }
    // move to homogeneous coordinates around the base point eps (x) eps
    BiForm base = conv_unit2(H);
    Mat M(int(rows.size()), n2, H.field);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < n2; ++c) M.at(int(r), c) = rows[r][c];
    // the normalization rows are affine (rhs eps, not 0); base satisfies them, so
    // the solution set is base + ker(all rows)
    AffineSpace sp;
    sp.base = Vec(base.m.a);
    sp.directions = mat_kernel(M);
    return sp;
}

} // namespace hopflab
