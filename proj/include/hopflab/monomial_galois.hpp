#pragma once

#include "families.hpp"
#include "galois.hpp"

namespace hopflab {

// ---------------------------------------------------------------------------
// group 2-cochains attached to a central element (Section-7 machinery)

/// Normalized group 2-cocycle check for a |G| x |G| table of units.
inline bool is_group_2cocycle(const FiniteGroup& G, const Mat& s) {
    for (int i = 0; i < G.order; ++i) {
        if (!s.at(G.identity, i).is_one() || !s.at(i, G.identity).is_one()) return false;
        for (int j = 0; j < G.order; ++j) {
            if (s.at(i, j).is_zero()) return false;
            for (int k = 0; k < G.order; ++k)
                if (s.at(i, j) * s.at(G.mul(i, j), k) != s.at(j, k) * s.at(i, G.mul(j, k))) return false;
        }
    }
    return true;
}

/// Membership in Z^2_{L,g}(G,k^.): sigma lies in Z^2_g (symmetric against g)
/// and admits mu : G -> k^. with mu(g) = 1 = mu(1) and sigma(g,h) = mu(h) mu(gh)^{-1}.
/// The mu-chase telescopes along <g>-cosets, so membership reduces to the
/// cyclic product condition on each coset.
inline bool z2Lg_membership(const FiniteGroup& G, int g, const Mat& sigma) {
    require(is_group_2cocycle(G, sigma), errc::not_a_cocycle, "not a normalized group 2-cocycle");
    require(G.is_central(g), errc::invalid_datum, "g must be central");
    for (int h = 0; h < G.order; ++h)
        if (sigma.at(g, h) != sigma.at(h, g)) return false;
    int og = G.element_order(g);
    std::vector<bool> seen(G.order, false);
    for (int s = 0; s < G.order; ++s) {
        if (seen[s]) continue;
        Scalar prod = Scalar::one(sigma.a[0].field());
        int cur = s;
        for (int i = 0; i < og; ++i) {
            seen[cur] = true;
            prod = prod * sigma.at(g, cur);
            cur = G.mul(g, cur);
        }
        if (!prod.is_one()) return false;
    }
    return true;
}

/// theta: pullback of a 2-cochain on G/<g> along the canonical projection.
inline Mat theta_map(const FiniteGroup& G, int g, const FiniteGroup& quotient, const Mat& sigma_quot,
                     const std::vector<int>& projection) {
    require(sigma_quot.rows == quotient.order && sigma_quot.cols == quotient.order, errc::shape_mismatch,
            "quotient cochain has wrong shape");
    require(int(projection.size()) == G.order, errc::shape_mismatch, "projection has wrong length");
    require(projection[g] == projection[G.identity], errc::invalid_datum,
            "projection does not kill the central element");
    Mat out(G.order, G.order, sigma_quot.a[0].field());
    for (int h = 0; h < G.order; ++h)
        for (int l = 0; l < G.order; ++l) out.at(h, l) = sigma_quot.at(projection[h], projection[l]);
    return out;
}

// ---------------------------------------------------------------------------
// the biGalois objects A^u_{sigma,a}(G)

/// Lemma-7.4 bicleft criterion: u = id and sigma in Z^2_{L,g}(G,k^').
inline bool is_bicleft_monomial(const GroupDatum& datum, const Mat& sigma, const std::vector<int>& u) {
    for (int h = 0; h < datum.G.order; ++h)
        if (u[h] != h) return false;
    return z2Lg_membership(datum.G, datum.g, sigma);
}

namespace detail {

// product in Z (x) A for comodule-algebra construction
inline Vec mixed_mul_right(const std::vector<std::vector<SparseVec>>& zmult, int zdim,
                           const HopfAlgebra& A, const Vec& u, const Vec& v) {
    const FieldSpec& F = A.field;
    Vec r = zero_vec(zdim * A.dim, F);
    for (int z1 = 0; z1 < zdim; ++z1)
        for (int a1 = 0; a1 < A.dim; ++a1) {
            const Scalar& cu = u[z1 * A.dim + a1];
            if (cu.is_zero()) continue;
            for (int z2 = 0; z2 < zdim; ++z2)
                for (int a2 = 0; a2 < A.dim; ++a2) {
                    const Scalar& cv = v[z2 * A.dim + a2];
                    if (cv.is_zero()) continue;
                    Scalar c = cu * cv;
                    for (const auto& tz : zmult[z1][z2])
                        for (const auto& ta : A.mult[a1][a2])
                            r[tz.idx * A.dim + ta.idx] = r[tz.idx * A.dim + ta.idx] + c * tz.c * ta.c;
                }
        }
    return r;
}

inline Vec mixed_mul_left(const HopfAlgebra& A, const std::vector<std::vector<SparseVec>>& zmult,
                          int zdim, const Vec& u, const Vec& v) {
    const FieldSpec& F = A.field;
    Vec r = zero_vec(A.dim * zdim, F);
    for (int a1 = 0; a1 < A.dim; ++a1)
        for (int z1 = 0; z1 < zdim; ++z1) {
            const Scalar& cu = u[a1 * zdim + z1];
            if (cu.is_zero()) continue;
            for (int a2 = 0; a2 < A.dim; ++a2)
                for (int z2 = 0; z2 < zdim; ++z2) {
                    const Scalar& cv = v[a2 * zdim + z2];
                    if (cv.is_zero()) continue;
                    Scalar c = cu * cv;
                    for (const auto& ta : A.mult[a1][a2])
                        for (const auto& tz : zmult[z1][z2])
                            r[ta.idx * zdim + tz.idx] = r[ta.idx * zdim + tz.idx] + c * ta.c * tz.c;
                }
        }
    return r;
}

} // namespace detail

/// A^u_{sigma,a}(G): generators X, T_h with T_h T_l = sigma(h,l) T_{hl},
/// X T_h = chi(h) T_h X, X^d = a T_{g^d}; right coaction rho(X) = 1 (x) x +
/// X (x) g, rho(T_h) = T_h (x) h; left coaction beta(X) = 1 (x) X + x (x) T_g,
/// beta(T_h) = u(h) (x) T_h.
inline ComoduleAlgebra galois_monomial(std::shared_ptr<const HopfAlgebra> Ap, const Mat& sigma,
                                       const std::vector<int>& u, const Scalar& a) {
    const HopfAlgebra& A = *Ap;
    require(A.gens.k == GenData::kind::monomial && A.gens.monomial, errc::invalid_datum,
            "expected a monomial Hopf algebra A(G)");
    const MonomialMeta& meta = *A.gens.monomial;
    const FiniteGroup& G = meta.G;
    const FieldSpec& F = A.field;
    int d = meta.d;
    require(is_group_2cocycle(G, sigma), errc::not_a_cocycle, "sigma is not a normalized group 2-cocycle");
    // u must be an automorphism fixing g
    require(int(u.size()) == G.order, errc::shape_mismatch, "u has wrong length");
    for (int i = 0; i < G.order; ++i)
        for (int j = 0; j < G.order; ++j)
            require(u[G.mul(i, j)] == G.mul(u[i], u[j]), errc::invalid_datum, "u is not an automorphism");
    require(u[meta.g] == meta.g, errc::invalid_datum, "u must fix g");
    // compatibility (7.1): chi(u(h)) = sigma(g,h)^{-1} sigma(h,g) chi(h)
    for (int h = 0; h < G.order; ++h)
        require(meta.chi[u[h]] == sigma.at(meta.g, h).inverse() * sigma.at(h, meta.g) * meta.chi[h],
                errc::incompatible_triplet, "compatibility (7.1) fails");
    // compatibility (7.2): a = 0 unless the datum is of type I
    GroupDatum datum{G, meta.g, meta.chi, meta.mu};
    if (!datum.type_one())
        require(a.is_zero(), errc::incompatible_triplet, "a must vanish for non-type-I data");

    ComoduleAlgebra Z;
    Z.field = F;
    Z.dim = G.order * d;
    Z.basis.resize(Z.dim);
    for (int h = 0; h < G.order; ++h)
        for (int i = 0; i < d; ++i) {
            std::string nm = "T_" + G.names[h];
            if (i == 1) nm += "*X";
            if (i > 1) nm += "*X^" + std::to_string(i);
            Z.basis[meta.index(h, i)] = nm;
        }
    int gd = G.power(meta.g, d);
    Z.mult.assign(Z.dim, std::vector<SparseVec>(Z.dim));
    for (int h = 0; h < G.order; ++h)
        for (int i = 0; i < d; ++i)
            for (int l = 0; l < G.order; ++l)
                for (int j = 0; j < d; ++j) {
                    Scalar c = meta.chi[l].pow(i) * sigma.at(h, l);
                    int hl = G.mul(h, l);
                    SparseVec& out = Z.mult[meta.index(h, i)][meta.index(l, j)];
                    if (i + j < d) {
                        out.push_back({meta.index(hl, i + j), c});
                    } else if (!a.is_zero()) {
                        // X^{i+j} = a T_{g^d} X^{i+j-d}
                        Scalar cc = c * a * sigma.at(hl, gd);
                        out.push_back({meta.index(G.mul(hl, gd), i + j - d), cc});
                    }
                }
    Z.unit = zero_vec(Z.dim, F);
    Z.unit[meta.index(G.identity, 0)] = Scalar::one(F);

    // right coaction: rho(T_h X^i) = rho(T_h) rho(X)^i in Z (x) A
    Z.Hr = Ap;
    Z.rho.assign(Z.dim, {});
    {
        Vec rx = zero_vec(Z.dim * A.dim, F);
        rx[meta.index(G.identity, 0) * A.dim + meta.index(G.identity, 1)] = Scalar::one(F); // 1 (x) x
        rx[meta.index(G.identity, 1) * A.dim + meta.index(meta.g, 0)] = Scalar::one(F);     // X (x) g
        for (int h = 0; h < G.order; ++h) {
            Vec acc = zero_vec(Z.dim * A.dim, F);
            acc[meta.index(h, 0) * A.dim + meta.index(h, 0)] = Scalar::one(F); // T_h (x) h
            for (int i = 0; i < d; ++i) {
                if (i > 0) acc = detail::mixed_mul_right(Z.mult, Z.dim, A, acc, rx);
                for (int z = 0; z < Z.dim; ++z)
                    for (int b = 0; b < A.dim; ++b)
                        if (!acc[z * A.dim + b].is_zero())
                            Z.rho[meta.index(h, i)].push_back({z, b, acc[z * A.dim + b]});
            }
        }
    }
    // left coaction: beta(T_h X^i) = beta(T_h) beta(X)^i in A (x) Z
    Z.Hl = Ap;
    Z.lco.assign(Z.dim, {});
    {
        Vec bx = zero_vec(A.dim * Z.dim, F);
        bx[meta.index(G.identity, 0) * Z.dim + meta.index(G.identity, 1)] = Scalar::one(F); // 1 (x) X
        bx[meta.index(G.identity, 1) * Z.dim + meta.index(meta.g, 0)] = Scalar::one(F);     // x (x) T_g
        for (int h = 0; h < G.order; ++h) {
            Vec acc = zero_vec(A.dim * Z.dim, F);
            acc[meta.index(u[h], 0) * Z.dim + meta.index(h, 0)] = Scalar::one(F); // u(h) (x) T_h
            for (int i = 0; i < d; ++i) {
                if (i > 0) acc = detail::mixed_mul_left(A, Z.mult, Z.dim, acc, bx);
                for (int b = 0; b < A.dim; ++b)
                    for (int z = 0; z < Z.dim; ++z)
                        if (!acc[b * Z.dim + z].is_zero())
                            Z.lco[meta.index(h, i)].push_back({b, z, acc[b * Z.dim + z]});
            }
        }
    }
    auto rep = check_comodule_algebra(Z);
    require(rep.ok, errc::internal, "A^u_{sigma,a} fails comodule axiom " + rep.failed);
    return Z;
}

/// The right-colinear isomorphism Phi : A(G) -> A^u_{sigma,a}(G), h x^i -> T_h X^i.
/// With both sides in h-major layout this is the identity matrix.
inline LinMap monomial_cleft_phi(const HopfAlgebra& A) {
    return LinMap{Mat::identity(A.dim, A.field)};
}

/// The d-fold sigma-twisted power of x in _sigma A(G); for the cleft cocycle of
/// A^{id}_{triv,a} this equals a.1 (the Taft class invariant).
inline Vec monomial_twisted_power(const HopfAlgebra& A, const BiForm& sigma) {
    require(A.gens.k == GenData::kind::monomial && A.gens.monomial, errc::invalid_datum,
            "expected a monomial Hopf algebra");
    const MonomialMeta& meta = *A.gens.monomial;
    Vec x = basis_vec(A, meta.index(meta.G.identity, 1));
    Vec acc = x;
    for (int k = 1; k < meta.d; ++k) acc = left_twist_mul(A, sigma, acc, x);
    return acc;
}

/// Scalar invariant: the coefficient of 1 in the twisted d-th power of x.
inline Scalar monomial_invariant(const HopfAlgebra& A, const BiForm& sigma) {
    const MonomialMeta& meta = *A.gens.monomial;
    return monomial_twisted_power(A, sigma)[meta.index(meta.G.identity, 0)];
}

} // namespace hopflab
