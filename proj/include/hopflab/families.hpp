#pragma once

#include <algorithm>
#include <functional>

#include "lazy.hpp"

namespace hopflab {

// ===========================================================================
// group algebras

inline HopfAlgebra group_algebra(const FieldSpec& F, const FiniteGroup& G) {
    G.validate();
    HopfAlgebra H;
    H.field = F;
    H.dim = G.order;
    H.basis = G.names;
    H.mult.assign(H.dim, std::vector<SparseVec>(H.dim));
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) H.mult[i][j] = {{G.mul(i, j), Scalar::one(F)}};
    H.comult.assign(H.dim, {});
    for (int i = 0; i < H.dim; ++i) H.comult[i] = {{i, i, Scalar::one(F)}};
    H.unit = zero_vec(H.dim, F);
    H.unit[G.identity] = Scalar::one(F);
    H.counit = Vec(H.dim, Scalar::one(F));
    H.antipode = Mat(H.dim, H.dim, F);
    for (int j = 0; j < H.dim; ++j) H.antipode.at(G.inverse[j], j) = Scalar::one(F);
    H.gens.k = GenData::kind::group;
    H.gens.group = std::make_shared<FiniteGroup>(G);
    return H;
}

inline HopfAlgebra dual_group_algebra(const FieldSpec& F, const FiniteGroup& G) {
    return dual_hopf(group_algebra(F, G));
}

/// All group characters G -> F^. with values in F.  Complete for the supported
/// field kinds: the roots of unity of Q, Q(zeta_N) and F_p are all enumerable.
inline std::vector<std::vector<Scalar>> characters(const FiniteGroup& G, const FieldSpec& F) {
    auto roots_dividing = [&](int m) {
        std::vector<Scalar> out;
        switch (F.kind) {
            case field_kind::rational:
                out.push_back(Scalar::one(F));
                if (m % 2 == 0) out.push_back(-Scalar::one(F));
                break;
            case field_kind::cyclotomic: {
                long N = F.param;
                long M = (N % 2 == 0) ? N : 2 * N;
                Scalar u = (N % 2 == 0) ? Scalar::zeta(N) : -Scalar::zeta(N);
                Scalar acc = Scalar::one(F);
                for (long j = 0; j < M; ++j) {
                    if (acc.pow(m).is_one()) out.push_back(acc);
                    acc = acc * u;
                }
                break;
            }
            case field_kind::prime:
                for (long v = 1; v < F.param; ++v) {
                    Scalar s = Scalar::fp(F.param, v);
                    if (s.pow(m).is_one()) out.push_back(s);
                }
                break;
        }
        return out;
    };

    // greedy generating set with expression of every element as a word
    std::vector<int> gens;
    std::vector<int> parent(G.order, -1), via(G.order, -1); // elem = parent * gens[via]
    std::vector<bool> known(G.order, false);
    known[G.identity] = true;
    int known_count = 1;
    while (known_count < G.order) {
        int pick = -1;
        for (int i = 0; i < G.order && pick < 0; ++i)
            if (!known[i]) pick = i;
        gens.push_back(pick);
        bool grew = true;
        while (grew) {
            grew = false;
            for (int e = 0; e < G.order; ++e) {
                if (!known[e]) continue;
                for (size_t gi = 0; gi < gens.size(); ++gi) {
                    int t = G.mul(e, gens[gi]);
                    if (!known[t]) {
                        known[t] = true;
                        parent[t] = e;
                        via[t] = int(gi);
                        ++known_count;
                        grew = true;
                    }
                }
            }
        }
    }

    std::vector<std::vector<Scalar>> result;
    std::vector<std::vector<Scalar>> cands;
    for (int g : gens) cands.push_back(roots_dividing(G.element_order(g)));
    std::vector<size_t> pick(gens.size(), 0);
    auto try_assignment = [&]() {
        std::vector<Scalar> chi(G.order, Scalar::one(F));
        for (int e = 0; e < G.order; ++e) {
            if (parent[e] < 0) continue;
            // evaluate along the word chain; parents always come earlier in the chain
        }
        // topological evaluation: repeat until all filled
        std::vector<bool> done(G.order, false);
        done[G.identity] = true;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int e = 0; e < G.order; ++e) {
                if (done[e] || parent[e] < 0 || !done[parent[e]]) continue;
                chi[e] = chi[parent[e]] * cands[via[e]][pick[via[e]]];
                done[e] = true;
                progress = true;
            }
        }
        for (int i = 0; i < G.order; ++i)
            for (int j = 0; j < G.order; ++j)
                if (chi[G.mul(i, j)] != chi[i] * chi[j]) return;
        result.push_back(std::move(chi));
    };
    // odometer over candidate values per generator
    while (true) {
        try_assignment();
        size_t k = 0;
        while (k < gens.size()) {
            if (++pick[k] < cands[k].size()) break;
            pick[k] = 0;
            ++k;
        }
        if (k == gens.size()) break;
        if (gens.empty()) break;
    }
    if (gens.empty()) result.push_back({});
    // normalize: the trivial character first, deterministic order otherwise
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == b[i]) continue;
            return a[i].str() < b[i].str();
        }
        return false;
    });
    return result;
}

// ===========================================================================
// E(n) and Sweedler's Hopf algebra

namespace detail {

inline int popcount(unsigned x) { return __builtin_popcount(x); }

// sign of concatenating exterior monomials w_P w_Q (both ascending), 0 overlap handled by caller
inline int merge_sign(unsigned P, unsigned Q) {
    int inv = 0;
    for (int i = 0; i < 31; ++i)
        if (P & (1u << i))
            inv += popcount(Q & ((1u << i) - 1)); // q < i pairs
    return (inv % 2 == 0) ? 1 : -1;
}

inline void check_two_invertible(const FieldSpec& F) {
    require(!(F.kind == field_kind::prime && F.param == 2), errc::char_two,
            "2 must be invertible in the base field");
}

} // namespace detail

inline Vec basis_vec_helper(int dim, int i, const FieldSpec& F) {
    Vec v = zero_vec(dim, F);
    v[i] = Scalar::one(F);
    return v;
}

inline Vec tensor2_unit_index(int dim, int unit_index, const FieldSpec& F) {
    Vec v = zero_vec(dim * dim, F);
    v[unit_index * dim + unit_index] = Scalar::one(F);
    return v;
}

/// E(n): generators c, x_1..x_n, relations c^2=1, cx_i+x_ic=0, x_ix_j+x_jx_i=0,
/// x_i^2=0; coproduct D(c)=c(x)c, D(x_i)=1(x)x_i+x_i(x)c.
/// Basis c^a x_P at index (P<<1)|a.
inline HopfAlgebra en_algebra(const FieldSpec& F, int n) {
    detail::check_two_invertible(F);
    require(n >= 1 && n <= 12, errc::invalid_datum, "E(n) supported for 1 <= n <= 12");
    HopfAlgebra H;
    H.field = F;
    H.dim = 1 << (n + 1);
    auto ix = [](unsigned P, int a) { return int((P << 1) | unsigned(a)); };
    H.basis.resize(H.dim);
    for (unsigned P = 0; P < (1u << n); ++P)
        for (int a = 0; a < 2; ++a) {
            std::string name = a ? "c" : "";
            for (int i = 0; i < n; ++i)
                if (P & (1u << i)) name += (name.empty() ? "" : "*") + std::string("x") + std::to_string(i + 1);
            if (name.empty()) name = "1";
            H.basis[ix(P, a)] = name;
        }
    H.mult.assign(H.dim, std::vector<SparseVec>(H.dim));
    for (unsigned P = 0; P < (1u << n); ++P)
        for (int a = 0; a < 2; ++a)
            for (unsigned Q = 0; Q < (1u << n); ++Q)
                for (int b = 0; b < 2; ++b) {
                    if (P & Q) continue; // x_i^2 = 0
                    int sign = detail::merge_sign(P, Q);
                    if (b == 1 && (detail::popcount(P) % 2 == 1)) sign = -sign; // move x_P past c
                    H.mult[ix(P, a)][ix(Q, b)] = {{ix(P | Q, a ^ b), Scalar::of_long(F, sign)}};
                }
    H.unit = basis_vec_helper(H.dim, ix(0, 0), F);
    // comultiplication computed in-algebra from the generator coproducts
    H.comult.assign(H.dim, {});
    Vec dc = zero_vec(H.dim * H.dim, F);
    dc[ix(0, 1) * H.dim + ix(0, 1)] = Scalar::one(F); // c (x) c
    for (unsigned P = 0; P < (1u << n); ++P)
        for (int a = 0; a < 2; ++a) {
            Vec acc = tensor2_unit_index(H.dim, ix(0, 0), F);
            for (int rep = 0; rep < a; ++rep) acc = tensor2_mul(H, acc, dc);
            for (int i = 0; i < n; ++i) {
                if (!(P & (1u << i))) continue;
                Vec dx = zero_vec(H.dim * H.dim, F);
                dx[ix(0, 0) * H.dim + ix(1u << i, 0)] = Scalar::one(F); // 1 (x) x_i
                dx[ix(1u << i, 0) * H.dim + ix(0, 1)] = Scalar::one(F); // x_i (x) c
                acc = tensor2_mul(H, acc, dx);
            }
            for (int l = 0; l < H.dim; ++l)
                for (int r = 0; r < H.dim; ++r)
                    if (!acc[l * H.dim + r].is_zero()) H.comult[ix(P, a)].push_back({l, r, acc[l * H.dim + r]});
        }
    H.counit = zero_vec(H.dim, F);
    for (int a = 0; a < 2; ++a) H.counit[ix(0, a)] = Scalar::one(F);
    // antipode: S(c)=c, S(x_i) = -x_i c = c x_i, extended anti-multiplicatively
    H.antipode = Mat(H.dim, H.dim, F);
    for (unsigned P = 0; P < (1u << n); ++P)
        for (int a = 0; a < 2; ++a) {
            Vec acc = H.unit;
            for (int i = n - 1; i >= 0; --i) { // reverse order for the anti-morphism
                if (!(P & (1u << i))) continue;
                Vec sx = zero_vec(H.dim, F);
                sx[ix(1u << i, 1)] = Scalar::one(F); // c x_i
                acc = hopf_mul(H, acc, sx);
            }
            if (a) {
                Vec c = zero_vec(H.dim, F);
                c[ix(0, 1)] = Scalar::one(F);
                acc = hopf_mul(H, acc, c);
            }
            for (int m = 0; m < H.dim; ++m) H.antipode.at(m, ix(P, a)) = acc[m];
        }
    H.gens.k = GenData::kind::en;
    H.gens.en_n = n;
    return H;
}

/// Sweedler's 4-dimensional Hopf algebra H4 = E(1), with basis named 1, g, x, gx.
inline HopfAlgebra sweedler(const FieldSpec& F = FieldSpec::Q()) {
    HopfAlgebra H = en_algebra(F, 1);
    H.basis = {"1", "g", "x", "gx"};
    return H;
}

/// The lazy 2-cocycle family sigma_t on H4: sigma_t(x,x)=sigma_t(gx,x)=t/2,
/// sigma_t(x,gx)=sigma_t(gx,gx)=-t/2, sigma_t(g,g)=1, normalized elsewhere.
inline BiForm sweedler_sigma(const HopfAlgebra& H4, const Scalar& t) {
    require(H4.dim == 4, errc::shape_mismatch, "sigma_t lives on H4");
    const FieldSpec& F = H4.field;
    Scalar half = Scalar::of_long(F, 2).inverse();
    Scalar th = t * half;
    BiForm s{Mat(4, 4, F)};
    // basis order 1, g, x, gx
    s.m.at(0, 0) = Scalar::one(F);
    s.m.at(0, 1) = Scalar::one(F);
    s.m.at(1, 0) = Scalar::one(F);
    s.m.at(1, 1) = Scalar::one(F);
    s.m.at(2, 2) = th;
    s.m.at(3, 2) = th;
    s.m.at(2, 3) = -th;
    s.m.at(3, 3) = -th;
    return s;
}

/// The Hopf automorphism alpha_t of H4: g -> g, x -> t x (t invertible).
inline LinMap h4_aut(const HopfAlgebra& H4, const Scalar& t) {
    require(H4.dim == 4, errc::shape_mismatch, "alpha_t lives on H4");
    LinMap f{Mat::identity(4, H4.field)};
    f.m.at(2, 2) = t;
    f.m.at(3, 3) = t;
    return f;
}

/// The self-duality Phi : E(n) -> E(n)* of Example-2.2 type:
/// Phi(c) = 1* - c*, Phi(x_i) = x_i* + (c x_i)*, extended as an algebra map.
inline LinMap en_phi(const HopfAlgebra& En, const HopfAlgebra& EnDual) {
    int n = En.gens.en_n;
    require(En.gens.k == GenData::kind::en && n >= 1, errc::invalid_datum, "expected an E(n) algebra");
    const FieldSpec& F = En.field;
    int dim = En.dim;
    auto ix = [](unsigned P, int a) { return int((P << 1) | unsigned(a)); };
    Vec phi_c = zero_vec(dim, F);
    phi_c[ix(0, 0)] = Scalar::one(F);
    phi_c[ix(0, 1)] = -Scalar::one(F);
    Mat out(dim, dim, F);
    for (unsigned P = 0; P < (1u << n); ++P)
        for (int a = 0; a < 2; ++a) {
            Vec acc = EnDual.unit;
            if (a) acc = hopf_mul(EnDual, acc, phi_c);
            for (int i = 0; i < n; ++i) {
                if (!(P & (1u << i))) continue;
                Vec phi_x = zero_vec(dim, F);
                phi_x[ix(1u << i, 0)] = Scalar::one(F);
                phi_x[ix(1u << i, 1)] = Scalar::one(F);
                acc = hopf_mul(EnDual, acc, phi_x);
            }
            for (int m = 0; m < dim; ++m) out.at(m, ix(P, a)) = acc[m];
        }
    return LinMap{out};
}

/// The algebra map 1* - c* on E(n) (the nontrivial element of Alg(E(n),k)).
inline LinForm en_ghat(const HopfAlgebra& En) {
    require(En.gens.k == GenData::kind::en, errc::invalid_datum, "expected an E(n) algebra");
    LinForm f{zero_vec(En.dim, En.field)};
    f.v[0] = Scalar::one(En.field);
    f.v[1] = -Scalar::one(En.field);
    return f;
}

/// Base universal r-form on E(n): the dual of the triangular structure R_g,
/// r = (1/2)(eps(x)eps + eps(x)ghat + ghat(x)eps - ghat(x)ghat).
inline BiForm en_rform_base(const HopfAlgebra& En) {
    const FieldSpec& F = En.field;
    detail::check_two_invertible(F);
    LinForm g = en_ghat(En);
    Scalar half = Scalar::of_long(F, 2).inverse();
    BiForm r{Mat(En.dim, En.dim, F)};
    for (int i = 0; i < En.dim; ++i)
        for (int j = 0; j < En.dim; ++j)
            r.m.at(i, j) =
                half * (En.counit[i] * En.counit[j] + En.counit[i] * g.v[j] + g.v[i] * En.counit[j] -
                        g.v[i] * g.v[j]);
    return r;
}

// ===========================================================================
// monomial Hopf algebras A(G) (Section-7 style group data)

struct MonomialMeta {
    FiniteGroup G;
    int g = 0;
    std::vector<Scalar> chi;
    Scalar mu;
    int d = 0;
    int index(int h, int i) const { return h * d + i; }
};

/// Group datum (G, g, chi, mu):  g central, chi a character with chi(g) != 1,
/// mu = 0 when o(g)=o(chi(g)), and chi^{o(chi(g))} = 1 whenever mu != 0.
struct GroupDatum {
    FiniteGroup G;
    int g = 0;
    std::vector<Scalar> chi;
    Scalar mu;

    int d() const {
        auto o = chi[g].multiplicative_order();
        require(o.has_value(), errc::invalid_datum, "chi(g) is not a root of unity");
        return int(*o);
    }

    bool type_one() const {
        if (!mu.is_zero()) return false;
        int dd = d();
        if (G.element_order(g) != dd) return false;
        for (int h = 0; h < G.order; ++h)
            if (!chi[h].pow(dd).is_one()) return false;
        return true;
    }

    void validate() const {
        G.validate();
        require(int(chi.size()) == G.order, errc::invalid_datum, "character has wrong length");
        for (int i = 0; i < G.order; ++i)
            for (int j = 0; j < G.order; ++j)
                require(chi[G.mul(i, j)] == chi[i] * chi[j], errc::invalid_datum,
                        "chi is not a character");
        require(G.is_central(g), errc::invalid_datum, "g is not central");
        require(!(chi[g].is_one()), errc::invalid_datum, "chi(g) must differ from 1");
        int dd = d();
        if (G.element_order(g) == dd)
            require(mu.is_zero(), errc::invalid_datum, "mu must vanish when o(g) = o(chi(g))");
        if (!mu.is_zero())
            for (int h = 0; h < G.order; ++h)
                require(chi[h].pow(dd).is_one(), errc::invalid_datum, "chi^d != 1 with mu nonzero");
    }
};

/// Gaussian binomial coefficient by the standard recurrence (test oracle for
/// the in-algebra coproduct expansion).
inline Scalar qbinom(int i, int l, const Scalar& q) {
    const FieldSpec& F = q.field();
    if (l < 0 || l > i) return Scalar::zero(F);
    std::vector<std::vector<Scalar>> c(i + 1, std::vector<Scalar>(i + 1, Scalar::zero(F)));
    for (int a = 0; a <= i; ++a) {
        c[a][0] = Scalar::one(F);
        for (int b = 1; b <= a; ++b) {
            Scalar upper = (b <= a - 1) ? c[a - 1][b] : Scalar::zero(F);
            c[a][b] = q.pow(b) * upper + c[a - 1][b - 1];
        }
    }
    return c[i][l];
}

/// A(G): basis h x^i (0 <= i < d), relations x h = chi(h) h x, x^d = mu(1 - g^d),
/// coproduct computed by expanding D(h) D(x)^i inside A (x) A.
inline HopfAlgebra monomial_hopf(const FieldSpec& F, const GroupDatum& datum) {
    datum.validate();
    const FiniteGroup& G = datum.G;
    int d = datum.d();
    MonomialMeta meta{G, datum.g, datum.chi, datum.mu, d};

    HopfAlgebra H;
    H.field = F;
    H.dim = G.order * d;
    for (size_t i = 0; i < datum.chi.size(); ++i)
        require(datum.chi[i].field() == F, errc::field_mismatch, "character values in wrong field");
    H.basis.resize(H.dim);
    for (int h = 0; h < G.order; ++h)
        for (int i = 0; i < d; ++i) {
            std::string nm = G.names[h];
            if (i == 1) nm += "*x";
            if (i > 1) nm += "*x^" + std::to_string(i);
            H.basis[meta.index(h, i)] = nm;
        }
    int gd = G.power(datum.g, d);
    H.mult.assign(H.dim, std::vector<SparseVec>(H.dim));
    for (int h = 0; h < G.order; ++h)
        for (int i = 0; i < d; ++i)
            for (int l = 0; l < G.order; ++l)
                for (int j = 0; j < d; ++j) {
                    Scalar c = datum.chi[l].pow(i);
                    int hl = G.mul(h, l);
                    SparseVec& out = H.mult[meta.index(h, i)][meta.index(l, j)];
                    if (i + j < d) {
                        out.push_back({meta.index(hl, i + j), c});
                    } else if (!datum.mu.is_zero()) {
                        // x^{i+j} = mu (1 - g^d) x^{i+j-d}
                        out.push_back({meta.index(hl, i + j - d), c * datum.mu});
                        out.push_back({meta.index(G.mul(hl, gd), i + j - d), -(c * datum.mu)});
                    }
                }
    H.unit = zero_vec(H.dim, F);
    H.unit[meta.index(G.identity, 0)] = Scalar::one(F);
    H.comult.assign(H.dim, {});
    {
        Vec dx = zero_vec(H.dim * H.dim, F);
        dx[meta.index(G.identity, 0) * H.dim + meta.index(G.identity, 1)] = Scalar::one(F);
        dx[meta.index(G.identity, 1) * H.dim + meta.index(datum.g, 0)] = Scalar::one(F);
        for (int h = 0; h < G.order; ++h) {
            Vec acc = zero_vec(H.dim * H.dim, F);
            acc[meta.index(h, 0) * H.dim + meta.index(h, 0)] = Scalar::one(F);
            for (int i = 0; i < d; ++i) {
                if (i > 0) acc = tensor2_mul(H, acc, dx);
                for (int l = 0; l < H.dim; ++l)
                    for (int r = 0; r < H.dim; ++r)
                        if (!acc[l * H.dim + r].is_zero())
                            H.comult[meta.index(h, i)].push_back({l, r, acc[l * H.dim + r]});
            }
        }
    }
    H.counit = zero_vec(H.dim, F);
    for (int h = 0; h < G.order; ++h) H.counit[meta.index(h, 0)] = Scalar::one(F);
    // S(h) = h^{-1}, S(x) = -x g^{-1}, extended anti-multiplicatively
    H.antipode = Mat(H.dim, H.dim, F);
    Vec sx = zero_vec(H.dim, F);
    sx[meta.index(G.inverse[datum.g], 1)] = -datum.chi[G.inverse[datum.g]];
    for (int h = 0; h < G.order; ++h)
        for (int i = 0; i < d; ++i) {
            Vec acc = zero_vec(H.dim, F);
            acc[meta.index(G.inverse[h], 0)] = Scalar::one(F);
            for (int rep = 0; rep < i; ++rep) acc = hopf_mul(H, sx, acc);
            for (int m = 0; m < H.dim; ++m) H.antipode.at(m, meta.index(h, i)) = acc[m];
        }
    H.gens.k = GenData::kind::monomial;
    H.gens.monomial = std::make_shared<MonomialMeta>(std::move(meta));
    return H;
}

/// Taft algebra H_{N,q} with q = zeta_N, over Q(zeta_N).
inline HopfAlgebra taft(int N) {
    FieldSpec F = FieldSpec::cyclotomic(N);
    FiniteGroup G = FiniteGroup::cyclic(N);
    std::vector<Scalar> chi(N);
    for (int j = 0; j < N; ++j) chi[j] = Scalar::zeta(N).pow(j);
    GroupDatum datum{G, 1, chi, Scalar::zero(F)};
    return monomial_hopf(F, datum);
}

/// Cyclic datum (d, n, N, alpha, q) of Example-7.5 type.
struct CyclicDatum {
    int d, n, N;
    int alpha;
    Scalar q;

    void validate() const {
        require(d > 1 && n > 1 && N > 1, errc::invalid_datum, "d, n, N must exceed 1");
        require(n % d == 0 && N % n == 0, errc::invalid_datum, "need d | n | N");
        require((N / n) % alpha == 0, errc::invalid_datum, "need alpha | N/n");
        require(std::gcd(alpha, d) == 1, errc::invalid_datum, "need gcd(alpha, d) = 1");
        auto o = q.multiplicative_order();
        require(o.has_value() && *o == long(N) * d / (long(alpha) * n), errc::invalid_datum,
                "o(q) must equal Nd/(alpha n)");
    }

    GroupDatum group_datum(const FieldSpec& F) const {
        validate();
        FiniteGroup G = FiniteGroup::cyclic(N);
        std::vector<Scalar> chi(N);
        for (int j = 0; j < N; ++j) chi[j] = q.pow(j);
        (void)F;
        return GroupDatum{G, (N / n) % N, chi, Scalar::zero(q.field())};
    }
};

/// The non-abelian order-16 group  < a, b, g | a^2=b^2=g^4=1, ab = ba g^2, g central >.
inline FiniteGroup group_order16() {
    auto enc = [](int alpha, int beta, int gamma) { return alpha * 8 + beta * 4 + gamma; };
    std::vector<std::vector<int>> t(16, std::vector<int>(16));
    std::vector<std::string> names(16);
    for (int a1 = 0; a1 < 2; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int c1 = 0; c1 < 4; ++c1) {
                std::string nm;
                if (a1) nm += "a";
                if (b1) nm += "b";
                if (c1) nm += (nm.empty() ? "" : "*") + std::string("g") + (c1 > 1 ? "^" + std::to_string(c1) : "");
                if (nm.empty()) nm = "1";
                names[enc(a1, b1, c1)] = nm;
                for (int a2 = 0; a2 < 2; ++a2)
                    for (int b2 = 0; b2 < 2; ++b2)
                        for (int c2 = 0; c2 < 4; ++c2)
                            // b^beta a^alpha' = a^alpha' b^beta g^{2 beta alpha'}
                            t[enc(a1, b1, c1)][enc(a2, b2, c2)] =
                                enc((a1 + a2) % 2, (b1 + b2) % 2, (c1 + c2 + 2 * b1 * a2) % 4);
            }
    return FiniteGroup::from_table(std::move(t), std::move(names));
}

// ===========================================================================
// matched pairs and double crossed products

/// Matched pair (B, A, act_l, act_r): act_l is the left action of A on B
/// (a (x) b -> B), act_r the right action of A by B (a (x) b -> A).
struct MatchedPair {
    std::shared_ptr<const HopfAlgebra> B, A;
    std::vector<std::vector<SparseVec>> act_l; // act_l[a][b] in B
    std::vector<std::vector<SparseVec>> act_r; // act_r[a][b] in A

    Vec left(const Vec& av, const Vec& bv) const { // a -> b : element of B
        Vec r = zero_vec(B->dim, B->field);
        for (int a = 0; a < A->dim; ++a) {
            if (av[a].is_zero()) continue;
            for (int b = 0; b < B->dim; ++b) {
                if (bv[b].is_zero()) continue;
                Scalar c = av[a] * bv[b];
                for (const auto& t : act_l[a][b]) r[t.idx] = r[t.idx] + c * t.c;
            }
        }
        return r;
    }
    Vec right(const Vec& av, const Vec& bv) const { // a <- b : element of A
        Vec r = zero_vec(A->dim, A->field);
        for (int a = 0; a < A->dim; ++a) {
            if (av[a].is_zero()) continue;
            for (int b = 0; b < B->dim; ++b) {
                if (bv[b].is_zero()) continue;
                Scalar c = av[a] * bv[b];
                for (const auto& t : act_r[a][b]) r[t.idx] = r[t.idx] + c * t.c;
            }
        }
        return r;
    }

    bool trivial_actions() const {
        for (int a = 0; a < A->dim; ++a)
            for (int b = 0; b < B->dim; ++b) {
                Vec l = left(basis_vec(*A, a), basis_vec(*B, b));
                Vec want_l = vec_scale(A->counit[a], basis_vec(*B, b));
                if (l != want_l) return false;
                Vec r = right(basis_vec(*A, a), basis_vec(*B, b));
                Vec want_r = vec_scale(B->counit[b], basis_vec(*A, a));
                if (r != want_r) return false;
            }
        return true;
    }
};

inline MatchedPair trivial_matched_pair(std::shared_ptr<const HopfAlgebra> B,
                                        std::shared_ptr<const HopfAlgebra> A) {
    require(A->field == B->field, errc::field_mismatch, "matched pair over different fields");
    MatchedPair mp;
    mp.B = B;
    mp.A = A;
    mp.act_l.assign(A->dim, std::vector<SparseVec>(B->dim));
    mp.act_r.assign(A->dim, std::vector<SparseVec>(B->dim));
    for (int a = 0; a < A->dim; ++a)
        for (int b = 0; b < B->dim; ++b) {
            if (!A->counit[a].is_zero()) mp.act_l[a][b] = {{b, A->counit[a]}};
            if (!B->counit[b].is_zero()) mp.act_r[a][b] = {{a, B->counit[b]}};
        }
    return mp;
}

/// Matched pair of group algebras from two groups acting on each other
/// (left action table gb[a][b], right action table ga[a][b]).
inline MatchedPair group_matched_pair(const FieldSpec& F, const FiniteGroup& GB, const FiniteGroup& GA,
                                      const std::vector<std::vector<int>>& a_on_b,
                                      const std::vector<std::vector<int>>& b_on_a) {
    MatchedPair mp;
    mp.B = std::make_shared<HopfAlgebra>(group_algebra(F, GB));
    mp.A = std::make_shared<HopfAlgebra>(group_algebra(F, GA));
    mp.act_l.assign(GA.order, std::vector<SparseVec>(GB.order));
    mp.act_r.assign(GA.order, std::vector<SparseVec>(GB.order));
    for (int a = 0; a < GA.order; ++a)
        for (int b = 0; b < GB.order; ++b) {
            mp.act_l[a][b] = {{a_on_b[a][b], Scalar::one(F)}};
            mp.act_r[a][b] = {{b_on_a[a][b], Scalar::one(F)}};
        }
    return mp;
}

struct MatchedPairReport {
    bool ok = true;
    std::string failed;
    std::vector<int> at;
};

/// Verifies the matched pair conditions (module-coalgebra structure plus the
/// five compatibility identities).
inline MatchedPairReport check_matched_pair(const MatchedPair& mp) {
    const HopfAlgebra& A = *mp.A;
    const HopfAlgebra& B = *mp.B;
    auto fail = [&](const std::string& what, std::vector<int> at) {
        return MatchedPairReport{false, what, std::move(at)};
    };
    // B is a left A-module: 1 -> b = b, (a a') -> b = a -> (a' -> b)
    for (int b = 0; b < B.dim; ++b)
        if (mp.left(A.unit, basis_vec(B, b)) != basis_vec(B, b)) return fail("unit_acts_trivially_on_B", {b});
    for (int a = 0; a < A.dim; ++a)
        for (int a2 = 0; a2 < A.dim; ++a2)
            for (int b = 0; b < B.dim; ++b) {
                Vec lhs = mp.left(hopf_mul(A, basis_vec(A, a), basis_vec(A, a2)), basis_vec(B, b));
                Vec rhs = mp.left(basis_vec(A, a), mp.left(basis_vec(A, a2), basis_vec(B, b)));
                if (lhs != rhs) return fail("A_module_B", {a, a2, b});
            }
    // A is a right B-module
    for (int a = 0; a < A.dim; ++a)
        if (mp.right(basis_vec(A, a), B.unit) != basis_vec(A, a)) return fail("unit_acts_trivially_on_A", {a});
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < B.dim; ++b)
            for (int b2 = 0; b2 < B.dim; ++b2) {
                Vec lhs = mp.right(basis_vec(A, a), hopf_mul(B, basis_vec(B, b), basis_vec(B, b2)));
                Vec rhs = mp.right(mp.right(basis_vec(A, a), basis_vec(B, b)), basis_vec(B, b2));
                if (lhs != rhs) return fail("B_module_A", {a, b, b2});
            }
    // actions are coalgebra maps: Delta(a -> b) = (a1 -> b1) (x) (a2 -> b2), eps(a -> b) = eps(a)eps(b)
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < B.dim; ++b) {
            Vec ab = mp.left(basis_vec(A, a), basis_vec(B, b));
            Vec lhs = comult_vec(B, ab);
            Vec rhs = zero_vec(B.dim * B.dim, B.field);
            for (const auto& da : A.comult[a])
                for (const auto& db : B.comult[b]) {
                    Vec l = mp.left(basis_vec(A, da.left), basis_vec(B, db.left));
                    Vec r = mp.left(basis_vec(A, da.right), basis_vec(B, db.right));
                    Scalar c = da.c * db.c;
                    for (int i = 0; i < B.dim; ++i)
                        for (int j = 0; j < B.dim; ++j)
                            if (!l[i].is_zero() && !r[j].is_zero())
                                rhs[i * B.dim + j] = rhs[i * B.dim + j] + c * l[i] * r[j];
                }
            if (lhs != rhs) return fail("left_action_coalgebra_map", {a, b});
            Scalar el = eval(LinForm{B.counit}, ab);
            if (el != A.counit[a] * B.counit[b]) return fail("left_action_counit", {a, b});

            Vec ar = mp.right(basis_vec(A, a), basis_vec(B, b));
            Vec lhs2 = comult_vec(A, ar);
            Vec rhs2 = zero_vec(A.dim * A.dim, A.field);
            for (const auto& da : A.comult[a])
                for (const auto& db : B.comult[b]) {
                    Vec l = mp.right(basis_vec(A, da.left), basis_vec(B, db.left));
                    Vec r = mp.right(basis_vec(A, da.right), basis_vec(B, db.right));
                    Scalar c = da.c * db.c;
                    for (int i = 0; i < A.dim; ++i)
                        for (int j = 0; j < A.dim; ++j)
                            if (!l[i].is_zero() && !r[j].is_zero())
                                rhs2[i * A.dim + j] = rhs2[i * A.dim + j] + c * l[i] * r[j];
                }
            if (lhs2 != rhs2) return fail("right_action_coalgebra_map", {a, b});
            Scalar er = eval(LinForm{A.counit}, ar);
            if (er != A.counit[a] * B.counit[b]) return fail("right_action_counit", {a, b});
        }
    // 1 <- b = eps(b) 1 and a -> 1 = eps(a) 1
    for (int b = 0; b < B.dim; ++b)
        if (mp.right(A.unit, basis_vec(B, b)) != vec_scale(B.counit[b], A.unit))
            return fail("unit_right_action", {b});
    for (int a = 0; a < A.dim; ++a)
        if (mp.left(basis_vec(A, a), B.unit) != vec_scale(A.counit[a], B.unit))
            return fail("left_action_unit", {a});
    // (a a') <- b = (a <- (a'1 -> b1)) (a'2 <- b2)
    for (int a = 0; a < A.dim; ++a)
        for (int a2 = 0; a2 < A.dim; ++a2)
            for (int b = 0; b < B.dim; ++b) {
                Vec lhs = mp.right(hopf_mul(A, basis_vec(A, a), basis_vec(A, a2)), basis_vec(B, b));
                Vec rhs = zero_vec(A.dim, A.field);
                for (const auto& da : A.comult[a2])
                    for (const auto& db : B.comult[b]) {
                        Vec inner = mp.left(basis_vec(A, da.left), basis_vec(B, db.left));
                        Vec first = mp.right(basis_vec(A, a), inner);
                        Vec second = mp.right(basis_vec(A, da.right), basis_vec(B, db.right));
                        rhs = vec_add(rhs, vec_scale(da.c * db.c, hopf_mul(A, first, second)));
                    }
                if (lhs != rhs) return fail("mixed_right", {a, a2, b});
            }
    // a -> (b b') = (a1 -> b1)((a2 <- b2) -> b')
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < B.dim; ++b)
            for (int b2 = 0; b2 < B.dim; ++b2) {
                Vec lhs = mp.left(basis_vec(A, a), hopf_mul(B, basis_vec(B, b), basis_vec(B, b2)));
                Vec rhs = zero_vec(B.dim, B.field);
                for (const auto& da : A.comult[a])
                    for (const auto& db : B.comult[b]) {
                        Vec first = mp.left(basis_vec(A, da.left), basis_vec(B, db.left));
                        Vec acted = mp.right(basis_vec(A, da.right), basis_vec(B, db.right));
                        Vec second = mp.left(acted, basis_vec(B, b2));
                        rhs = vec_add(rhs, vec_scale(da.c * db.c, hopf_mul(B, first, second)));
                    }
                if (lhs != rhs) return fail("mixed_left", {a, b, b2});
            }
    // (a1 <- b1) (x) (a2 -> b2) = (a2 <- b2) (x) (a1 -> b1)
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < B.dim; ++b) {
            Vec lhs = zero_vec(A.dim * B.dim, A.field), rhs = zero_vec(A.dim * B.dim, A.field);
            for (const auto& da : A.comult[a])
                for (const auto& db : B.comult[b]) {
                    Vec r1 = mp.right(basis_vec(A, da.left), basis_vec(B, db.left));
                    Vec l1 = mp.left(basis_vec(A, da.right), basis_vec(B, db.right));
                    Vec r2 = mp.right(basis_vec(A, da.right), basis_vec(B, db.right));
                    Vec l2 = mp.left(basis_vec(A, da.left), basis_vec(B, db.left));
                    Scalar c = da.c * db.c;
                    for (int i = 0; i < A.dim; ++i)
                        for (int j = 0; j < B.dim; ++j) {
                            if (!r1[i].is_zero() && !l1[j].is_zero())
                                lhs[i * B.dim + j] = lhs[i * B.dim + j] + c * r1[i] * l1[j];
                            if (!r2[i].is_zero() && !l2[j].is_zero())
                                rhs[i * B.dim + j] = rhs[i * B.dim + j] + c * r2[i] * l2[j];
                        }
                }
            if (lhs != rhs) return fail("action_symmetry", {a, b});
        }
    return {};
}

/// Double crossed product B |><| A on B (x) A (B-major ordering):
/// (b (x) a)(b' (x) a') = b (a1 -> b'1) (x) (a2 <- b'2) a'.
inline HopfAlgebra double_crossed(const MatchedPair& mp) {
    auto rep = check_matched_pair(mp);
    require(rep.ok, errc::not_matched, "matched pair identity '" + rep.failed + "' fails");
    const HopfAlgebra& A = *mp.A;
    const HopfAlgebra& B = *mp.B;
    const FieldSpec& F = A.field;
    HopfAlgebra D;
    D.field = F;
    D.dim = B.dim * A.dim;
    auto ix = [&](int b, int a) { return b * A.dim + a; };
    D.basis.resize(D.dim);
    for (int b = 0; b < B.dim; ++b)
        for (int a = 0; a < A.dim; ++a) D.basis[ix(b, a)] = B.basis[b] + "><" + A.basis[a];
    D.mult.assign(D.dim, std::vector<SparseVec>(D.dim));
    for (int b = 0; b < B.dim; ++b)
        for (int a = 0; a < A.dim; ++a)
            for (int b2 = 0; b2 < B.dim; ++b2)
                for (int a2 = 0; a2 < A.dim; ++a2) {
                    Vec out = zero_vec(D.dim, F);
                    for (const auto& da : A.comult[a])
                        for (const auto& db : B.comult[b2]) {
                            Vec lb = mp.left(basis_vec(A, da.left), basis_vec(B, db.left));
                            Vec bb = hopf_mul(B, basis_vec(B, b), lb);
                            Vec ra = mp.right(basis_vec(A, da.right), basis_vec(B, db.right));
                            Vec aa = hopf_mul(A, ra, basis_vec(A, a2));
                            Scalar c = da.c * db.c;
                            for (int i = 0; i < B.dim; ++i)
                                for (int j = 0; j < A.dim; ++j)
                                    if (!bb[i].is_zero() && !aa[j].is_zero())
                                        out[ix(i, j)] = out[ix(i, j)] + c * bb[i] * aa[j];
                        }
                    SparseVec sv;
                    for (int k = 0; k < D.dim; ++k)
                        if (!out[k].is_zero()) sv.push_back({k, out[k]});
                    D.mult[ix(b, a)][ix(b2, a2)] = std::move(sv);
                }
    D.comult.assign(D.dim, {});
    for (int b = 0; b < B.dim; ++b)
        for (int a = 0; a < A.dim; ++a)
            for (const auto& db : B.comult[b])
                for (const auto& da : A.comult[a])
                    D.comult[ix(b, a)].push_back(
                        {ix(db.left, da.left), ix(db.right, da.right), db.c * da.c});
    D.unit = zero_vec(D.dim, F);
    for (int b = 0; b < B.dim; ++b)
        for (int a = 0; a < A.dim; ++a)
            if (!B.unit[b].is_zero() && !A.unit[a].is_zero()) D.unit[ix(b, a)] = B.unit[b] * A.unit[a];
    D.counit = zero_vec(D.dim, F);
    for (int b = 0; b < B.dim; ++b)
        for (int a = 0; a < A.dim; ++a) D.counit[ix(b, a)] = B.counit[b] * A.counit[a];
    // S(b (x) a) = (1 (x) S_A(a)) (1-slot product) (S_B(b) (x) 1) inside D
    D.antipode = Mat(D.dim, D.dim, F);
    for (int b = 0; b < B.dim; ++b)
        for (int a = 0; a < A.dim; ++a) {
            Vec sa = mat_vec(A.antipode, basis_vec(A, a));
            Vec sb = mat_vec(B.antipode, basis_vec(B, b));
            Vec u = zero_vec(D.dim, F), v = zero_vec(D.dim, F);
            for (int i = 0; i < B.dim; ++i)
                for (int j = 0; j < A.dim; ++j) {
                    if (!B.unit[i].is_zero() && !sa[j].is_zero()) u[ix(i, j)] = B.unit[i] * sa[j];
                    if (!sb[i].is_zero() && !A.unit[j].is_zero()) v[ix(i, j)] = sb[i] * A.unit[j];
                }
            // product in D itself
            Vec prod = zero_vec(D.dim, F);
            for (int k = 0; k < D.dim; ++k) {
                if (u[k].is_zero()) continue;
                for (int l = 0; l < D.dim; ++l) {
                    if (v[l].is_zero()) continue;
                    Scalar c = u[k] * v[l];
                    for (const auto& t : D.mult[k][l]) prod[t.idx] = prod[t.idx] + c * t.c;
                }
            }
            for (int m = 0; m < D.dim; ++m) D.antipode.at(m, ix(b, a)) = prod[m];
        }
    return D;
}

/// Standard matched pair ((A*)^cop, A) with mutual coadjoint actions; the
/// double crossed product of it is the Drinfeld double D(A).
inline MatchedPair drinfeld_matched_pair(const HopfAlgebra& A) {
    auto inv = mat_inverse(A.antipode);
    require(inv.has_value(), errc::antipode_not_invertible, "S must be invertible for D(A)");
    const Mat& Sinv = *inv;
    auto Bp = std::make_shared<HopfAlgebra>(op_cop(dual_hopf(A), false, true));
    auto Ap = std::make_shared<HopfAlgebra>(A);
    const FieldSpec& F = A.field;
    int n = A.dim;
    MatchedPair mp;
    mp.B = Bp;
    mp.A = Ap;
    mp.act_l.assign(n, std::vector<SparseVec>(n));
    mp.act_r.assign(n, std::vector<SparseVec>(n));
    // coadjoint actions fixing the Kassel-style double:
    //   (a -> f)(c) = f(S^{-1}(a2) c a1)  and  a <- f = f(S^{-1}(a3) a1) a2
    for (int a = 0; a < n; ++a) {
        auto d3 = delta_terms(A, a, 3);
        for (int f = 0; f < n; ++f) {
            Vec lf = zero_vec(n, F);
            Vec ra = zero_vec(n, F);
            for (const auto& t : d3) {
                int a1 = t.idx[0], a2 = t.idx[1], a3 = t.idx[2];
                Vec s3 = mat_vec(Sinv, basis_vec(A, a3));
                Vec prod = hopf_mul(A, s3, basis_vec(A, a1));
                if (!prod[f].is_zero()) ra[a2] = ra[a2] + t.c * prod[f];
            }
            auto d2 = delta_terms(A, a, 2);
            for (int c = 0; c < n; ++c) {
                Scalar acc = Scalar::zero(F);
                for (const auto& t : d2) {
                    int a1 = t.idx[0], a2 = t.idx[1];
                    Vec s2 = mat_vec(Sinv, basis_vec(A, a2));
                    Vec prod = hopf_mul(A, hopf_mul(A, s2, basis_vec(A, c)), basis_vec(A, a1));
                    if (!prod[f].is_zero()) acc = acc + t.c * prod[f];
                }
                if (!acc.is_zero()) lf[c] = acc;
            }
            SparseVec svl, svr;
            for (int m = 0; m < n; ++m) {
                if (!lf[m].is_zero()) svl.push_back({m, lf[m]});
                if (!ra[m].is_zero()) svr.push_back({m, ra[m]});
            }
            mp.act_l[a][f] = std::move(svl);
            mp.act_r[a][f] = std::move(svr);
        }
    }
    return mp;
}

inline HopfAlgebra drinfeld_double(const HopfAlgebra& A) { return double_crossed(drinfeld_matched_pair(A)); }

// ===========================================================================
// bosonizations k[G] x| Lambda(W) and exponential lazy twists

struct BosonMeta {
    FiniteGroup G;
    int n = 0;
    std::vector<Mat> rho; // rho[h]: conjugation action h^{-1} w_i h = sum_j rho(h)_ij w_j
    int g = 0;
    int index(int h, unsigned P) const { return h * (1 << n) + int(P); }
};

/// Parameter record for Section-8 constructions: a finite group G acting on an
/// n-dimensional odd space W, with a central involution g acting as -1.
struct SuperSpace {
    FiniteGroup G;
    int n = 0;
    std::vector<Mat> rho;
    int g = 0;

    void validate(const FieldSpec& F) const {
        G.validate();
        require(int(rho.size()) == G.order, errc::invalid_datum, "rho has wrong length");
        for (const auto& m : rho)
            require(m.rows == n && m.cols == n, errc::shape_mismatch, "rho entries must be n x n");
        for (int h = 0; h < G.order; ++h)
            for (int l = 0; l < G.order; ++l)
                require(mat_mul(rho[h], rho[l]) == rho[G.mul(h, l)], errc::invalid_datum,
                        "rho is not multiplicative");
        require(G.mul(g, g) == G.identity, errc::invalid_datum, "g^2 != 1");
        require(G.is_central(g), errc::invalid_datum, "g is not central");
        Mat minus = Mat::identity(n, F);
        for (auto& s : minus.a) s = -s;
        require(rho[g] == minus, errc::invalid_datum, "rho(g) != -1");
    }

    static SuperSpace z2(const FieldSpec& F, int n) {
        SuperSpace S;
        S.G = FiniteGroup::cyclic(2);
        S.n = n;
        S.g = 1;
        Mat id = Mat::identity(n, F);
        Mat minus = id;
        for (auto& s : minus.a) s = -s;
        S.rho = {id, minus};
        return S;
    }
};

namespace detail {

// exterior product of two Lambda(W) elements given as mask -> coefficient vectors
inline void ext_mul_acc(const std::vector<Scalar>& u, const std::vector<Scalar>& v,
                        std::vector<Scalar>& out) {
    unsigned sz = unsigned(u.size());
    for (unsigned a = 0; a < sz; ++a) {
        if (u[a].is_zero()) continue;
        for (unsigned b = 0; b < sz; ++b) {
            if (v[b].is_zero() || (a & b)) continue;
            int sg = merge_sign(a, b);
            Scalar c = u[a] * v[b];
            out[a | b] = (sg > 0) ? out[a | b] + c : out[a | b] - c;
        }
    }
}

} // namespace detail

/// Bosonization of k[G] x| Lambda(W): same algebra, coproduct twisted by g so
/// the result is an ordinary Hopf algebra.  Basis h w_P at index h*2^n + P.
inline HopfAlgebra bosonization(const FieldSpec& F, const SuperSpace& S) {
    detail::check_two_invertible(F);
    S.validate(F);
    const FiniteGroup& G = S.G;
    int n = S.n;
    unsigned nm = 1u << n;
    BosonMeta meta{G, n, S.rho, S.g};
    HopfAlgebra H;
    H.field = F;
    H.dim = G.order * int(nm);
    H.basis.resize(H.dim);
    for (int h = 0; h < G.order; ++h)
        for (unsigned P = 0; P < nm; ++P) {
            std::string s = (h == G.identity && P) ? "" : G.names[h];
            for (int i = 0; i < n; ++i)
                if (P & (1u << i)) s += (s.empty() ? "" : "*") + std::string("w") + std::to_string(i + 1);
            H.basis[meta.index(h, P)] = s.empty() ? G.names[h] : s;
        }
    // multiplication: (h w_P)(l w_Q) = h l (rho(l) . w_P) w_Q
    H.mult.assign(H.dim, std::vector<SparseVec>(H.dim));
    for (int h = 0; h < G.order; ++h)
        for (unsigned P = 0; P < nm; ++P)
            for (int l = 0; l < G.order; ++l) {
                // image of w_P under rho(l), as a Lambda(W) element
                std::vector<Scalar> img(nm, Scalar::zero(F));
                img[0] = Scalar::one(F);
                for (int i = 0; i < n; ++i) {
                    if (!(P & (1u << i))) continue;
                    std::vector<Scalar> row(nm, Scalar::zero(F));
                    for (int j = 0; j < n; ++j) row[1u << j] = S.rho[l].at(i, j);
                    std::vector<Scalar> nxt(nm, Scalar::zero(F));
                    detail::ext_mul_acc(img, row, nxt);
                    img = std::move(nxt);
                }
                for (unsigned Q = 0; Q < nm; ++Q) {
                    std::vector<Scalar> q(nm, Scalar::zero(F));
                    q[Q] = Scalar::one(F);
                    std::vector<Scalar> full(nm, Scalar::zero(F));
                    detail::ext_mul_acc(img, q, full);
                    SparseVec sv;
                    for (unsigned R = 0; R < nm; ++R)
                        if (!full[R].is_zero()) sv.push_back({meta.index(G.mul(h, l), R), full[R]});
                    H.mult[meta.index(h, P)][meta.index(l, Q)] = std::move(sv);
                }
            }
    H.unit = zero_vec(H.dim, F);
    H.unit[meta.index(G.identity, 0)] = Scalar::one(F);
    // bosonized coproduct: from the super coproduct term w_T (x) w_{P\T} with
    // Koszul sign, the ordinary coproduct picks up g^{|P\T|} on the left leg
    // and the sign (-1)^{|P\T| (1+|P|)}
    H.comult.assign(H.dim, {});
    for (int h = 0; h < G.order; ++h)
        for (unsigned P = 0; P < nm; ++P) {
            int degP = detail::popcount(P);
            for (unsigned T = P;; T = (T - 1) & P) {
                unsigned Tc = P & ~T;
                int degR = detail::popcount(Tc);
                // Koszul sign of splitting the ascending product into (T | Tc)
                int inv = 0;
                for (int p = 0; p < n; ++p)
                    if (T & (1u << p)) inv += detail::popcount(Tc & ((1u << p) - 1));
                int sign = (inv % 2) ? -1 : 1;
                if ((degR * (1 + degP)) % 2) sign = -sign;
                int left_h = (degR % 2) ? G.mul(S.g, h) : h;
                H.comult[meta.index(h, P)].push_back(
                    {meta.index(left_h, T), meta.index(h, Tc), Scalar::of_long(F, sign)});
                if (T == 0) break;
            }
        }
    H.counit = zero_vec(H.dim, F);
    for (int h = 0; h < G.order; ++h) H.counit[meta.index(h, 0)] = Scalar::one(F);
    // S(h) = h^{-1}, S(w_i) = -g w_i, extended anti-multiplicatively
    H.antipode = Mat(H.dim, H.dim, F);
    for (int h = 0; h < G.order; ++h)
        for (unsigned P = 0; P < nm; ++P) {
            Vec acc = H.unit;
            for (int i = n - 1; i >= 0; --i) {
                if (!(P & (1u << i))) continue;
                Vec sw = zero_vec(H.dim, F);
                sw[meta.index(S.g, 1u << i)] = Scalar::of_long(F, -1);
                acc = hopf_mul(H, acc, sw);
            }
            Vec hinv = zero_vec(H.dim, F);
            hinv[meta.index(G.inverse[h], 0)] = Scalar::one(F);
            acc = hopf_mul(H, acc, hinv);
            for (int m = 0; m < H.dim; ++m) H.antipode.at(m, meta.index(h, P)) = acc[m];
        }
    H.gens.k = GenData::kind::boson;
    H.gens.boson = std::make_shared<BosonMeta>(std::move(meta));
    return H;
}

/// The lazy twist J = J0 - (g (x) 1) J1 obtained from the super exponential
/// e^{r/2} of a G-invariant symmetric tensor r, as an element of A (x) A.
inline Vec exp_twist_element(const HopfAlgebra& A, const Mat& r) {
    require(A.gens.k == GenData::kind::boson && A.gens.boson, errc::invalid_datum,
            "exponential twists require a bosonization");
    const BosonMeta& meta = *A.gens.boson;
    const FieldSpec& F = A.field;
    int n = meta.n;
    require(r.rows == n && r.cols == n, errc::shape_mismatch, "r must be n x n");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            require(r.at(i, j) == r.at(j, i), errc::not_symmetric, "r must be symmetric");
    for (int h = 0; h < meta.G.order; ++h)
        require(mat_mul(mat_transpose(meta.rho[h]), mat_mul(r, meta.rho[h])) == r, errc::not_invariant,
                "r must be G-invariant");
    int dim = A.dim, d2 = dim * dim;
    auto deg = [&](int idx) { return detail::popcount(unsigned(idx) & ((1u << n) - 1)) % 2; };
    // m = (1/2) sum r_ij w_i (x) w_j  inside the super tensor square
    Vec m = zero_vec(d2, F);
    Scalar half = Scalar::of_long(F, 2).inverse();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (r.at(i, j).is_zero()) continue;
            int wi = meta.index(meta.G.identity, 1u << i), wj = meta.index(meta.G.identity, 1u << j);
            m[wi * dim + wj] = m[wi * dim + wj] + half * r.at(i, j);
        }
    auto super_mul = [&](const Vec& u, const Vec& v) {
        Vec out = zero_vec(d2, F);
        for (int a1 = 0; a1 < dim; ++a1)
            for (int b1 = 0; b1 < dim; ++b1) {
                const Scalar& cu = u[a1 * dim + b1];
                if (cu.is_zero()) continue;
                for (int a2 = 0; a2 < dim; ++a2)
                    for (int b2 = 0; b2 < dim; ++b2) {
                        const Scalar& cv = v[a2 * dim + b2];
                        if (cv.is_zero()) continue;
                        Scalar c = cu * cv;
                        if (deg(b1) && deg(a2)) c = -c; // Koszul sign
                        for (const auto& ta : A.mult[a1][a2])
                            for (const auto& tb : A.mult[b1][b2]) {
                                int k = ta.idx * dim + tb.idx;
                                out[k] = out[k] + c * ta.c * tb.c;
                            }
                    }
            }
        return out;
    };
    // exponential: nilpotent, truncates at m^n
    Vec J = zero_vec(d2, F);
    J[meta.index(meta.G.identity, 0) * dim + meta.index(meta.G.identity, 0)] = Scalar::one(F);
    Vec pw = J;
    Scalar fact = Scalar::one(F);
    for (int k = 1; k <= n; ++k) {
        pw = super_mul(pw, m);
        fact = fact * Scalar::of_long(F, k);
        J = vec_add(J, vec_scale(fact.inverse(), pw));
    }
    // bosonize: odd (x) odd components pick up g on the left and a minus sign
    Vec out = zero_vec(d2, F);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            const Scalar& c = J[a * dim + b];
            if (c.is_zero()) continue;
            if (deg(a)) {
                int h = a / (1 << n);
                unsigned P = unsigned(a) & ((1u << n) - 1);
                int ga = meta.index(meta.G.mul(meta.g, h), P);
                out[ga * dim + b] = out[ga * dim + b] - c;
            } else {
                out[a * dim + b] = out[a * dim + b] + c;
            }
        }
    return out;
}

/// The exponential lazy 2-cocycle on the dual of the bosonization: the
/// evaluation pairing of J against the dual basis.
struct ExpTwist {
    HopfAlgebra dual; // A*
    BiForm sigma;     // lazy 2-cocycle on A*
};

inline ExpTwist exp_twist_cocycle(const FieldSpec& F, const SuperSpace& S, const Mat& r) {
    HopfAlgebra A = bosonization(F, S);
    Vec J = exp_twist_element(A, r);
    ExpTwist out{dual_hopf(A), BiForm{Mat(A.dim, A.dim, F)}};
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) out.sigma.m.at(i, j) = J[i * A.dim + j];
    require(is_lazy2(out.dual, out.sigma), errc::internal, "exponential twist is not lazy");
    require(is_left_cocycle(out.dual, out.sigma), errc::internal,
            "exponential twist fails the cocycle identity");
    return out;
}

/// The Hopf isomorphism E(n) -> bosonization(Z_2, W_n): c -> g, x_i -> g w_i.
inline LinMap en_to_boson_iso(const HopfAlgebra& En, const HopfAlgebra& Boson) {
    int n = En.gens.en_n;
    require(En.gens.k == GenData::kind::en, errc::invalid_datum, "expected E(n)");
    require(Boson.gens.k == GenData::kind::boson && Boson.gens.boson->n == n &&
                Boson.gens.boson->G.order == 2,
            errc::invalid_datum, "expected the Z_2 bosonization of rank n");
    const BosonMeta& meta = *Boson.gens.boson;
    const FieldSpec& F = En.field;
    auto ixE = [](unsigned P, int a) { return int((P << 1) | unsigned(a)); };
    Mat out(Boson.dim, En.dim, F);
    for (unsigned P = 0; P < (1u << n); ++P)
        for (int a = 0; a < 2; ++a) {
            Vec acc = Boson.unit;
            if (a) {
                Vec g = zero_vec(Boson.dim, F);
                g[meta.index(meta.g, 0)] = Scalar::one(F);
                acc = hopf_mul(Boson, acc, g);
            }
            for (int i = 0; i < n; ++i) {
                if (!(P & (1u << i))) continue;
                Vec gw = zero_vec(Boson.dim, F);
                gw[meta.index(meta.g, 1u << i)] = Scalar::one(F);
                acc = hopf_mul(Boson, acc, gw);
            }
            for (int m = 0; m < Boson.dim; ++m) out.at(m, ixE(P, a)) = acc[m];
        }
    return LinMap{out};
}

/// The exponential lazy cocycle transported to E(n) through the isomorphisms
/// E(n) -> E(n)* -> (bosonization)*.  For n = 1 this lands in the sigma_t
/// family: en_exp_twist(1, [t]) = sigma_{-t} (normalization frozen by the
/// (x,x) entry).
inline BiForm en_exp_twist(const HopfAlgebra& En, const Mat& r) {
    const FieldSpec& F = En.field;
    int n = En.gens.en_n;
    SuperSpace S = SuperSpace::z2(F, n);
    HopfAlgebra A = bosonization(F, S);
    Vec J = exp_twist_element(A, r);
    LinMap iota = en_to_boson_iso(En, A);
    auto iota_inv = mat_inverse(iota.m);
    require(iota_inv.has_value(), errc::internal, "E(n) -> bosonization map is not invertible");
    // pull J back along iota^{-1} (x) iota^{-1}
    int dim = En.dim;
    Vec Jp = zero_vec(dim * dim, F);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            const Scalar& c = J[a * dim + b];
            if (c.is_zero()) continue;
            for (int u = 0; u < dim; ++u) {
                const Scalar& cu = iota_inv->at(u, a);
                if (cu.is_zero()) continue;
                for (int v = 0; v < dim; ++v) {
                    const Scalar& cv = iota_inv->at(v, b);
                    if (cv.is_zero()) continue;
                    Jp[u * dim + v] = Jp[u * dim + v] + c * cu * cv;
                }
            }
        }
    HopfAlgebra EnDual = dual_hopf(En);
    LinMap phi = en_phi(En, EnDual);
    BiForm out{Mat(dim, dim, F)};
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
            Scalar acc = Scalar::zero(F);
            for (int w = 0; w < dim; ++w) {
                const Scalar& cw = phi.m.at(w, u);
                if (cw.is_zero()) continue;
                for (int w2 = 0; w2 < dim; ++w2) {
                    const Scalar& cw2 = phi.m.at(w2, v);
                    if (cw2.is_zero()) continue;
                    acc = acc + cw * cw2 * Jp[w * dim + w2];
                }
            }
            out.m.at(u, v) = acc;
        }
    require(is_lazy2(En, out), errc::internal, "transported exponential twist is not lazy");
    require(is_left_cocycle(En, out), errc::internal,
            "transported exponential twist fails the cocycle identity");
    return out;
}

} // namespace hopflab
