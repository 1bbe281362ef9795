#pragma once

#include <array>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "kac.hpp"
#include "monomial_galois.hpp"

namespace hopflab {

/// Finite group presented abstractly, as produced by the oracle's quotient
/// computation: order, table and the element-order multiset used for
/// identification at the target sizes.
struct AbstractGroupTable {
    int order = 0;
    std::vector<std::vector<int>> table;
    std::vector<int> element_orders;

    std::string identify() const {
        // order + element-order multiset identifies every group of order <= 8
        // that arises here (the quotients are abelian at desk scale)
        auto os = element_orders;
        auto has = [&](int k, int count) {
            int c = 0;
            for (int v : os)
                if (v == k) ++c;
            return c == count;
        };
        switch (order) {
            case 1: return "Z1";
            case 2: return "Z2";
            case 3: return "Z3";
            case 4: return has(4, 2) ? "Z4" : "Z2xZ2";
            case 5: return "Z5";
            case 6: return "Z6";
            case 7: return "Z7";
            case 8:
                if (has(8, 4)) return "Z8";
                if (has(4, 4)) return "Z4xZ2";
                if (has(2, 7)) return "Z2xZ2xZ2";
                return "order8";
            default: return "order" + std::to_string(order);
        }
    }
};

namespace detail {

/// Structure constants compiled to int64 residues for the enumeration hot
/// loops; p is small so sums of products stay far from overflow.
struct FpHopf {
    long p = 0;
    int n = 0;
    std::vector<std::vector<std::array<long, 3>>> comult;               // (left,right,c)
    std::vector<std::vector<std::vector<std::pair<int, long>>>> mult;   // [i][j] -> (k,c)
    std::vector<long> counit, unit;

    static long to_fp(const Scalar& s) { return s.fp_value(); }

    static FpHopf compile(const HopfAlgebra& H) {
        require(H.field.kind == field_kind::prime, errc::field_mismatch, "F_p compilation");
        FpHopf f;
        f.p = H.field.param;
        f.n = H.dim;
        f.comult.resize(H.dim);
        for (int i = 0; i < H.dim; ++i)
            for (const auto& d : H.comult[i])
                f.comult[i].push_back({long(d.left), long(d.right), to_fp(d.c)});
        f.mult.assign(H.dim, std::vector<std::vector<std::pair<int, long>>>(H.dim));
        for (int i = 0; i < H.dim; ++i)
            for (int j = 0; j < H.dim; ++j)
                for (const auto& t : H.mult[i][j]) f.mult[i][j].push_back({t.idx, to_fp(t.c)});
        f.counit.resize(H.dim);
        f.unit.resize(H.dim);
        for (int i = 0; i < H.dim; ++i) {
            f.counit[i] = to_fp(H.counit[i]);
            f.unit[i] = to_fp(H.unit[i]);
        }
        return f;
    }

    // left 2-cocycle identity with early exit, sigma given as a dense n*n table
    bool left_cocycle(const std::vector<long>& s) const {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    long lhs = 0, rhs = 0;
                    for (const auto& da : comult[a])
                        for (const auto& db : comult[b]) {
                            long s1 = s[size_t(da[0]) * n + db[0]];
                            if (s1 == 0) continue;
                            long inner = 0;
                            for (const auto& t : mult[da[1]][db[1]])
                                inner += t.second * s[size_t(t.first) * n + c] % p;
                            lhs += da[2] * db[2] % p * s1 % p * (inner % p) % p;
                        }
                    for (const auto& db : comult[b])
                        for (const auto& dc : comult[c]) {
                            long s1 = s[size_t(db[0]) * n + dc[0]];
                            if (s1 == 0) continue;
                            long inner = 0;
                            for (const auto& t : mult[db[1]][dc[1]])
                                inner += t.second * s[size_t(a) * n + t.first] % p;
                            rhs += db[2] * dc[2] % p * s1 % p * (inner % p) % p;
                        }
                    if ((lhs - rhs) % p != 0) return false;
                }
        return true;
    }
};

inline int oracle_threads() {
    if (const char* env = std::getenv("HOPFLAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

/// Enumerates base + span(directions) over F_p, invoking visit(vector) for
/// each point.  Partitioned over the first free coordinate so workers stay
/// independent; results must be merged in slice order by the caller.
template <typename Visit>
void enumerate_affine_fp(const FieldSpec& F, const Vec& base, const std::vector<Vec>& dirs,
                         Visit visit) {
    long p = F.param;
    size_t k = dirs.size();
    std::vector<long> coeffs(k, 0);
    while (true) {
        Vec v = base;
        for (size_t i = 0; i < k; ++i)
            if (coeffs[i] != 0) v = vec_add(v, vec_scale(Scalar::fp(p, coeffs[i]), dirs[i]));
        visit(v);
        size_t pos = 0;
        while (pos < k) {
            if (++coeffs[pos] < p) break;
            coeffs[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
        if (k == 0) break;
    }
}

} // namespace detail

/// All lazy normalized convolution-invertible linear forms over F_p, by
/// linear presolve plus exhaustive scan of the residual affine space.
inline std::vector<LinForm> enumerate_lazy_units(const HopfAlgebra& H, int max_residual_dim = 12) {
    require(H.field.kind == field_kind::prime, errc::field_mismatch, "oracle enumerations need F_p");
    AffineSpace sp = lazy1_affine(H);
    require(int(sp.directions.size()) <= max_residual_dim, errc::search_space_too_large,
            "residual dimension " + std::to_string(sp.directions.size()));
    std::vector<LinForm> out;
    detail::enumerate_affine_fp(H.field, sp.base, sp.directions, [&](const Vec& v) {
        LinForm f{v};
        if (is_conv_invertible(H, f)) out.push_back(f);
    });
    // the set must be a group under convolution
    for (const auto& f : out) {
        LinForm finv = conv_inverse(H, f);
        bool found = false;
        for (const auto& g : out)
            if (g == finv) found = true;
        require(found, errc::internal, "lazy units are not closed under inverses");
        for (const auto& g : out) {
            LinForm prod = convolve(H, f, g);
            bool in = false;
            for (const auto& h : out)
                if (h == prod) in = true;
            require(in, errc::internal, "lazy units are not closed under convolution");
        }
    }
    return out;
}

struct Z2LReport {
    std::vector<BiForm> z2l;
    std::vector<BiForm> b2l;
    AbstractGroupTable quotient;
    int residual_dim = 0;
    std::vector<int> coset_of; // coset index per element of z2l
};

/// Exhaustive Z^2_L / B^2_L / H^2_L computation over F_p: linear presolve of
/// normalization + laziness, residual scan with the quadratic cocycle filter,
/// coboundaries from the lazy units, and the coset quotient as a group table.
inline Z2LReport enumerate_z2L(const HopfAlgebra& H, int max_residual_dim = 12) {
    require(H.field.kind == field_kind::prime, errc::field_mismatch, "oracle enumerations need F_p");
    long p = H.field.param;
    AffineSpace sp = lazy2_affine(H);
    Z2LReport rep;
    rep.residual_dim = int(sp.directions.size());
    require(rep.residual_dim <= max_residual_dim, errc::search_space_too_large,
            "residual dimension " + std::to_string(rep.residual_dim));

    // parallel scan over slices of the first free coordinate, entirely in
    // int64 residues; only the surviving candidates become exact bi-forms
    detail::FpHopf fp = detail::FpHopf::compile(H);
    int n2 = H.dim * H.dim;
    auto to_longs = [&](const Vec& v) {
        std::vector<long> out(v.size());
        for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].fp_value();
        return out;
    };
    std::vector<long> base_l = to_longs(sp.base);
    std::vector<std::vector<long>> dirs_l;
    for (const auto& d : sp.directions) dirs_l.push_back(to_longs(d));
    size_t k = dirs_l.size();
    int nthreads = detail::oracle_threads();
    std::vector<std::vector<std::vector<long>>> slices(k == 0 ? 1 : size_t(p));
    if (k == 0) {
        if (fp.left_cocycle(base_l)) slices[0].push_back(base_l);
    } else {
        std::atomic<long> next_slice{0};
        auto worker = [&]() {
            while (true) {
                long c0 = next_slice.fetch_add(1);
                if (c0 >= p) break;
                std::vector<long> v = base_l;
                for (int r = 0; r < n2; ++r) v[r] = (v[r] + c0 * dirs_l[0][r]) % p;
                std::vector<long> coeffs(k - 1, 0);
                while (true) {
                    if (fp.left_cocycle(v)) slices[size_t(c0)].push_back(v);
                    // odometer with incremental direction adds (wrapping a
                    // coordinate past p-1 is the same as one more add)
                    size_t pos = 0;
                    bool done = false;
                    while (true) {
                        if (pos == k - 1) {
                            done = true;
                            break;
                        }
                        for (int r = 0; r < n2; ++r) v[r] = (v[r] + dirs_l[pos + 1][r]) % p;
                        if (++coeffs[pos] < p) break;
                        coeffs[pos] = 0;
                        ++pos;
                    }
                    if (done) break;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& s : slices)
        for (auto& lv : s) {
            BiForm f{Mat(H.dim, H.dim, H.field)};
            for (int r = 0; r < n2; ++r) f.m.a[r] = Scalar::fp(p, lv[r]);
            if (is_conv_invertible(H, f)) rep.z2l.push_back(std::move(f));
        }

    // B^2_L from the lazy units
    std::vector<LinForm> units = enumerate_lazy_units(H, max_residual_dim);
    for (const auto& mu : units) {
        BiForm d = coboundary(H, mu);
        bool seen = false;
        for (const auto& e : rep.b2l)
            if (e == d) seen = true;
        if (!seen) rep.b2l.push_back(d);
    }
    for (const auto& d : rep.b2l) {
        bool inz = false;
        for (const auto& z : rep.z2l)
            if (z == d) inz = true;
        require(inz, errc::internal, "coboundary outside Z^2_L");
    }

    // coset partition: sigma ~ sigma * d
    int n = int(rep.z2l.size());
    rep.coset_of.assign(n, -1);
    std::vector<int> reps;
    auto find_index = [&](const BiForm& f) {
        for (int i = 0; i < n; ++i)
            if (rep.z2l[i] == f) return i;
        return -1;
    };
    for (int i = 0; i < n; ++i) {
        if (rep.coset_of[i] >= 0) continue;
        int id = int(reps.size());
        reps.push_back(i);
        for (const auto& d : rep.b2l) {
            BiForm prod = convolve(H, rep.z2l[i], d);
            int j = find_index(prod);
            require(j >= 0, errc::internal, "coset leaves Z^2_L");
            require(rep.coset_of[j] < 0 || rep.coset_of[j] == id, errc::internal,
                    "inconsistent coset partition");
            rep.coset_of[j] = id;
        }
    }
    // quotient group table via representatives
    int q = int(reps.size());
    rep.quotient.order = q;
    rep.quotient.table.assign(q, std::vector<int>(q, -1));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            BiForm prod = convolve(H, rep.z2l[reps[i]], rep.z2l[reps[j]]);
            int idx = find_index(prod);
            require(idx >= 0, errc::internal, "Z^2_L is not closed under convolution");
            rep.quotient.table[i][j] = rep.coset_of[idx];
        }
    FiniteGroup::from_table(rep.quotient.table); // validates the group axioms
    rep.quotient.element_orders.assign(q, 0);
    {
        FiniteGroup G = FiniteGroup::from_table(rep.quotient.table);
        for (int i = 0; i < q; ++i) rep.quotient.element_orders[i] = G.element_order(i);
        std::sort(rep.quotient.element_orders.begin(), rep.quotient.element_orders.end());
    }
    return rep;
}

/// Complete list of algebra maps A -> k solved on family generators.
inline AlgMapSet enumerate_alg_maps(const HopfAlgebra& H) {
    AlgMapSet out;
    const FieldSpec& F = H.field;
    switch (H.gens.k) {
        case GenData::kind::group: {
            for (const auto& chi : characters(*H.gens.group, F)) out.maps.push_back(LinForm{chi});
            out.certified_complete = true;
            break;
        }
        case GenData::kind::dual_group: {
            // Alg(k^G, k) = evaluations at group elements
            const FiniteGroup& G = *H.gens.group;
            for (int h = 0; h < G.order; ++h) {
                LinForm f{zero_vec(H.dim, F)};
                f.v[h] = Scalar::one(F);
                out.maps.push_back(f);
            }
            out.certified_complete = true;
            break;
        }
        case GenData::kind::en: {
            // c -> +-1, x_i -> 0 (nilpotents die in a field)
            out.maps.push_back(conv_unit(H));
            out.maps.push_back(en_ghat(H));
            out.certified_complete = true;
            break;
        }
        case GenData::kind::monomial: {
            const MonomialMeta& meta = *H.gens.monomial;
            for (const auto& chi : characters(meta.G, F)) {
                if (!meta.mu.is_zero()) {
                    // x^d = mu(1 - g^d) forces chi(g)^d = 1
                    Scalar gd = chi[meta.G.power(meta.g, meta.d)];
                    if (!gd.is_one()) continue;
                }
                LinForm f{zero_vec(H.dim, F)};
                for (int h = 0; h < meta.G.order; ++h) f.v[meta.index(h, 0)] = chi[h];
                out.maps.push_back(f);
            }
            out.certified_complete = true;
            break;
        }
        case GenData::kind::boson: {
            const BosonMeta& meta = *H.gens.boson;
            for (const auto& chi : characters(meta.G, F)) {
                LinForm f{zero_vec(H.dim, F)};
                for (int h = 0; h < meta.G.order; ++h) f.v[meta.index(h, 0)] = chi[h];
                out.maps.push_back(f);
            }
            out.certified_complete = true;
            break;
        }
        case GenData::kind::tensor:
            raise(errc::no_generator_data,
                  "tensor alg-map enumeration requires the factor algebras; use enumerate_alg_maps_tensor");
        default: raise(errc::no_generator_data, "no family generator metadata on this algebra");
    }
    for (const auto& f : out.maps)
        require(is_algebra_map(H, f), errc::internal, "enumerated non-algebra-map");
    return out;
}

inline AlgMapSet enumerate_alg_maps_tensor(const HopfAlgebra& T, const HopfAlgebra& A,
                                           const HopfAlgebra& B) {
    require(T.dim == A.dim * B.dim, errc::shape_mismatch, "tensor factors do not match");
    AlgMapSet la = enumerate_alg_maps(A), lb = enumerate_alg_maps(B);
    AlgMapSet out;
    out.certified_complete = la.certified_complete && lb.certified_complete;
    for (const auto& fa : la.maps)
        for (const auto& fb : lb.maps) {
            LinForm f{zero_vec(T.dim, T.field)};
            for (int i = 0; i < A.dim; ++i)
                for (int j = 0; j < B.dim; ++j) f.v[i * B.dim + j] = fa.v[i] * fb.v[j];
            require(is_algebra_map(T, f), errc::internal, "tensor alg map failed");
            out.maps.push_back(f);
        }
    return out;
}

/// Exhaustive central-pairing search over F_p.  The unit and centrality
/// conditions are linear and presolved exactly; the residual affine space is
/// scanned and filtered by the remaining (quadratic) multiplicativity
/// conditions plus invertibility.
inline std::vector<CentralPairing> brute_pairings(const MatchedPair& mp, int max_residual_dim = 10) {
    const HopfAlgebra& B = *mp.B;
    const HopfAlgebra& A = *mp.A;
    require(B.field.kind == field_kind::prime, errc::field_mismatch, "oracle enumerations need F_p");
    int nb = B.dim, na = A.dim, nv = nb * na;
    const FieldSpec& F = B.field;
    std::vector<Vec> rows;
    Vec rhs_vals;
    auto push_row = [&](Vec row, Scalar rhs) {
        if (is_zero_vec(row) && rhs.is_zero()) return;
        rows.push_back(std::move(row));
        rhs_vals.push_back(rhs);
    };
    // unit rows
    for (int a = 0; a < na; ++a) {
        Vec row = zero_vec(nv, F);
        for (int b = 0; b < nb; ++b)
            if (!B.unit[b].is_zero()) row[b * na + a] = B.unit[b];
        push_row(std::move(row), A.counit[a]);
    }
    for (int b = 0; b < nb; ++b) {
        Vec row = zero_vec(nv, F);
        for (int a = 0; a < na; ++a)
            if (!A.unit[a].is_zero()) row[b * na + a] = row[b * na + a] + A.unit[a];
        push_row(std::move(row), B.counit[b]);
    }
    // centrality rows (conditions 3 and 4), linear in beta
    for (int b = 0; b < nb; ++b)
        for (int a = 0; a < na; ++a) {
            Mat coeffA(na, nv, F); // output in A
            Mat coeffB(nb, nv, F); // output in B
            for (const auto& db : B.comult[b])
                for (const auto& da : A.comult[a]) {
                    Scalar c = db.c * da.c;
                    Vec r1 = mp.right(basis_vec(A, da.left), basis_vec(B, db.left));
                    for (int m = 0; m < na; ++m)
                        if (!r1[m].is_zero())
                            coeffA.at(m, db.right * na + da.right) =
                                coeffA.at(m, db.right * na + da.right) + c * r1[m];
                    Vec r2 = mp.right(basis_vec(A, da.right), basis_vec(B, db.right));
                    for (int m = 0; m < na; ++m)
                        if (!r2[m].is_zero())
                            coeffA.at(m, db.left * na + da.left) =
                                coeffA.at(m, db.left * na + da.left) - c * r2[m];
                    Vec l1 = mp.left(basis_vec(A, da.right), basis_vec(B, db.right));
                    for (int m = 0; m < nb; ++m)
                        if (!l1[m].is_zero())
                            coeffB.at(m, db.left * na + da.left) =
                                coeffB.at(m, db.left * na + da.left) + c * l1[m];
                    Vec l2 = mp.left(basis_vec(A, da.left), basis_vec(B, db.left));
                    for (int m = 0; m < nb; ++m)
                        if (!l2[m].is_zero())
                            coeffB.at(m, db.right * na + da.right) =
                                coeffB.at(m, db.right * na + da.right) - c * l2[m];
                }
            for (int m = 0; m < na; ++m)
                push_row(Vec(coeffA.a.begin() + size_t(m) * nv, coeffA.a.begin() + size_t(m + 1) * nv),
                         Scalar::zero(F));
            for (int m = 0; m < nb; ++m)
                push_row(Vec(coeffB.a.begin() + size_t(m) * nv, coeffB.a.begin() + size_t(m + 1) * nv),
                         Scalar::zero(F));
        }
    Mat M(int(rows.size()), nv, F);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < nv; ++c) M.at(int(r), c) = rows[r][c];
    auto base = mat_solve(M, rhs_vals);
    std::vector<CentralPairing> out;
    if (!base.has_value()) return out; // no normalized central candidates at all
    auto dirs = mat_kernel(M);
    require(int(dirs.size()) <= max_residual_dim, errc::search_space_too_large,
            "residual dimension " + std::to_string(dirs.size()));
    detail::enumerate_affine_fp(F, *base, dirs, [&](const Vec& v) {
        Mat beta(nb, na, F);
        beta.a = v;
        if (central_pairing_report(mp, beta).ok) out.push_back(CentralPairing{beta});
    });
    return out;
}

} // namespace hopflab
