#pragma once

#include <memory>
#include <string>
#include <vector>

#include "group.hpp"
#include "linalg.hpp"

namespace hopflab {

struct SparseTerm {
    int idx;
    Scalar c;
};
using SparseVec = std::vector<SparseTerm>;

struct CoTriple {
    int left, right;
    Scalar c;
};

struct MonomialMeta; // families.hpp
struct BosonMeta;    // families.hpp

/// Family metadata attached to constructed Hopf algebras.  Carries exactly the
/// generator knowledge needed to solve Alg(A,k) on generators (oracle module).
struct GenData {
    enum class kind { none, group, dual_group, en, monomial, boson, tensor };
    kind k = kind::none;
    std::shared_ptr<const FiniteGroup> group;
    int en_n = 0;
    std::shared_ptr<const MonomialMeta> monomial;
    std::shared_ptr<const BosonMeta> boson;
    std::shared_ptr<const GenData> left, right;
    int left_dim = 0, right_dim = 0;
};

/// Element of the dual A*, stored by its values on the basis.
struct LinForm {
    Vec v;
    bool operator==(const LinForm& o) const { return v == o.v; }
    bool operator!=(const LinForm& o) const { return !(*this == o); }
};

/// Element of (A (x) A)*: entry (i,j) is the value on b_i (x) b_j.
struct BiForm {
    Mat m;
    bool operator==(const BiForm& o) const { return m == o.m; }
    bool operator!=(const BiForm& o) const { return !(*this == o); }
};

/// Linear map between based spaces; at(i,j) = coefficient of target b_i in f(source b_j).
struct LinMap {
    Mat m;
    bool operator==(const LinMap& o) const { return m == o.m; }
    bool operator!=(const LinMap& o) const { return !(*this == o); }
};

/// Finite-dimensional Hopf algebra presented by structure constants.
/// Immutable after construction; all operations on it are pure.
struct HopfAlgebra {
    FieldSpec field;
    int dim = 0;
    std::vector<std::string> basis;
    std::vector<std::vector<SparseVec>> mult; // mult[i][j] = b_i * b_j
    std::vector<std::vector<CoTriple>> comult;
    Vec unit;
    Vec counit; // values of epsilon on the basis
    Mat antipode;

    GenData gens;

    const SparseVec& mul_basis(int i, int j) const { return mult[i][j]; }

    Scalar eps(int i) const { return counit[i]; }
};

// ---------------------------------------------------------------------------
// element arithmetic

inline Vec hopf_mul(const HopfAlgebra& H, const Vec& u, const Vec& v) {
    Vec r = zero_vec(H.dim, H.field);
    for (int i = 0; i < H.dim; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < H.dim; ++j) {
            if (v[j].is_zero()) continue;
            Scalar c = u[i] * v[j];
            for (const auto& t : H.mult[i][j]) r[t.idx] = r[t.idx] + c * t.c;
        }
    }
    return r;
}

inline Vec basis_vec(const HopfAlgebra& H, int i) {
    Vec r = zero_vec(H.dim, H.field);
    r[i] = Scalar::one(H.field);
    return r;
}

inline Scalar eval(const LinForm& f, const Vec& v) {
    require(f.v.size() == v.size(), errc::shape_mismatch, "form/vector size mismatch");
    Scalar acc = Scalar::zero(v.empty() ? FieldSpec::Q() : v[0].field());
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero() && !f.v[i].is_zero()) acc = acc + f.v[i] * v[i];
    return acc;
}

inline Scalar eval(const BiForm& s, const Vec& u, const Vec& v) {
    Scalar acc = Scalar::zero(u.empty() ? FieldSpec::Q() : u[0].field());
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero() || s.m.at(int(i), int(j)).is_zero()) continue;
            acc = acc + u[i] * v[j] * s.m.at(int(i), int(j));
        }
    }
    return acc;
}

inline Vec apply_map(const LinMap& f, const Vec& v) { return mat_vec(f.m, v); }

// ---------------------------------------------------------------------------
// tensor-square elements (A (x) A as an algebra), used for in-algebra coproduct work

inline int t2(const HopfAlgebra& H, int i, int j) { return i * H.dim + j; }

inline Vec tensor2_unit(const HopfAlgebra& H) {
    Vec r = zero_vec(H.dim * H.dim, H.field);
    for (int i = 0; i < H.dim; ++i) {
        if (H.unit[i].is_zero()) continue;
        for (int j = 0; j < H.dim; ++j) {
            if (H.unit[j].is_zero()) continue;
            r[t2(H, i, j)] = H.unit[i] * H.unit[j];
        }
    }
    return r;
}

inline Vec tensor2_mul(const HopfAlgebra& H, const Vec& u, const Vec& v) {
    Vec r = zero_vec(H.dim * H.dim, H.field);
    for (int i1 = 0; i1 < H.dim; ++i1)
        for (int j1 = 0; j1 < H.dim; ++j1) {
            const Scalar& cu = u[t2(H, i1, j1)];
            if (cu.is_zero()) continue;
            for (int i2 = 0; i2 < H.dim; ++i2)
                for (int j2 = 0; j2 < H.dim; ++j2) {
                    const Scalar& cv = v[t2(H, i2, j2)];
                    if (cv.is_zero()) continue;
                    Scalar c = cu * cv;
                    for (const auto& a : H.mult[i1][i2])
                        for (const auto& b : H.mult[j1][j2])
                            r[t2(H, a.idx, b.idx)] = r[t2(H, a.idx, b.idx)] + c * a.c * b.c;
                }
        }
    return r;
}

inline Vec comult_vec(const HopfAlgebra& H, const Vec& v) {
    Vec r = zero_vec(H.dim * H.dim, H.field);
    for (int i = 0; i < H.dim; ++i) {
        if (v[i].is_zero()) continue;
        for (const auto& t : H.comult[i]) r[t2(H, t.left, t.right)] = r[t2(H, t.left, t.right)] + v[i] * t.c;
    }
    return r;
}

// ---------------------------------------------------------------------------
// iterated coproduct

struct SweedlerTerm {
    std::vector<int> idx; // basis indices a_1, ..., a_k
    Scalar c;
};

/// Terms of Delta^(parts-1)(b_i), i.e. the Sweedler expansion into `parts` slots.
inline std::vector<SweedlerTerm> delta_terms(const HopfAlgebra& H, int i, int parts) {
    std::vector<SweedlerTerm> terms{{{i}, Scalar::one(H.field)}};
    for (int round = 1; round < parts; ++round) {
        std::vector<SweedlerTerm> next;
        for (const auto& t : terms) {
            for (const auto& d : H.comult[t.idx[0]]) {
                SweedlerTerm n;
                n.idx.reserve(t.idx.size() + 1);
                n.idx.push_back(d.left);
                n.idx.push_back(d.right);
                n.idx.insert(n.idx.end(), t.idx.begin() + 1, t.idx.end());
                n.c = t.c * d.c;
                if (!n.c.is_zero()) next.push_back(std::move(n));
            }
        }
        terms = std::move(next);
    }
    return terms;
}

// ---------------------------------------------------------------------------
// convolution algebra

inline LinForm conv_unit(const HopfAlgebra& H) { return LinForm{H.counit}; }

inline BiForm conv_unit2(const HopfAlgebra& H) {
    BiForm s{Mat(H.dim, H.dim, H.field)};
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) s.m.at(i, j) = H.counit[i] * H.counit[j];
    return s;
}

inline void check_field(const HopfAlgebra& H, const FieldSpec& f) {
    require(H.field == f, errc::field_mismatch, "form/algebra field mismatch");
}

inline LinForm convolve(const HopfAlgebra& H, const LinForm& f, const LinForm& g) {
    LinForm r{zero_vec(H.dim, H.field)};
    for (int i = 0; i < H.dim; ++i)
        for (const auto& d : H.comult[i]) {
            if (f.v[d.left].is_zero() || g.v[d.right].is_zero()) continue;
            r.v[i] = r.v[i] + d.c * f.v[d.left] * g.v[d.right];
        }
    return r;
}

inline BiForm convolve(const HopfAlgebra& H, const BiForm& f, const BiForm& g) {
    BiForm r{Mat(H.dim, H.dim, H.field)};
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) {
            Scalar acc = Scalar::zero(H.field);
            for (const auto& di : H.comult[i])
                for (const auto& dj : H.comult[j]) {
                    const Scalar& a = f.m.at(di.left, dj.left);
                    if (a.is_zero()) continue;
                    const Scalar& b = g.m.at(di.right, dj.right);
                    if (b.is_zero()) continue;
                    acc = acc + di.c * dj.c * a * b;
                }
            r.m.at(i, j) = acc;
        }
    return r;
}

inline LinMap convolve(const HopfAlgebra& H, const LinForm& f, const LinMap& T) {
    LinMap r{Mat(H.dim, H.dim, H.field)};
    for (int j = 0; j < H.dim; ++j)
        for (const auto& d : H.comult[j]) {
            if (f.v[d.left].is_zero()) continue;
            Scalar c = d.c * f.v[d.left];
            for (int i = 0; i < H.dim; ++i) {
                const Scalar& t = T.m.at(i, d.right);
                if (!t.is_zero()) r.m.at(i, j) = r.m.at(i, j) + c * t;
            }
        }
    return r;
}

inline LinMap convolve(const HopfAlgebra& H, const LinMap& T, const LinForm& f) {
    LinMap r{Mat(H.dim, H.dim, H.field)};
    for (int j = 0; j < H.dim; ++j)
        for (const auto& d : H.comult[j]) {
            if (f.v[d.right].is_zero()) continue;
            Scalar c = d.c * f.v[d.right];
            for (int i = 0; i < H.dim; ++i) {
                const Scalar& t = T.m.at(i, d.left);
                if (!t.is_zero()) r.m.at(i, j) = r.m.at(i, j) + c * t;
            }
        }
    return r;
}

/// (S*T)(a) = S(a_1) T(a_2), multiplication in H.
inline LinMap convolve(const HopfAlgebra& H, const LinMap& S, const LinMap& T) {
    LinMap r{Mat(H.dim, H.dim, H.field)};
    for (int j = 0; j < H.dim; ++j) {
        Vec acc = zero_vec(H.dim, H.field);
        for (const auto& d : H.comult[j]) {
            Vec u = zero_vec(H.dim, H.field), v = zero_vec(H.dim, H.field);
            for (int i = 0; i < H.dim; ++i) {
                u[i] = S.m.at(i, d.left);
                v[i] = T.m.at(i, d.right);
            }
            acc = vec_add(acc, vec_scale(d.c, hopf_mul(H, u, v)));
        }
        for (int i = 0; i < H.dim; ++i) r.m.at(i, j) = acc[i];
    }
    return r;
}

/// Convolution inverse of a linear form; solves the exact linear system
/// f(a_1) g(a_2) = eps(a).  Throws NotInvertible when singular.
inline LinForm conv_inverse(const HopfAlgebra& H, const LinForm& f) {
    Mat T(H.dim, H.dim, H.field);
    for (int i = 0; i < H.dim; ++i)
        for (const auto& d : H.comult[i])
            if (!f.v[d.left].is_zero()) T.at(i, d.right) = T.at(i, d.right) + d.c * f.v[d.left];
    auto sol = mat_solve(T, H.counit);
    require(sol.has_value(), errc::not_invertible, "linear form is not convolution invertible");
    LinForm g{*sol};
    require(convolve(H, g, f).v == H.counit, errc::internal, "one-sided convolution inverse");
    return g;
}

inline BiForm conv_inverse(const HopfAlgebra& H, const BiForm& f) {
    int n = H.dim, n2 = n * n;
    Mat T(n2, n2, H.field);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& di : H.comult[i])
                for (const auto& dj : H.comult[j]) {
                    const Scalar& a = f.m.at(di.left, dj.left);
                    if (a.is_zero()) continue;
                    int row = i * n + j, col = di.right * n + dj.right;
                    T.at(row, col) = T.at(row, col) + di.c * dj.c * a;
                }
    Vec rhs = zero_vec(n2, H.field);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rhs[i * n + j] = H.counit[i] * H.counit[j];
    auto sol = mat_solve(T, rhs);
    require(sol.has_value(), errc::not_invertible, "bi-form is not convolution invertible");
    BiForm g{Mat(n, n, H.field)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.m.at(i, j) = (*sol)[i * n + j];
    require(convolve(H, g, f) == conv_unit2(H), errc::internal, "one-sided convolution inverse");
    return g;
}

inline bool is_conv_invertible(const HopfAlgebra& H, const LinForm& f) {
    try {
        conv_inverse(H, f);
        return true;
    } catch (const error& e) {
        if (e.code() == errc::not_invertible) return false;
        throw;
    }
}

inline bool is_conv_invertible(const HopfAlgebra& H, const BiForm& f) {
    try {
        conv_inverse(H, f);
        return true;
    } catch (const error& e) {
        if (e.code() == errc::not_invertible) return false;
        throw;
    }
}

// ---------------------------------------------------------------------------
// algebra-map predicates

inline bool is_algebra_map(const HopfAlgebra& H, const LinForm& f) {
    if (eval(LinForm{f.v}, H.unit) != Scalar::one(H.field)) return false;
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) {
            Scalar lhs = Scalar::zero(H.field);
            for (const auto& t : H.mult[i][j]) lhs = lhs + t.c * f.v[t.idx];
            if (lhs != f.v[i] * f.v[j]) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// axiom verification

struct AxiomCheck {
    std::string axiom;
    bool ok = true;
    std::vector<int> at; // first failing basis tuple, empty when ok
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
    const AxiomCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.axiom == name) return &c;
        return nullptr;
    }
    std::string summary() const {
        std::string s;
        for (const auto& c : checks) {
            s += c.axiom + ": " + (c.ok ? "pass" : "FAIL");
            if (!c.ok) {
                s += " at (";
                for (size_t i = 0; i < c.at.size(); ++i) s += (i ? "," : "") + std::to_string(c.at[i]);
                s += ")";
            }
            s += "\n";
        }
        return s;
    }
};

/// Checks the five Hopf axioms exactly on all basis tuples.
inline AxiomReport verify_hopf_axioms(const HopfAlgebra& H) {
    AxiomReport rep;
    const FieldSpec& F = H.field;
    int n = H.dim;
    require(int(H.mult.size()) == n && int(H.comult.size()) == n && int(H.unit.size()) == n &&
                int(H.counit.size()) == n && H.antipode.rows == n && H.antipode.cols == n,
            errc::shape_mismatch, "structure tensors have inconsistent shapes");
    for (const auto& s : H.unit) require(s.field() == F, errc::field_mismatch, "mixed field tags");
    for (const auto& s : H.counit) require(s.field() == F, errc::field_mismatch, "mixed field tags");
    for (const auto& row : H.mult)
        for (const auto& sv : row)
            for (const auto& t : sv) require(t.c.field() == F, errc::field_mismatch, "mixed field tags");
    for (const auto& cs : H.comult)
        for (const auto& t : cs) require(t.c.field() == F, errc::field_mismatch, "mixed field tags");
    for (const auto& s : H.antipode.a) require(s.field() == F, errc::field_mismatch, "mixed field tags");

    AxiomCheck assoc{"associativity"};
    for (int i = 0; i < n && assoc.ok; ++i)
        for (int j = 0; j < n && assoc.ok; ++j)
            for (int k = 0; k < n && assoc.ok; ++k) {
                Vec lhs = hopf_mul(H, hopf_mul(H, basis_vec(H, i), basis_vec(H, j)), basis_vec(H, k));
                Vec rhs = hopf_mul(H, basis_vec(H, i), hopf_mul(H, basis_vec(H, j), basis_vec(H, k)));
                if (lhs != rhs) assoc = {"associativity", false, {i, j, k}};
            }
    rep.checks.push_back(assoc);

    AxiomCheck unit{"unit"};
    for (int i = 0; i < n && unit.ok; ++i) {
        if (hopf_mul(H, H.unit, basis_vec(H, i)) != basis_vec(H, i) ||
            hopf_mul(H, basis_vec(H, i), H.unit) != basis_vec(H, i))
            unit = {"unit", false, {i}};
    }
    rep.checks.push_back(unit);

    AxiomCheck coassoc{"coassociativity"};
    for (int i = 0; i < n && coassoc.ok; ++i) {
        // compare (Delta (x) id)Delta with (id (x) Delta)Delta as rank-3 tensors
        std::vector<Scalar> lhs(size_t(n) * n * n, Scalar::zero(F)), rhs(size_t(n) * n * n, Scalar::zero(F));
        for (const auto& d : H.comult[i]) {
            for (const auto& e : H.comult[d.left]) {
                auto& slot = lhs[(size_t(e.left) * n + e.right) * n + d.right];
                slot = slot + d.c * e.c;
            }
            for (const auto& e : H.comult[d.right]) {
                auto& slot = rhs[(size_t(d.left) * n + e.left) * n + e.right];
                slot = slot + d.c * e.c;
            }
        }
        if (lhs != rhs) coassoc = {"coassociativity", false, {i}};
    }
    rep.checks.push_back(coassoc);

    AxiomCheck counit{"counit"};
    for (int i = 0; i < n && counit.ok; ++i) {
        Vec l = zero_vec(n, F), r = zero_vec(n, F);
        for (const auto& d : H.comult[i]) {
            l[d.right] = l[d.right] + d.c * H.counit[d.left];
            r[d.left] = r[d.left] + d.c * H.counit[d.right];
        }
        if (l != basis_vec(H, i) || r != basis_vec(H, i)) counit = {"counit", false, {i}};
    }
    rep.checks.push_back(counit);

    AxiomCheck comult_alg{"comult_algebra_map"};
    if (comult_vec(H, H.unit) != tensor2_unit(H)) comult_alg = {"comult_algebra_map", false, {}};
    for (int i = 0; i < n && comult_alg.ok; ++i)
        for (int j = 0; j < n && comult_alg.ok; ++j) {
            Vec prod = zero_vec(n, F);
            for (const auto& t : H.mult[i][j]) prod[t.idx] = prod[t.idx] + t.c;
            Vec lhs = comult_vec(H, prod);
            Vec rhs = tensor2_mul(H, comult_vec(H, basis_vec(H, i)), comult_vec(H, basis_vec(H, j)));
            if (lhs != rhs) comult_alg = {"comult_algebra_map", false, {i, j}};
        }
    rep.checks.push_back(comult_alg);

    AxiomCheck counit_alg{"counit_algebra_map"};
    if (!is_algebra_map(H, LinForm{H.counit})) counit_alg = {"counit_algebra_map", false, {}};
    rep.checks.push_back(counit_alg);

    AxiomCheck anti{"antipode"};
    for (int i = 0; i < n && anti.ok; ++i) {
        Vec l = zero_vec(n, F), r = zero_vec(n, F);
        for (const auto& d : H.comult[i]) {
            Vec sl = mat_vec(H.antipode, basis_vec(H, d.left));
            l = vec_add(l, vec_scale(d.c, hopf_mul(H, sl, basis_vec(H, d.right))));
            Vec sr = mat_vec(H.antipode, basis_vec(H, d.right));
            r = vec_add(r, vec_scale(d.c, hopf_mul(H, basis_vec(H, d.left), sr)));
        }
        Vec want = vec_scale(H.counit[i], H.unit);
        if (l != want || r != want) anti = {"antipode", false, {i}};
    }
    rep.checks.push_back(anti);

    return rep;
}

// ---------------------------------------------------------------------------
// dual, tensor product, op/cop

/// Dual Hopf algebra on the dual basis: structure tensors transposed.
inline HopfAlgebra dual_hopf(const HopfAlgebra& H) {
    HopfAlgebra D;
    D.field = H.field;
    D.dim = H.dim;
    D.basis.resize(H.dim);
    for (int i = 0; i < H.dim; ++i) D.basis[i] = H.basis[i] + "*";
    D.mult.assign(H.dim, std::vector<SparseVec>(H.dim));
    for (int k = 0; k < H.dim; ++k)
        for (const auto& d : H.comult[k]) D.mult[d.left][d.right].push_back({k, d.c});
    D.comult.assign(H.dim, {});
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j)
            for (const auto& t : H.mult[i][j]) D.comult[t.idx].push_back({i, j, t.c});
    D.unit = H.counit;
    D.counit = H.unit;
    D.antipode = mat_transpose(H.antipode);
    if (H.gens.k == GenData::kind::group) {
        D.gens.k = GenData::kind::dual_group;
        D.gens.group = H.gens.group;
    } else if (H.gens.k == GenData::kind::dual_group) {
        D.gens.k = GenData::kind::group;
        D.gens.group = H.gens.group;
    }
    return D;
}

/// Tensor product Hopf algebra, first-factor-major basis ordering (b_i (x) a_j).
inline HopfAlgebra tensor_hopf(const HopfAlgebra& A, const HopfAlgebra& B) {
    require(A.field == B.field, errc::field_mismatch, "tensor factors over different fields");
    HopfAlgebra T;
    T.field = A.field;
    T.dim = A.dim * B.dim;
    T.basis.resize(T.dim);
    auto ix = [&](int i, int j) { return i * B.dim + j; };
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < B.dim; ++j) T.basis[ix(i, j)] = A.basis[i] + "(x)" + B.basis[j];
    T.mult.assign(T.dim, std::vector<SparseVec>(T.dim));
    for (int i1 = 0; i1 < A.dim; ++i1)
        for (int j1 = 0; j1 < B.dim; ++j1)
            for (int i2 = 0; i2 < A.dim; ++i2)
                for (int j2 = 0; j2 < B.dim; ++j2) {
                    SparseVec& out = T.mult[ix(i1, j1)][ix(i2, j2)];
                    for (const auto& ta : A.mult[i1][i2])
                        for (const auto& tb : B.mult[j1][j2]) out.push_back({ix(ta.idx, tb.idx), ta.c * tb.c});
                }
    T.comult.assign(T.dim, {});
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < B.dim; ++j)
            for (const auto& da : A.comult[i])
                for (const auto& db : B.comult[j])
                    T.comult[ix(i, j)].push_back({ix(da.left, db.left), ix(da.right, db.right), da.c * db.c});
    T.unit = zero_vec(T.dim, T.field);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < B.dim; ++j) T.unit[ix(i, j)] = A.unit[i] * B.unit[j];
    T.counit = zero_vec(T.dim, T.field);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < B.dim; ++j) T.counit[ix(i, j)] = A.counit[i] * B.counit[j];
    T.antipode = Mat(T.dim, T.dim, T.field);
    for (int i1 = 0; i1 < A.dim; ++i1)
        for (int j1 = 0; j1 < B.dim; ++j1)
            for (int i2 = 0; i2 < A.dim; ++i2)
                for (int j2 = 0; j2 < B.dim; ++j2)
                    T.antipode.at(ix(i1, j1), ix(i2, j2)) = A.antipode.at(i1, i2) * B.antipode.at(j1, j2);
    T.gens.k = GenData::kind::tensor;
    T.gens.left = std::make_shared<GenData>(A.gens);
    T.gens.right = std::make_shared<GenData>(B.gens);
    T.gens.left_dim = A.dim;
    T.gens.right_dim = B.dim;
    return T;
}

/// Opposite / co-opposite Hopf algebra.  With exactly one flip the antipode
/// becomes S^{-1}; with both (or neither) it stays S.
inline HopfAlgebra op_cop(const HopfAlgebra& H, bool flip_mult, bool flip_comult) {
    HopfAlgebra R = H;
    if (flip_mult) {
        for (int i = 0; i < H.dim; ++i)
            for (int j = 0; j < H.dim; ++j) R.mult[i][j] = H.mult[j][i];
    }
    if (flip_comult) {
        for (int i = 0; i < H.dim; ++i)
            for (auto& d : R.comult[i]) std::swap(d.left, d.right);
    }
    if (flip_mult != flip_comult) {
        auto inv = mat_inverse(H.antipode);
        require(inv.has_value(), errc::antipode_not_invertible, "antipode is singular");
        R.antipode = *inv;
    }
    R.gens = GenData{}; // family metadata does not survive op/cop in general
    if ((H.gens.k == GenData::kind::group || H.gens.k == GenData::kind::dual_group) &&
        H.gens.group && H.gens.group->is_abelian())
        R.gens = H.gens;
    return R;
}

/// Structure-tensor equality (basis names ignored).
inline bool hopf_equal(const HopfAlgebra& A, const HopfAlgebra& B) {
    if (A.field != B.field || A.dim != B.dim) return false;
    if (A.unit != B.unit || A.counit != B.counit || A.antipode != B.antipode) return false;
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            Vec u = zero_vec(A.dim, A.field), v = zero_vec(A.dim, A.field);
            for (const auto& t : A.mult[i][j]) u[t.idx] = u[t.idx] + t.c;
            for (const auto& t : B.mult[i][j]) v[t.idx] = v[t.idx] + t.c;
            if (u != v) return false;
        }
    for (int i = 0; i < A.dim; ++i) {
        Vec u = zero_vec(A.dim * A.dim, A.field), v = zero_vec(A.dim * A.dim, A.field);
        for (const auto& d : A.comult[i]) u[t2(A, d.left, d.right)] = u[t2(A, d.left, d.right)] + d.c;
        for (const auto& d : B.comult[i]) v[t2(A, d.left, d.right)] = v[t2(A, d.left, d.right)] + d.c;
        if (u != v) return false;
    }
    return true;
}

} // namespace hopflab
