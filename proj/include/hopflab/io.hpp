#pragma once

#include <fstream>

#include <json.hpp>

#include "crossed.hpp"
#include "families.hpp"
#include "galois.hpp"

namespace hopflab {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// field and scalar encoding: "Q" | {"cyclotomic": N} | {"Fp": p}; scalars are
// canonical strings ("3/2", "z^2", "4 mod 5"); round-trips are bit-exact.

inline json field_to_json(const FieldSpec& f) {
    switch (f.kind) {
        case field_kind::rational: return json("Q");
        case field_kind::cyclotomic: return json{{"cyclotomic", f.param}};
        case field_kind::prime: return json{{"Fp", f.param}};
    }
    raise(errc::internal, "bad field kind");
}

inline FieldSpec field_from_json(const json& j) {
    if (j.is_string()) {
        require(j.get<std::string>() == "Q", errc::parse_error, "unknown field tag");
        return FieldSpec::Q();
    }
    require(j.is_object(), errc::parse_error, "field must be \"Q\" or an object");
    if (j.contains("cyclotomic")) return FieldSpec::cyclotomic(j["cyclotomic"].get<long>());
    if (j.contains("Fp")) return FieldSpec::Fp(j["Fp"].get<long>());
    raise(errc::parse_error, "unknown field object");
}

inline json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

inline Vec vec_from_json(const FieldSpec& f, const json& j) {
    require(j.is_array(), errc::parse_error, "expected array of scalars");
    Vec v;
    for (const auto& e : j) v.push_back(Scalar::parse(f, e.get<std::string>()));
    return v;
}

inline json mat_to_json(const Mat& m) {
    json out = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
        out.push_back(row);
    }
    return out;
}

inline Mat mat_from_json(const FieldSpec& f, const json& j) {
    require(j.is_array() && !j.empty(), errc::parse_error, "expected matrix");
    int rows = int(j.size()), cols = int(j[0].size());
    Mat m(rows, cols, f);
    for (int i = 0; i < rows; ++i) {
        require(int(j[i].size()) == cols, errc::parse_error, "ragged matrix");
        for (int c = 0; c < cols; ++c) m.at(i, c) = Scalar::parse(f, j[i][c].get<std::string>());
    }
    return m;
}

// ---------------------------------------------------------------------------
// Hopf algebras

inline json hopf_to_json(const HopfAlgebra& H) {
    json out;
    out["field"] = field_to_json(H.field);
    out["basis"] = H.basis;
    json mult = json::array();
    for (int i = 0; i < H.dim; ++i) {
        json row = json::array();
        for (int j = 0; j < H.dim; ++j) {
            Vec dense = zero_vec(H.dim, H.field);
            for (const auto& t : H.mult[i][j]) dense[t.idx] = dense[t.idx] + t.c;
            row.push_back(vec_to_json(dense));
        }
        mult.push_back(row);
    }
    out["mult"] = mult;
    json comult = json::array();
    for (int i = 0; i < H.dim; ++i) {
        json terms = json::array();
        for (const auto& d : H.comult[i]) terms.push_back(json::array({d.left, d.right, d.c.str()}));
        comult.push_back(terms);
    }
    out["comult"] = comult;
    out["unit"] = vec_to_json(H.unit);
    out["counit"] = vec_to_json(H.counit);
    out["antipode"] = mat_to_json(H.antipode);
    return out;
}

/// Parses and validates a Hopf algebra; the axioms are re-verified on load
/// and an AxiomFailure is raised when they do not hold.
inline HopfAlgebra hopf_from_json(const json& j, bool validate = true) {
    HopfAlgebra H;
    H.field = field_from_json(j.at("field"));
    H.basis = j.at("basis").get<std::vector<std::string>>();
    H.dim = int(H.basis.size());
    const json& mult = j.at("mult");
    require(int(mult.size()) == H.dim, errc::parse_error, "mult tensor has wrong size");
    H.mult.assign(H.dim, std::vector<SparseVec>(H.dim));
    for (int i = 0; i < H.dim; ++i)
        for (int jj = 0; jj < H.dim; ++jj) {
            Vec dense = vec_from_json(H.field, mult[i][jj]);
            require(int(dense.size()) == H.dim, errc::parse_error, "mult row has wrong length");
            for (int k = 0; k < H.dim; ++k)
                if (!dense[k].is_zero()) H.mult[i][jj].push_back({k, dense[k]});
        }
    const json& comult = j.at("comult");
    require(int(comult.size()) == H.dim, errc::parse_error, "comult tensor has wrong size");
    H.comult.assign(H.dim, {});
    for (int i = 0; i < H.dim; ++i)
        for (const auto& t : comult[i]) {
            require(t.is_array() && t.size() == 3, errc::parse_error, "comult triple malformed");
            H.comult[i].push_back(
                {t[0].get<int>(), t[1].get<int>(), Scalar::parse(H.field, t[2].get<std::string>())});
        }
    H.unit = vec_from_json(H.field, j.at("unit"));
    H.counit = vec_from_json(H.field, j.at("counit"));
    H.antipode = mat_from_json(H.field, j.at("antipode"));
    if (validate) {
        auto rep = verify_hopf_axioms(H);
        require(rep.all_ok(), errc::axiom_failure, "loaded algebra fails axioms:\n" + rep.summary());
        require(eval(LinForm{H.counit}, H.unit).is_one(), errc::axiom_failure, "eps(1) != 1");
    }
    return H;
}

// ---------------------------------------------------------------------------
// forms

inline json linform_to_json(const FieldSpec& f, const LinForm& v) {
    json out;
    out["field"] = field_to_json(f);
    out["kind"] = "linform";
    out["values"] = vec_to_json(v.v);
    return out;
}

inline json biform_to_json(const FieldSpec& f, const BiForm& v) {
    json out;
    out["field"] = field_to_json(f);
    out["kind"] = "biform";
    out["values"] = mat_to_json(v.m);
    return out;
}

inline json linmap_to_json(const FieldSpec& f, const LinMap& v) {
    json out;
    out["field"] = field_to_json(f);
    out["kind"] = "linmap";
    out["values"] = mat_to_json(v.m);
    return out;
}

struct ParsedForm {
    FieldSpec field;
    std::string kind;
    LinForm lin;
    BiForm bi;
    LinMap map;
};

inline ParsedForm form_from_json(const json& j) {
    ParsedForm out;
    out.field = field_from_json(j.at("field"));
    out.kind = j.at("kind").get<std::string>();
    if (out.kind == "linform")
        out.lin.v = vec_from_json(out.field, j.at("values"));
    else if (out.kind == "biform")
        out.bi.m = mat_from_json(out.field, j.at("values"));
    else if (out.kind == "linmap")
        out.map.m = mat_from_json(out.field, j.at("values"));
    else
        raise(errc::parse_error, "unknown form kind '" + out.kind + "'");
    return out;
}

// ---------------------------------------------------------------------------
// groups, group data, matched pairs, comodule algebras, crossed systems

inline json group_to_json(const FiniteGroup& G) {
    json out;
    out["order"] = G.order;
    out["names"] = G.names;
    out["table"] = G.table;
    return out;
}

inline FiniteGroup group_from_json(const json& j) {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return FiniteGroup::from_table(std::move(table), std::move(names));
}

inline json group_datum_to_json(const FieldSpec& f, const GroupDatum& d) {
    json out;
    out["field"] = field_to_json(f);
    out["group"] = group_to_json(d.G);
    out["g"] = d.g;
    json chi = json::array();
    for (const auto& s : d.chi) chi.push_back(s.str());
    out["chi"] = chi;
    out["mu"] = d.mu.str();
    return out;
}

inline std::pair<FieldSpec, GroupDatum> group_datum_from_json(const json& j) {
    FieldSpec f = field_from_json(j.at("field"));
    GroupDatum d;
    d.G = group_from_json(j.at("group"));
    d.g = j.at("g").get<int>();
    for (const auto& e : j.at("chi")) d.chi.push_back(Scalar::parse(f, e.get<std::string>()));
    d.mu = Scalar::parse(f, j.at("mu").get<std::string>());
    d.validate();
    return {f, d};
}

inline json matched_pair_to_json(const MatchedPair& mp) {
    json out;
    out["B"] = hopf_to_json(*mp.B);
    out["A"] = hopf_to_json(*mp.A);
    auto tensor_to_json = [&](const std::vector<std::vector<SparseVec>>& t, int out_dim) {
        json arr = json::array();
        for (const auto& row : t) {
            json r = json::array();
            for (const auto& sv : row) {
                Vec dense = zero_vec(out_dim, mp.A->field);
                for (const auto& e : sv) dense[e.idx] = dense[e.idx] + e.c;
                r.push_back(vec_to_json(dense));
            }
            arr.push_back(r);
        }
        return arr;
    };
    out["act_l"] = tensor_to_json(mp.act_l, mp.B->dim);
    out["act_r"] = tensor_to_json(mp.act_r, mp.A->dim);
    return out;
}

inline MatchedPair matched_pair_from_json(const json& j) {
    MatchedPair mp;
    mp.B = std::make_shared<const HopfAlgebra>(hopf_from_json(j.at("B")));
    mp.A = std::make_shared<const HopfAlgebra>(hopf_from_json(j.at("A")));
    auto tensor_from_json = [&](const json& arr, int rows, int cols, int out_dim) {
        std::vector<std::vector<SparseVec>> t(rows, std::vector<SparseVec>(cols));
        require(int(arr.size()) == rows, errc::parse_error, "action tensor has wrong size");
        for (int a = 0; a < rows; ++a)
            for (int b = 0; b < cols; ++b) {
                Vec dense = vec_from_json(mp.A->field, arr[a][b]);
                require(int(dense.size()) == out_dim, errc::parse_error, "action row has wrong length");
                for (int k = 0; k < out_dim; ++k)
                    if (!dense[k].is_zero()) t[a][b].push_back({k, dense[k]});
            }
        return t;
    };
    mp.act_l = tensor_from_json(j.at("act_l"), mp.A->dim, mp.B->dim, mp.B->dim);
    mp.act_r = tensor_from_json(j.at("act_r"), mp.A->dim, mp.B->dim, mp.A->dim);
    auto rep = check_matched_pair(mp);
    require(rep.ok, errc::not_matched, "loaded matched pair fails identity " + rep.failed);
    return mp;
}

inline json comodule_to_json(const ComoduleAlgebra& Z) {
    json out;
    out["field"] = field_to_json(Z.field);
    out["basis"] = Z.basis;
    json mult = json::array();
    for (int i = 0; i < Z.dim; ++i) {
        json row = json::array();
        for (int j = 0; j < Z.dim; ++j) {
            Vec dense = zero_vec(Z.dim, Z.field);
            for (const auto& t : Z.mult[i][j]) dense[t.idx] = dense[t.idx] + t.c;
            row.push_back(vec_to_json(dense));
        }
        mult.push_back(row);
    }
    out["mult"] = mult;
    out["unit"] = vec_to_json(Z.unit);
    auto triples = [](const std::vector<std::vector<CoTriple>>& co) {
        json arr = json::array();
        for (const auto& row : co) {
            json r = json::array();
            for (const auto& t : row) r.push_back(json::array({t.left, t.right, t.c.str()}));
            arr.push_back(r);
        }
        return arr;
    };
    if (Z.Hr) {
        out["hopf"] = hopf_to_json(*Z.Hr);
        out["right_coaction"] = triples(Z.rho);
    }
    if (Z.Hl) {
        if (!Z.Hr) out["hopf"] = hopf_to_json(*Z.Hl);
        out["left_coaction"] = triples(Z.lco);
    }
    return out;
}

inline ComoduleAlgebra comodule_from_json(const json& j) {
    ComoduleAlgebra Z;
    Z.field = field_from_json(j.at("field"));
    Z.basis = j.at("basis").get<std::vector<std::string>>();
    Z.dim = int(Z.basis.size());
    Z.mult.assign(Z.dim, std::vector<SparseVec>(Z.dim));
    const json& mult = j.at("mult");
    for (int i = 0; i < Z.dim; ++i)
        for (int jj = 0; jj < Z.dim; ++jj) {
            Vec dense = vec_from_json(Z.field, mult[i][jj]);
            for (int k = 0; k < Z.dim; ++k)
                if (!dense[k].is_zero()) Z.mult[i][jj].push_back({k, dense[k]});
        }
    Z.unit = vec_from_json(Z.field, j.at("unit"));
    std::shared_ptr<const HopfAlgebra> H;
    if (j.contains("hopf")) H = std::make_shared<const HopfAlgebra>(hopf_from_json(j.at("hopf")));
    auto triples = [&](const json& arr, std::vector<std::vector<CoTriple>>& out_t) {
        out_t.assign(Z.dim, {});
        for (int i = 0; i < Z.dim; ++i)
            for (const auto& t : arr[i])
                out_t[i].push_back(
                    {t[0].get<int>(), t[1].get<int>(), Scalar::parse(Z.field, t[2].get<std::string>())});
    };
    if (j.contains("right_coaction")) {
        Z.Hr = H;
        triples(j.at("right_coaction"), Z.rho);
    }
    if (j.contains("left_coaction")) {
        Z.Hl = H;
        triples(j.at("left_coaction"), Z.lco);
    }
    auto rep = check_comodule_algebra(Z);
    require(rep.ok, errc::axiom_failure, "loaded comodule algebra fails " + rep.failed);
    return Z;
}

inline json crossed_to_json(const CrossedSystem& cs) {
    json out;
    out["field"] = field_to_json(cs.R.field);
    out["hopf"] = hopf_to_json(*cs.A);
    json R;
    R["basis"] = cs.R.basis;
    json rmult = json::array();
    for (int i = 0; i < cs.R.dim; ++i) {
        json row = json::array();
        for (int j = 0; j < cs.R.dim; ++j) {
            Vec dense = zero_vec(cs.R.dim, cs.R.field);
            for (const auto& t : cs.R.mult[i][j]) dense[t.idx] = dense[t.idx] + t.c;
            row.push_back(vec_to_json(dense));
        }
        rmult.push_back(row);
    }
    R["mult"] = rmult;
    R["unit"] = vec_to_json(cs.R.unit);
    out["R"] = R;
    json act = json::array();
    for (int a = 0; a < cs.A->dim; ++a) {
        json row = json::array();
        for (int r = 0; r < cs.R.dim; ++r) {
            Vec dense = zero_vec(cs.R.dim, cs.R.field);
            for (const auto& t : cs.act[a][r]) dense[t.idx] = dense[t.idx] + t.c;
            row.push_back(vec_to_json(dense));
        }
        act.push_back(row);
    }
    out["action"] = act;
    json sig = json::array();
    for (int a = 0; a < cs.A->dim; ++a) {
        json row = json::array();
        for (int b = 0; b < cs.A->dim; ++b) row.push_back(vec_to_json(cs.sig[a][b]));
        sig.push_back(row);
    }
    out["sigma"] = sig;
    return out;
}

inline CrossedSystem crossed_from_json(const json& j) {
    CrossedSystem cs;
    FieldSpec f = field_from_json(j.at("field"));
    cs.A = std::make_shared<const HopfAlgebra>(hopf_from_json(j.at("hopf")));
    const json& R = j.at("R");
    cs.R.field = f;
    cs.R.basis = R.at("basis").get<std::vector<std::string>>();
    cs.R.dim = int(cs.R.basis.size());
    cs.R.mult.assign(cs.R.dim, std::vector<SparseVec>(cs.R.dim));
    for (int i = 0; i < cs.R.dim; ++i)
        for (int jj = 0; jj < cs.R.dim; ++jj) {
            Vec dense = vec_from_json(f, R.at("mult")[i][jj]);
            for (int k = 0; k < cs.R.dim; ++k)
                if (!dense[k].is_zero()) cs.R.mult[i][jj].push_back({k, dense[k]});
        }
    cs.R.unit = vec_from_json(f, R.at("unit"));
    cs.act.assign(cs.A->dim, std::vector<SparseVec>(cs.R.dim));
    for (int a = 0; a < cs.A->dim; ++a)
        for (int r = 0; r < cs.R.dim; ++r) {
            Vec dense = vec_from_json(f, j.at("action")[a][r]);
            for (int k = 0; k < cs.R.dim; ++k)
                if (!dense[k].is_zero()) cs.act[a][r].push_back({k, dense[k]});
        }
    cs.sig.assign(cs.A->dim, std::vector<Vec>(cs.A->dim));
    for (int a = 0; a < cs.A->dim; ++a)
        for (int b = 0; b < cs.A->dim; ++b) cs.sig[a][b] = vec_from_json(f, j.at("sigma")[a][b]);
    auto rep = check_crossed_system(cs);
    require(rep.ok, errc::axiom_failure, "loaded crossed system fails " + rep.failed);
    return cs;
}

// ---------------------------------------------------------------------------
// canonical file round-trips

inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    require(bool(in), errc::parse_error, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        raise(errc::parse_error, std::string("JSON error in '") + path + "': " + e.what());
    }
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    require(bool(out), errc::parse_error, "cannot write '" + path + "'");
    out << content;
}

} // namespace hopflab
