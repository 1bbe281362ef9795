// hopflab: batch front-end for the exact Hopf-algebra toolkit.
// Exit codes: 0 pass, 1 failure, 2 usage.
#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "hopflab/io.hpp"
#include "hopflab/projrep.hpp"
#include "hopflab/suite.hpp"

using namespace hopflab;

namespace {

FieldSpec parse_field(const std::string& s) {
    if (s == "Q" || s == "q") return FieldSpec::Q();
    if ((s[0] == 'F' || s[0] == 'f') && s.size() > 1) return FieldSpec::Fp(std::stol(s.substr(1)));
    if ((s[0] == 'C' || s[0] == 'c') && s.size() > 1) return FieldSpec::cyclotomic(std::stol(s.substr(1)));
    raise(errc::parse_error, "unknown field '" + s + "' (use Q, F<p> or C<N>)");
}

HopfAlgebra load_algebra(const std::string& path) { return hopf_from_json(load_json_file(path)); }

BiForm load_biform(const std::string& path, const HopfAlgebra& H) {
    ParsedForm f = form_from_json(load_json_file(path));
    require(f.kind == "biform", errc::parse_error, "expected a biform in '" + path + "'");
    require(f.field == H.field && f.bi.m.rows == H.dim, errc::field_mismatch,
            "form does not match the algebra");
    return f.bi;
}

LinForm load_linform(const std::string& path, const HopfAlgebra& H) {
    ParsedForm f = form_from_json(load_json_file(path));
    require(f.kind == "linform", errc::parse_error, "expected a linform in '" + path + "'");
    require(f.field == H.field && int(f.lin.v.size()) == H.dim, errc::field_mismatch,
            "form does not match the algebra");
    return f.lin;
}

void emit(const std::string& out_path, const json& j) {
    std::string text = canonical_dump(j);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

json projrep_to_json(const ProjRep& X) {
    json out;
    out["hopf"] = hopf_to_json(*X.H);
    out["sigma"] = mat_to_json(X.sigma.m);
    out["dim_v"] = X.dim_v;
    json pis = json::array();
    for (const auto& m : X.pi) pis.push_back(mat_to_json(m));
    out["pi"] = pis;
    return out;
}

ProjRep projrep_from_json(const json& j) {
    ProjRep X;
    X.H = std::make_shared<const HopfAlgebra>(hopf_from_json(j.at("hopf")));
    X.sigma.m = mat_from_json(X.H->field, j.at("sigma"));
    X.dim_v = j.at("dim_v").get<int>();
    for (const auto& m : j.at("pi")) X.pi.push_back(mat_from_json(X.H->field, m));
    require(check_projrep(X), errc::axiom_failure, "loaded projective representation fails its checks");
    return X;
}

HopfAlgebra build_family(const std::string& spec, const FieldSpec& F) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (name == "sweedler") return sweedler(F);
    if (name == "en") return en_algebra(F, std::stoi(arg));
    if (name == "group") return group_algebra(F, group_from_json(load_json_file(arg)));
    if (name == "dual-group") return dual_group_algebra(F, group_from_json(load_json_file(arg)));
    if (name == "taft") return taft(std::stoi(arg));
    if (name == "monomial") {
        auto parsed = group_datum_from_json(load_json_file(arg));
        return monomial_hopf(parsed.first, parsed.second);
    }
    if (name == "double-crossed") return double_crossed(matched_pair_from_json(load_json_file(arg)));
    if (name == "drinfeld") return drinfeld_double(load_algebra(arg));
    if (name == "bosonization") {
        json j = load_json_file(arg);
        FieldSpec f = field_from_json(j.at("field"));
        SuperSpace S;
        S.G = group_from_json(j.at("group"));
        S.n = j.at("n").get<int>();
        S.g = j.at("g").get<int>();
        for (const auto& m : j.at("rho")) S.rho.push_back(mat_from_json(f, m));
        return bosonization(f, S);
    }
    raise(errc::parse_error, "unknown family '" + spec + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hopflab: exact computations with lazy 2-cocycles on finite-dimensional Hopf algebras"};
    app.require_subcommand(1);

    std::string algebra_path, form1, form2, out_path, family_spec, field_spec = "Q", side = "right";
    std::string left_path, right_path, pair_path, rep_path, rep2_path, system_path, level = "full";
    std::string report_path, phi_b_path, phi_a_path;

    auto* verify = app.add_subcommand("verify", "verify the Hopf axioms of a definition file");
    verify->add_option("--algebra", algebra_path)->required();
    verify->add_option("--out", out_path);

    auto* conv = app.add_subcommand("convolve", "convolution product of two forms");
    conv->add_option("--algebra", algebra_path)->required();
    conv->add_option("--form", form1)->required();
    conv->add_option("--form2", form2)->required();
    conv->add_option("--out", out_path);

    auto* cocy = app.add_subcommand("cocycle-check", "laziness / cocycle predicate report for a biform");
    cocy->add_option("--algebra", algebra_path)->required();
    cocy->add_option("--form", form1)->required();
    cocy->add_option("--out", out_path);

    auto* cob = app.add_subcommand("coboundary", "coboundary d(mu) of an invertible linear form");
    cob->add_option("--algebra", algebra_path)->required();
    cob->add_option("--form", form1)->required();
    cob->add_option("--out", out_path);

    auto* twist = app.add_subcommand("twist", "Doi twist of an algebra by a left 2-cocycle");
    twist->add_option("--algebra", algebra_path)->required();
    twist->add_option("--form", form1)->required();
    twist->add_option("--out", out_path);

    auto* gal = app.add_subcommand("galois", "(bi)Galois object of a 2-cocycle");
    gal->add_option("--algebra", algebra_path)->required();
    gal->add_option("--form", form1)->required();
    gal->add_option("--side", side)->check(CLI::IsMember({"right", "left", "bi"}));
    gal->add_option("--out", out_path);

    auto* cot = app.add_subcommand("cotensor", "cotensor product of two comodule algebras");
    cot->add_option("--left", left_path)->required();
    cot->add_option("--right", right_path)->required();
    cot->add_option("--out", out_path);

    auto* fam = app.add_subcommand("family", "construct a family algebra");
    fam->add_option("--family", family_spec)->required();
    fam->add_option("--field", field_spec);
    fam->add_option("--out", out_path);

    auto* kac = app.add_subcommand("kac", "Kac-Schauenburg layer");
    kac->require_subcommand(1);
    auto* kcp = kac->add_subcommand("check-pairing", "central pairing conditions");
    kcp->add_option("--pair", pair_path)->required();
    kcp->add_option("--form", form1)->required();
    auto* ksig = kac->add_subcommand("sigma", "Sigma: pairing to lazy cocycle on B |><| A");
    ksig->add_option("--pair", pair_path)->required();
    ksig->add_option("--form", form1)->required();
    ksig->add_option("--out", out_path);
    auto* klam = kac->add_subcommand("lambda", "Lambda of two lazy algebra maps");
    klam->add_option("--pair", pair_path)->required();
    klam->add_option("--phi-b", phi_b_path)->required();
    klam->add_option("--phi-a", phi_a_path)->required();
    klam->add_option("--out", out_path);
    auto* kyam = kac->add_subcommand("yamazaki", "join of two factor cocycles (trivial actions)");
    kyam->add_option("--pair", pair_path)->required();
    kyam->add_option("--form", form1)->required();
    kyam->add_option("--form2", form2)->required();
    kyam->add_option("--out", out_path);

    auto* pr = app.add_subcommand("projrep", "projective representations");
    pr->require_subcommand(1);
    auto* prr = pr->add_subcommand("regular", "regular representation of a lazy cocycle");
    prr->add_option("--algebra", algebra_path)->required();
    prr->add_option("--form", form1)->required();
    prr->add_option("--out", out_path);
    auto* prt = pr->add_subcommand("tensor", "tensor product of two representations");
    prt->add_option("--rep", rep_path)->required();
    prt->add_option("--rep2", rep2_path)->required();
    prt->add_option("--out", out_path);
    auto* prd = pr->add_subcommand("dual", "left dual of a representation");
    prd->add_option("--rep", rep_path)->required();
    prd->add_option("--out", out_path);
    auto* prc = pr->add_subcommand("check", "algebra-morphism check");
    prc->add_option("--rep", rep_path)->required();

    auto* cr = app.add_subcommand("crossed", "crossed systems over a base algebra");
    cr->require_subcommand(1);
    auto* crc = cr->add_subcommand("check", "crossed system axioms");
    crc->add_option("--system", system_path)->required();
    auto* crl = cr->add_subcommand("lazy", "laziness of a crossed system");
    crl->add_option("--system", system_path)->required();
    auto* cra = cr->add_subcommand("act", "right action of a lazy cocycle");
    cra->add_option("--system", system_path)->required();
    cra->add_option("--form", form1)->required();
    cra->add_option("--out", out_path);
    auto* crp = cr->add_subcommand("product", "crossed product R #_sigma A");
    crp->add_option("--system", system_path)->required();
    crp->add_option("--out", out_path);

    auto* orc = app.add_subcommand("oracle", "finite-field enumeration");
    orc->require_subcommand(1);
    auto* oz = orc->add_subcommand("z2l", "Z^2_L / B^2_L / H^2_L over F_p");
    oz->add_option("--algebra", algebra_path)->required();
    oz->add_option("--report", report_path);
    auto* ou = orc->add_subcommand("lazy-units", "Reg^1_L over F_p");
    ou->add_option("--algebra", algebra_path)->required();
    ou->add_option("--report", report_path);
    auto* oa = orc->add_subcommand("alg-maps", "Alg(A,k) on family generators");
    oa->add_option("--algebra", algebra_path)->required();
    oa->add_option("--report", report_path);
    auto* op = orc->add_subcommand("pairings", "central pairings over F_p");
    op->add_option("--pair", pair_path)->required();
    op->add_option("--report", report_path);

    auto* su = app.add_subcommand("suite", "acceptance criteria runner");
    su->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
    su->add_option("--report", report_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage
    }

    try {
        using clock = std::chrono::steady_clock;
        auto t0 = clock::now();
        auto wall_ms = [&]() {
            return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
        };
        if (*verify) {
            HopfAlgebra H = hopf_from_json(load_json_file(algebra_path), /*validate=*/false);
            auto rep = verify_hopf_axioms(H);
            std::cout << rep.summary();
            if (!out_path.empty()) {
                json j;
                json checks = json::array();
                for (const auto& cc : rep.checks)
                    checks.push_back(json{{"axiom", cc.axiom}, {"pass", cc.ok}, {"at", cc.at}});
                j["checks"] = checks;
                j["all_pass"] = rep.all_ok();
                emit(out_path, j);
            }
            return rep.all_ok() ? 0 : 1;
        }
        if (*conv) {
            HopfAlgebra H = load_algebra(algebra_path);
            ParsedForm f1 = form_from_json(load_json_file(form1));
            ParsedForm f2 = form_from_json(load_json_file(form2));
            require(f1.kind == f2.kind, errc::parse_error, "convolve needs forms of equal kind");
            if (f1.kind == "linform")
                emit(out_path, linform_to_json(H.field, convolve(H, f1.lin, f2.lin)));
            else if (f1.kind == "biform")
                emit(out_path, biform_to_json(H.field, convolve(H, f1.bi, f2.bi)));
            else
                emit(out_path, linmap_to_json(H.field, convolve(H, f1.map, f2.map)));
            return 0;
        }
        if (*cocy) {
            HopfAlgebra H = load_algebra(algebra_path);
            BiForm s = load_biform(form1, H);
            auto rep = cocycle_report(H, s);
            json j;
            j["is_reg"] = rep.is_reg;
            j["is_lazy"] = rep.is_lazy;
            j["is_left_cocycle"] = rep.is_left_cocycle;
            j["is_right_cocycle"] = rep.is_right_cocycle;
            j["is_absolutely_central"] = rep.is_absolutely_central;
            if (rep.lazy_fail) j["lazy_fail_at"] = *rep.lazy_fail;
            if (rep.left_fail) j["left_cocycle_fail_at"] = *rep.left_fail;
            if (rep.right_fail) j["right_cocycle_fail_at"] = *rep.right_fail;
            if (rep.central_fail) j["central_fail_at"] = *rep.central_fail;
            std::cout << "reg: " << rep.is_reg << "  lazy: " << rep.is_lazy
                      << "  left-cocycle: " << rep.is_left_cocycle
                      << "  right-cocycle: " << rep.is_right_cocycle
                      << "  absolutely-central: " << rep.is_absolutely_central << "\n";
            if (!out_path.empty()) emit(out_path, j);
            return (rep.is_reg && rep.is_lazy && rep.is_left_cocycle) ? 0 : 1;
        }
        if (*cob) {
            HopfAlgebra H = load_algebra(algebra_path);
            emit(out_path, biform_to_json(H.field, coboundary(H, load_linform(form1, H))));
            return 0;
        }
        if (*twist) {
            HopfAlgebra H = load_algebra(algebra_path);
            emit(out_path, hopf_to_json(doi_twist(H, load_biform(form1, H))));
            return 0;
        }
        if (*gal) {
            auto H = std::make_shared<const HopfAlgebra>(load_algebra(algebra_path));
            GaloisSide gs = side == "right" ? GaloisSide::right
                                            : (side == "left" ? GaloisSide::left : GaloisSide::bi);
            ComoduleAlgebra Z = galois_object(H, load_biform(form1, *H), gs);
            if (Z.Hr)
                std::cout << "galois: " << (check_galois(Z) ? "kappa_r bijective" : "kappa_r singular")
                          << "\n";
            emit(out_path, comodule_to_json(Z));
            return 0;
        }
        if (*cot) {
            ComoduleAlgebra Z = comodule_from_json(load_json_file(left_path));
            ComoduleAlgebra W = comodule_from_json(load_json_file(right_path));
            ComoduleAlgebra C = cotensor(Z, W);
            std::cout << "cotensor dimension: " << C.dim << "\n";
            emit(out_path, comodule_to_json(C));
            return 0;
        }
        if (*fam) {
            emit(out_path, hopf_to_json(build_family(family_spec, parse_field(field_spec))));
            return 0;
        }
        if (*kac) {
            MatchedPair mp = matched_pair_from_json(load_json_file(pair_path));
            if (*kcp) {
                ParsedForm f = form_from_json(load_json_file(form1));
                auto rep = central_pairing_report(mp, f.kind == "linmap" ? f.map.m : f.bi.m);
                std::cout << (rep.ok ? "central pairing: yes" : "central pairing: no (" + rep.failed + ")")
                          << "\n";
                return rep.ok ? 0 : 1;
            }
            HopfAlgebra D = double_crossed(mp);
            if (*ksig) {
                ParsedForm f = form_from_json(load_json_file(form1));
                CentralPairing p{f.kind == "linmap" ? f.map.m : f.bi.m};
                emit(out_path, biform_to_json(D.field, sigma_from_pairing(mp, D, p)));
                return 0;
            }
            if (*klam) {
                LinForm pb = load_linform(phi_b_path, *mp.B);
                LinForm pa = load_linform(phi_a_path, *mp.A);
                CentralPairing L = lambda_map(mp, pb, pa);
                emit(out_path, linmap_to_json(D.field, LinMap{L.beta}));
                return 0;
            }
            if (*kyam) {
                BiForm sB = load_biform(form1, *mp.B);
                BiForm sA = load_biform(form2, *mp.A);
                emit(out_path, biform_to_json(D.field, yamazaki_join(mp, D, sB, sA)));
                return 0;
            }
        }
        if (*pr) {
            if (*prr) {
                auto H = std::make_shared<const HopfAlgebra>(load_algebra(algebra_path));
                emit(out_path, projrep_to_json(regular_projrep(H, load_biform(form1, *H))));
                return 0;
            }
            ProjRep X = projrep_from_json(load_json_file(rep_path));
            if (*prt) {
                ProjRep Y = projrep_from_json(load_json_file(rep2_path));
                emit(out_path, projrep_to_json(tensor_projrep(X, Y)));
                return 0;
            }
            if (*prd) {
                emit(out_path, projrep_to_json(dual_projrep(X)));
                return 0;
            }
            if (*prc) {
                bool ok = check_projrep(X);
                std::cout << (ok ? "projective representation: valid"
                                 : "projective representation: INVALID")
                          << "\n";
                return ok ? 0 : 1;
            }
        }
        if (*cr) {
            CrossedSystem cs = crossed_from_json(load_json_file(system_path));
            if (*crc) {
                std::cout << "crossed system: valid\n"; // the loader validates
                return 0;
            }
            if (*crl) {
                bool lz = is_lazy_crossed(cs);
                std::cout << (lz ? "crossed system: lazy" : "crossed system: not lazy") << "\n";
                return lz ? 0 : 1;
            }
            if (*cra) {
                BiForm w = load_biform(form1, *cs.A);
                emit(out_path, crossed_to_json(act_on_crossed(cs, w)));
                return 0;
            }
            if (*crp) {
                emit(out_path, comodule_to_json(crossed_product(cs)));
                return 0;
            }
        }
        if (*orc) {
            if (*oz) {
                HopfAlgebra H = load_algebra(algebra_path);
                Z2LReport rep = enumerate_z2L(H);
                json j;
                j["residual_dim"] = rep.residual_dim;
                j["z2l_count"] = rep.z2l.size();
                j["b2l_count"] = rep.b2l.size();
                json q;
                q["order"] = rep.quotient.order;
                q["name"] = rep.quotient.identify();
                q["element_orders"] = rep.quotient.element_orders;
                q["table"] = rep.quotient.table;
                j["quotient"] = q;
                j["timestamp_ms"] = wall_ms();
                std::cout << "H2_L: " << rep.quotient.identify() << "  |Z2_L| = " << rep.z2l.size()
                          << "  |B2_L| = " << rep.b2l.size() << "  residual dim " << rep.residual_dim
                          << "\n";
                if (!report_path.empty()) emit(report_path, j);
                return 0;
            }
            if (*ou) {
                HopfAlgebra H = load_algebra(algebra_path);
                auto units = enumerate_lazy_units(H);
                json j;
                j["count"] = units.size();
                json arr = json::array();
                for (const auto& u : units) arr.push_back(vec_to_json(u.v));
                j["units"] = arr;
                j["timestamp_ms"] = wall_ms();
                std::cout << "Reg1_L: " << units.size() << " element(s)\n";
                if (!report_path.empty()) emit(report_path, j);
                return 0;
            }
            if (*oa) {
                HopfAlgebra H = load_algebra(algebra_path);
                AlgMapSet s = enumerate_alg_maps(H);
                json j;
                j["count"] = s.maps.size();
                j["certified_complete"] = s.certified_complete;
                json arr = json::array();
                for (const auto& f : s.maps) arr.push_back(vec_to_json(f.v));
                j["maps"] = arr;
                j["timestamp_ms"] = wall_ms();
                std::cout << "Alg(A,k): " << s.maps.size() << " element(s)\n";
                if (!report_path.empty()) emit(report_path, j);
                return 0;
            }
            if (*op) {
                MatchedPair mp = matched_pair_from_json(load_json_file(pair_path));
                auto ps = brute_pairings(mp);
                json j;
                j["count"] = ps.size();
                json arr = json::array();
                for (const auto& p : ps) arr.push_back(mat_to_json(p.beta));
                j["pairings"] = arr;
                j["timestamp_ms"] = wall_ms();
                std::cout << "ZP: " << ps.size() << " element(s)\n";
                if (!report_path.empty()) emit(report_path, j);
                return 0;
            }
        }
        if (*su) {
            auto results = run_suite(level == "quick" ? SuiteLevel::quick : SuiteLevel::full, std::cout);
            if (!report_path.empty()) {
                json j = suite_report_json(results);
                j["timestamp_ms"] = wall_ms();
                emit(report_path, j);
            }
            for (const auto& r : results)
                if (!r.pass) return 1;
            return 0;
        }
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == errc::parse_error ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
