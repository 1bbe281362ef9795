#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hopflab/io.hpp"
#include "hopflab/crossed.hpp"
#include "hopflab/kac.hpp"
#include "hopflab/monomial_galois.hpp"

using namespace hopflab;

#ifndef HOPFLAB_DATA_DIR
#define HOPFLAB_DATA_DIR "data"
#endif
#ifndef HOPFLAB_CLI_PATH
#define HOPFLAB_CLI_PATH "hopflab"
#endif

namespace {
std::string data_file(const std::string& name) { return std::string(HOPFLAB_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(HOPFLAB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}
} // namespace

TEST_CASE("hopf algebra serialization round-trips bit-exactly") {
    for (const HopfAlgebra& H : {sweedler(), en_algebra(FieldSpec::Q(), 2), taft(3),
                                 group_algebra(FieldSpec::Fp(5), FiniteGroup::cyclic(2))}) {
        json j = hopf_to_json(H);
        HopfAlgebra back = hopf_from_json(j);
        REQUIRE(hopf_equal(back, H));
        REQUIRE(back.basis == H.basis);
        // canonical text is a fixed point of parse o serialize
        std::string text = canonical_dump(j);
        REQUIRE(canonical_dump(hopf_to_json(hopf_from_json(json::parse(text)))) == text);
    }
}

TEST_CASE("bundled definition files") {
    HopfAlgebra h4 = hopf_from_json(load_json_file(data_file("h4.json")));
    REQUIRE(verify_hopf_axioms(h4).all_ok());
    REQUIRE(hopf_equal(h4, sweedler()));

    HopfAlgebra e2 = hopf_from_json(load_json_file(data_file("e2.json")));
    REQUIRE(hopf_equal(e2, en_algebra(FieldSpec::Q(), 2)));

    // canonicalization fixed point on the shipped files
    std::string text = slurp(data_file("h4.json"));
    REQUIRE(canonical_dump(hopf_to_json(hopf_from_json(json::parse(text)))) == text);

    FiniteGroup z2 = group_from_json(load_json_file(data_file("z2_group.json")));
    REQUIRE(z2.order == 2);

    ParsedForm f = form_from_json(load_json_file(data_file("h4_sigma1.json")));
    REQUIRE(f.kind == "biform");
    REQUIRE(f.bi == sweedler_sigma(h4, Scalar::integer(1)));
}

TEST_CASE("malformed input is rejected") {
    REQUIRE_THROWS_AS(Scalar::parse(FieldSpec::Q(), "3//2"), error);
    json bad = hopf_to_json(sweedler());
    bad["mult"][0][0][0] = "3//2";
    try {
        hopf_from_json(bad);
        FAIL("expected ParseError");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::parse_error);
    }
    // axiom violations are caught on load
    json broken = hopf_to_json(sweedler());
    broken["antipode"][2][2] = "1";
    try {
        hopf_from_json(broken);
        FAIL("expected AxiomFailure");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::axiom_failure);
    }
}

TEST_CASE("form and comodule serialization round-trips") {
    HopfAlgebra H = sweedler();
    BiForm s = sweedler_sigma(H, Scalar::rational(5, 3));
    json j = biform_to_json(H.field, s);
    REQUIRE(form_from_json(j).bi == s);

    auto Hp = std::make_shared<const HopfAlgebra>(H);
    ComoduleAlgebra Z = galois_object(Hp, sweedler_sigma(H, Scalar::integer(1)), GaloisSide::bi);
    ComoduleAlgebra back = comodule_from_json(comodule_to_json(Z));
    REQUIRE(back.dim == Z.dim);
    for (int i = 0; i < Z.dim; ++i)
        for (int jj = 0; jj < Z.dim; ++jj)
            REQUIRE(back.mul(back.basis_el(i), back.basis_el(jj)) == Z.mul(Z.basis_el(i), Z.basis_el(jj)));

    MatchedPair mp = trivial_matched_pair(Hp, Hp);
    MatchedPair mback = matched_pair_from_json(matched_pair_to_json(mp));
    REQUIRE(mback.trivial_actions());

    CrossedSystem cs = CrossedSystem::scalar(Hp, sweedler_sigma(H, Scalar::integer(2)));
    CrossedSystem cback = crossed_from_json(crossed_to_json(cs));
    REQUIRE(cback.sig == cs.sig);
}

TEST_CASE("cli end-to-end flows") {
    std::string h4 = data_file("h4.json");
    std::string sig = data_file("h4_sigma1.json");
    REQUIRE(run_cli("verify --algebra " + h4) == 0);
    REQUIRE(run_cli("cocycle-check --algebra " + h4 + " --form " + sig) == 0);
    REQUIRE(run_cli("twist --algebra " + h4 + " --form " + sig + " --out /tmp/hopflab_t.json") == 0);
    REQUIRE(run_cli("galois --algebra " + h4 + " --form " + sig + " --side bi --out /tmp/hopflab_g.json") ==
            0);
    REQUIRE(run_cli("cotensor --left /tmp/hopflab_g.json --right /tmp/hopflab_g.json "
                    "--out /tmp/hopflab_c.json") == 0);
    REQUIRE(run_cli("family --family group:" + data_file("z2_group.json") +
                    " --field F5 --out /tmp/hopflab_z2.json") == 0);
    REQUIRE(run_cli("oracle z2l --algebra /tmp/hopflab_z2.json --report /tmp/hopflab_r.json") == 0);
    json rep = load_json_file("/tmp/hopflab_r.json");
    REQUIRE(rep["quotient"]["name"] == "Z2");
    REQUIRE(run_cli("projrep regular --algebra " + h4 + " --form " + sig +
                    " --out /tmp/hopflab_x.json") == 0);
    REQUIRE(run_cli("projrep dual --rep /tmp/hopflab_x.json --out /tmp/hopflab_xd.json") == 0);
    REQUIRE(run_cli("projrep check --rep /tmp/hopflab_xd.json") == 0);

    // usage errors exit 2, failures exit 1
    REQUIRE(run_cli("no-such-command") == 2);
    REQUIRE(run_cli("verify") == 2);
    REQUIRE(run_cli("verify --algebra /nonexistent.json") == 2);

    // deterministic outputs: identical runs produce identical bytes
    REQUIRE(run_cli("family --family en:2 --out /tmp/hopflab_a.json") == 0);
    REQUIRE(run_cli("family --family en:2 --out /tmp/hopflab_b.json") == 0);
    REQUIRE(slurp("/tmp/hopflab_a.json") == slurp("/tmp/hopflab_b.json"));
}

TEST_CASE("quick suite level passes fast") {
    REQUIRE(run_cli("suite --level quick") == 0);
}

TEST_CASE("oracle reports are deterministic modulo the timestamp field") {
    REQUIRE(run_cli("family --family sweedler --field F3 --out /tmp/hopflab_h4f3.json") == 0);
    REQUIRE(run_cli("oracle z2l --algebra /tmp/hopflab_h4f3.json --report /tmp/hopflab_r1.json") == 0);
    REQUIRE(run_cli("oracle z2l --algebra /tmp/hopflab_h4f3.json --report /tmp/hopflab_r2.json") == 0);
    json r1 = load_json_file("/tmp/hopflab_r1.json");
    json r2 = load_json_file("/tmp/hopflab_r2.json");
    r1.erase("timestamp_ms");
    r2.erase("timestamp_ms");
    REQUIRE(canonical_dump(r1) == canonical_dump(r2));
}

TEST_CASE("cli form arithmetic and kac flows") {
    std::string h4 = data_file("h4.json");
    std::string sig = data_file("h4_sigma1.json");
    // convolving sigma_1 with itself gives sigma_2
    REQUIRE(run_cli("convolve --algebra " + h4 + " --form " + sig + " --form2 " + sig +
                    " --out /tmp/hopflab_s2.json") == 0);
    ParsedForm s2 = form_from_json(load_json_file("/tmp/hopflab_s2.json"));
    REQUIRE(s2.bi == sweedler_sigma(sweedler(), Scalar::integer(2)));
    // coboundary of a linear form
    {
        json mu = linform_to_json(FieldSpec::Q(),
                                  LinForm{{Scalar::one(FieldSpec::Q()), Scalar::integer(2),
                                           Scalar::integer(1), Scalar::integer(0)}});
        write_file("/tmp/hopflab_mu.json", canonical_dump(mu));
        REQUIRE(run_cli("coboundary --algebra " + h4 + " --form /tmp/hopflab_mu.json "
                        "--out /tmp/hopflab_dmu.json") == 0);
        ParsedForm dmu = form_from_json(load_json_file("/tmp/hopflab_dmu.json"));
        REQUIRE(is_left_cocycle(sweedler(), dmu.bi));
    }
    // kac yamazaki on the trivial matched pair file
    {
        auto H4p = std::make_shared<const HopfAlgebra>(sweedler());
        MatchedPair mp = trivial_matched_pair(H4p, H4p);
        write_file("/tmp/hopflab_mp.json", canonical_dump(matched_pair_to_json(mp)));
        REQUIRE(run_cli("kac yamazaki --pair /tmp/hopflab_mp.json --form " + sig + " --form2 " + sig +
                        " --out /tmp/hopflab_join.json") == 0);
        ParsedForm join = form_from_json(load_json_file("/tmp/hopflab_join.json"));
        REQUIRE(join.bi.m.rows == 16);
        HopfAlgebra D = double_crossed(mp);
        REQUIRE(is_lazy2(D, join.bi));
        // check-pairing accepts the trivial pairing
        CentralPairing triv{Mat(4, 4, FieldSpec::Q())};
        for (int b = 0; b < 4; ++b)
            for (int a = 0; a < 4; ++a) triv.beta.at(b, a) = H4p->counit[b] * H4p->counit[a];
        write_file("/tmp/hopflab_beta.json", canonical_dump(linmap_to_json(FieldSpec::Q(), LinMap{triv.beta})));
        REQUIRE(run_cli("kac check-pairing --pair /tmp/hopflab_mp.json --form /tmp/hopflab_beta.json") == 0);
        REQUIRE(run_cli("kac sigma --pair /tmp/hopflab_mp.json --form /tmp/hopflab_beta.json "
                        "--out /tmp/hopflab_sb.json") == 0);
    }
    // crossed flows
    {
        auto H4p = std::make_shared<const HopfAlgebra>(sweedler());
        CrossedSystem cs = CrossedSystem::scalar(H4p, sweedler_sigma(*H4p, Scalar::integer(1)));
        write_file("/tmp/hopflab_cs.json", canonical_dump(crossed_to_json(cs)));
        REQUIRE(run_cli("crossed check --system /tmp/hopflab_cs.json") == 0);
        REQUIRE(run_cli("crossed lazy --system /tmp/hopflab_cs.json") == 0);
        REQUIRE(run_cli("crossed act --system /tmp/hopflab_cs.json --form " + sig +
                        " --out /tmp/hopflab_cs2.json") == 0);
        REQUIRE(run_cli("crossed product --system /tmp/hopflab_cs.json --out /tmp/hopflab_cp.json") == 0);
    }
}
