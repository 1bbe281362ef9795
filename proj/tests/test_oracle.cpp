#include <catch2/catch_amalgamated.hpp>

#include "hopflab/oracle.hpp"

using namespace hopflab;

TEST_CASE("lazy unit enumeration") {
    // H4 over F_3 and F_5: only epsilon
    for (long p : {3L, 5L}) {
        HopfAlgebra H4 = sweedler(FieldSpec::Fp(p));
        auto units = enumerate_lazy_units(H4);
        REQUIRE(units.size() == 1);
        REQUIRE(units[0] == conv_unit(H4));
    }
    // k[Z2] over F_5: mu(g) ranges over F_5^., 4 elements
    HopfAlgebra KZ2 = group_algebra(FieldSpec::Fp(5), FiniteGroup::cyclic(2));
    REQUIRE(enumerate_lazy_units(KZ2).size() == 4);
}

TEST_CASE("Z2_L enumeration for H4 over F_3 matches Example 2.1") {
    HopfAlgebra H4 = sweedler(FieldSpec::Fp(3));
    Z2LReport rep = enumerate_z2L(H4);
    REQUIRE(rep.residual_dim <= 4);
    REQUIRE(rep.z2l.size() == 3); // the sigma_t family, t in F_3
    REQUIRE(rep.b2l.size() == 1); // trivial coboundaries only
    REQUIRE(rep.quotient.order == 3);
    REQUIRE(rep.quotient.identify() == "Z3");
    // every member passes the lazy-module predicates
    for (const auto& s : rep.z2l) {
        REQUIRE(is_lazy2(H4, s));
        REQUIRE(is_left_cocycle(H4, s));
        REQUIRE(is_right_cocycle(H4, s));
        REQUIRE(is_reg2(H4, s));
    }
    // the family is exactly sigma_t over F_3
    for (long t = 0; t < 3; ++t) {
        BiForm s = sweedler_sigma(H4, Scalar::fp(3, t));
        bool found = false;
        for (const auto& z : rep.z2l)
            if (z == s) found = true;
        REQUIRE(found);
    }
}

TEST_CASE("Z2_L for group algebras matches classical group cohomology") {
    // k[Z2] over F_5: H^2 = F_5^./(F_5^.)^2 = Z2
    HopfAlgebra KZ2 = group_algebra(FieldSpec::Fp(5), FiniteGroup::cyclic(2));
    Z2LReport rep = enumerate_z2L(KZ2);
    REQUIRE(rep.z2l.size() == 4);
    REQUIRE(rep.b2l.size() == 2);
    REQUIRE(rep.quotient.identify() == "Z2");

    // k[Z2] over F_3: also Z2
    HopfAlgebra KZ2b = group_algebra(FieldSpec::Fp(3), FiniteGroup::cyclic(2));
    REQUIRE(enumerate_z2L(KZ2b).quotient.identify() == "Z2");
}

TEST_CASE("algebra map enumeration") {
    HopfAlgebra H4 = sweedler();
    AlgMapSet s = enumerate_alg_maps(H4);
    REQUIRE(s.certified_complete);
    REQUIRE(s.maps.size() == 2); // epsilon and 1* - g*... via the monomial/en metadata
    bool has_eps = false, has_ghat = false;
    for (const auto& f : s.maps) {
        if (f == conv_unit(H4)) has_eps = true;
        if (f == en_ghat(H4)) has_ghat = true;
    }
    REQUIRE(has_eps);
    REQUIRE(has_ghat);

    HopfAlgebra E2 = en_algebra(FieldSpec::Q(), 2);
    REQUIRE(enumerate_alg_maps(E2).maps.size() == 2);

    // Alg(k[G], k) for abelian G with enough roots: |G| characters
    HopfAlgebra KZ4 = group_algebra(FieldSpec::cyclotomic(4), FiniteGroup::cyclic(4));
    REQUIRE(enumerate_alg_maps(KZ4).maps.size() == 4);

    // tensor products multiply
    HopfAlgebra T = tensor_hopf(H4, H4);
    REQUIRE(enumerate_alg_maps_tensor(T, H4, H4).maps.size() == 4);

    // raw algebras carry no generator data
    HopfAlgebra raw = sweedler();
    raw.gens = GenData{};
    REQUIRE_THROWS_AS(enumerate_alg_maps(raw), error);
}

TEST_CASE("pairing enumeration") {
    // ZP(k[Z2] (x) k[Z2]) over F_5: the trivial and the sign pairing
    auto KZ2 = std::make_shared<const HopfAlgebra>(group_algebra(FieldSpec::Fp(5), FiniteGroup::cyclic(2)));
    MatchedPair mp = trivial_matched_pair(KZ2, KZ2);
    auto pairings = brute_pairings(mp);
    REQUIRE(pairings.size() == 2);
    // the trivial pairing is present
    bool has_trivial = false;
    for (const auto& p : pairings) {
        bool triv = true;
        for (int b = 0; b < 2; ++b)
            for (int a = 0; a < 2; ++a)
                if (p.beta.at(b, a) != KZ2->counit[b] * KZ2->counit[a]) triv = false;
        if (triv) has_trivial = true;
    }
    REQUIRE(has_trivial);
    // ZP(A (x) B) is abelian under convolution: with 2 elements automatic;
    // verify closure anyway
    for (const auto& p : pairings)
        for (const auto& q : pairings) {
            Mat prod(2, 2, FieldSpec::Fp(5));
            for (int b = 0; b < 2; ++b)
                for (int a = 0; a < 2; ++a) {
                    Scalar acc = Scalar::zero(FieldSpec::Fp(5));
                    for (const auto& db : KZ2->comult[b])
                        for (const auto& da : KZ2->comult[a])
                            acc = acc + db.c * da.c * p.beta.at(db.left, da.left) *
                                      q.beta.at(db.right, da.right);
                    prod.at(b, a) = acc;
                }
            bool found = false;
            for (const auto& r : pairings)
                if (r.beta == prod) found = true;
            REQUIRE(found);
        }
}

TEST_CASE("Schur-Yamazaki order identity over F_5") {
    // |H2_L(k[Z2] (x) k[Z2])| = |H2_L|^2 * |ZP| = 2*2*2 = 8
    FieldSpec F5 = FieldSpec::Fp(5);
    FiniteGroup Z2 = FiniteGroup::cyclic(2);
    HopfAlgebra KV4 = group_algebra(F5, FiniteGroup::direct_product(Z2, Z2));
    Z2LReport rep = enumerate_z2L(KV4);
    HopfAlgebra KZ2 = group_algebra(F5, Z2);
    Z2LReport factor = enumerate_z2L(KZ2);
    auto KZ2p = std::make_shared<const HopfAlgebra>(KZ2);
    auto pairings = brute_pairings(trivial_matched_pair(KZ2p, KZ2p));
    REQUIRE(rep.quotient.order ==
            factor.quotient.order * factor.quotient.order * int(pairings.size()));
    REQUIRE(rep.quotient.order == 8);
}

TEST_CASE("search space overflow is reported with the residual dimension") {
    // A(2,2,4,1,q) over F5: dim 8, lazy residual dimension 17 -- past the
    // enumerable range, rejected with a diagnostic
    FieldSpec F5 = FieldSpec::Fp(5);
    FiniteGroup Z4 = FiniteGroup::cyclic(4);
    std::vector<Scalar> chi(4);
    for (int j = 0; j < 4; ++j) chi[j] = Scalar::fp(5, 2).pow(j);
    GroupDatum datum{Z4, 2, chi, Scalar::zero(F5)};
    HopfAlgebra A = monomial_hopf(F5, datum);
    try {
        enumerate_z2L(A);
        FAIL("expected SearchSpaceTooLarge");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::search_space_too_large);
        REQUIRE(std::string(e.what()).find("17") != std::string::npos);
    }
}

TEST_CASE("taft H_{2,-1} over F3 realizes the d=n=N case of the cyclic formula") {
    // A(C[2,2,2,1,-1]) = H4; H^2_L = k realizes as the additive group Z3 over F3
    FieldSpec F3 = FieldSpec::Fp(3);
    FiniteGroup Z2 = FiniteGroup::cyclic(2);
    std::vector<Scalar> chi = {Scalar::fp(3, 1), Scalar::fp(3, 2)};
    GroupDatum datum{Z2, 1, chi, Scalar::zero(F3)};
    HopfAlgebra A = monomial_hopf(F3, datum);
    REQUIRE(A.dim == 4);
    REQUIRE(enumerate_z2L(A).quotient.identify() == "Z3");
}
