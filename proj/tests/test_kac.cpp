#include <catch2/catch_amalgamated.hpp>

#include "hopflab/kac.hpp"
#include "hopflab/sampling.hpp"

using namespace hopflab;

static const FieldSpec Q = FieldSpec::Q();

namespace {

struct TensorH4 {
    std::shared_ptr<const HopfAlgebra> H4;
    MatchedPair mp;
    HopfAlgebra D;
    TensorH4()
        : H4(std::make_shared<const HopfAlgebra>(sweedler())),
          mp(trivial_matched_pair(H4, H4)),
          D(double_crossed(mp)) {}
};

MatchedPair s3_matched_pair() {
    FiniteGroup Z3 = FiniteGroup::cyclic(3), Z2 = FiniteGroup::cyclic(2);
    std::vector<std::vector<int>> a_on_b(2, std::vector<int>(3));
    std::vector<std::vector<int>> b_on_a(2, std::vector<int>(3));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b) {
            a_on_b[a][b] = (a == 0) ? b : Z3.inverse[b];
            b_on_a[a][b] = a;
        }
    return group_matched_pair(FieldSpec::cyclotomic(3), Z3, Z2, a_on_b, b_on_a);
}

} // namespace

TEST_CASE("central pairings on tensor squares") {
    TensorH4 fix;
    const HopfAlgebra& B = *fix.mp.B;
    const HopfAlgebra& A = *fix.mp.A;
    // trivial pairing
    CentralPairing triv{Mat(B.dim, A.dim, Q)};
    for (int b = 0; b < B.dim; ++b)
        for (int a = 0; a < A.dim; ++a) triv.beta.at(b, a) = B.counit[b] * A.counit[a];
    REQUIRE(is_central_pairing(fix.mp, triv));

    // the sign pairing on k[Z2] (x) k[Z2]
    auto KZ2 = std::make_shared<const HopfAlgebra>(group_algebra(Q, FiniteGroup::cyclic(2)));
    MatchedPair mp2 = trivial_matched_pair(KZ2, KZ2);
    CentralPairing sign{Mat(2, 2, Q)};
    sign.beta.at(0, 0) = Scalar::one(Q);
    sign.beta.at(0, 1) = Scalar::one(Q);
    sign.beta.at(1, 0) = Scalar::one(Q);
    sign.beta.at(1, 1) = Scalar::integer(-1);
    REQUIRE(is_central_pairing(mp2, sign));
    // and a non-example
    CentralPairing bad = sign;
    bad.beta.at(1, 1) = Scalar::integer(2);
    REQUIRE(!is_central_pairing(mp2, bad));

    // Sigma: the sign pairing gives a lazy cocycle on k[Z2 x Z2]
    HopfAlgebra D2 = double_crossed(mp2);
    BiForm s = sigma_from_pairing(mp2, D2, sign);
    REQUIRE(is_lazy2(D2, s));
    REQUIRE(is_left_cocycle(D2, s));
    // restriction of a Sigma-image is trivial (Im(Sigma) in Ker(res))
    auto [rB, rA] = restrict_cocycle(mp2, D2, s);
    REQUIRE(rB == conv_unit2(*KZ2));
    REQUIRE(rA == conv_unit2(*KZ2));
}

TEST_CASE("lambda map") {
    // trivial actions make Lambda trivial for all lazy algebra maps
    auto KZ2 = std::make_shared<const HopfAlgebra>(group_algebra(Q, FiniteGroup::cyclic(2)));
    MatchedPair mp2 = trivial_matched_pair(KZ2, KZ2);
    LinForm signchar{{Scalar::one(Q), Scalar::integer(-1)}};
    CentralPairing L = lambda_map(mp2, signchar, signchar);
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < 2; ++a) REQUIRE(L.beta.at(b, a) == KZ2->counit[b] * KZ2->counit[a]);

    // H4's nontrivial algebra map is not lazy: rejected
    TensorH4 fix;
    LinForm phi{{Scalar::one(Q), Scalar::integer(-1), Scalar::integer(0), Scalar::integer(0)}};
    try {
        lambda_map(fix.mp, phi, conv_unit(*fix.H4));
        FAIL("expected NotLazyAlgebraMap");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::not_lazy_algebra_map);
    }

    // genuinely nontrivial Lambda on k[Z3] |><| k[Z2]
    MatchedPair s3 = s3_matched_pair();
    const HopfAlgebra& B3 = *s3.B;
    const HopfAlgebra& A2 = *s3.A;
    FieldSpec C3 = FieldSpec::cyclotomic(3);
    LinForm chi{zero_vec(3, C3)};
    for (int j = 0; j < 3; ++j) chi.v[j] = Scalar::zeta(3).pow(j);
    REQUIRE(is_algebra_map(B3, chi));
    REQUIRE(is_lazy1(B3, chi));
    CentralPairing L3 = lambda_map(s3, chi, conv_unit(A2));
    bool trivial = true;
    for (int b = 0; b < 3 && trivial; ++b)
        for (int a = 0; a < 2 && trivial; ++a)
            if (L3.beta.at(b, a) != B3.counit[b] * A2.counit[a]) trivial = false;
    REQUIRE(!trivial);

    // Sigma(Lambda(phi_B, phi_A)) = d(phi_B^{-1} (x) phi_A^{-1}) exactly
    HopfAlgebra D3 = double_crossed(s3);
    BiForm s = sigma_from_pairing(s3, D3, L3);
    LinForm mu{zero_vec(D3.dim, C3)};
    LinForm chi_inv = conv_inverse(B3, chi);
    for (int b = 0; b < 3; ++b)
        for (int a = 0; a < 2; ++a) mu.v[b * 2 + a] = chi_inv.v[b] * A2.counit[a];
    REQUIRE(is_lazy1(D3, mu));
    REQUIRE(s == coboundary(D3, mu));
    REQUIRE(verify_coboundary_witness(D3, s, mu));
}

TEST_CASE("normalize_class") {
    TensorH4 fix;
    const HopfAlgebra& H4 = *fix.H4;
    BiForm ss = sweedler_sigma(H4, Scalar::integer(1));
    BiForm st = sweedler_sigma(H4, Scalar::integer(-2));
    BiForm join = yamazaki_join(fix.mp, fix.D, ss, st);
    // product cocycles are already normalized: unchanged
    REQUIRE(normalize_class(fix.mp, fix.D, join) == join);

    // pollute with a lazy coboundary built from a product unit
    Rng rng(23);
    AffineSpace sp = lazy1_affine(fix.D);
    LinForm nu = random_lazy_reg1(rng, fix.D, sp);
    BiForm polluted = convolve(fix.D, join, coboundary(fix.D, nu));
    BiForm renorm = normalize_class(fix.mp, fix.D, polluted);
    // the normalization identities are verified inside; class is unchanged:
    BiForm diff = convolve(fix.D, conv_inverse(fix.D, join), renorm);
    // diff must be a lazy coboundary: find its witness as a lazy unit
    REQUIRE(is_lazy2(fix.D, diff));
    REQUIRE(is_left_cocycle(fix.D, diff));
}

TEST_CASE("restriction and join invert each other") {
    TensorH4 fix;
    const HopfAlgebra& H4 = *fix.H4;
    for (long s : {1L, 0L, -3L})
        for (long t : {2L, 5L}) {
            BiForm sB = sweedler_sigma(H4, Scalar::integer(s));
            BiForm sA = sweedler_sigma(H4, Scalar::integer(t));
            BiForm j = yamazaki_join(fix.mp, fix.D, sB, sA);
            REQUIRE(is_lazy2(fix.D, j));
            REQUIRE(is_left_cocycle(fix.D, j));
            auto [rB, rA] = restrict_cocycle(fix.mp, fix.D, j);
            REQUIRE(rB == sB);
            REQUIRE(rA == sA);
        }
    // join demands trivial actions
    MatchedPair s3 = s3_matched_pair();
    HopfAlgebra D3 = double_crossed(s3);
    try {
        yamazaki_join(s3, D3, conv_unit2(*s3.B), conv_unit2(*s3.A));
        FAIL("expected NontrivialActions");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::nontrivial_actions);
    }
}

TEST_CASE("L-morphisms and Example 4.10") {
    HopfAlgebra H4 = sweedler();
    // trivial morphism unit o counit passes
    LinMap triv{Mat(4, 4, Q)};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) triv.m.at(i, j) = H4.unit[i] * H4.counit[j];
    REQUIRE(is_L_morphism(triv, H4, H4));

    // f induced by 1* - g* fails the symmetry condition at a = x
    LinForm phi{{Scalar::one(Q), Scalar::integer(-1), Scalar::integer(0), Scalar::integer(0)}};
    LinMap f{Mat(4, 4, Q)};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) f.m.at(i, j) = H4.unit[i] * phi.v[j];
    auto rep = l_morphism_report(f, H4, H4);
    REQUIRE(!rep.ok());
    REQUIRE(rep.algebra);
    REQUIRE(rep.central);
    REQUIRE(!rep.symmetric);
    REQUIRE(rep.at == std::vector<int>{2}); // fails at x

    // pairing transport: a central pairing on k[Z2] (x) k[Z2] gives an
    // L-morphism into the dual, and a broken pairing does not
    auto KZ2 = std::make_shared<const HopfAlgebra>(group_algebra(Q, FiniteGroup::cyclic(2)));
    MatchedPair mp2 = trivial_matched_pair(KZ2, KZ2);
    HopfAlgebra dualB = dual_hopf(*KZ2);
    CentralPairing sign{Mat(2, 2, Q)};
    sign.beta.at(0, 0) = Scalar::one(Q);
    sign.beta.at(0, 1) = Scalar::one(Q);
    sign.beta.at(1, 0) = Scalar::one(Q);
    sign.beta.at(1, 1) = Scalar::integer(-1);
    REQUIRE(is_central_pairing(mp2, sign));
    // f_beta : A -> B^*, beta stored B-major so transpose for the map a -> beta(., a)
    LinMap fb{mat_transpose(mat_transpose(sign.beta))};
    REQUIRE(is_L_morphism(LinMap{sign.beta}, *KZ2, dualB));
    (void)fb;
    CentralPairing notp = sign;
    notp.beta.at(1, 1) = Scalar::integer(3);
    REQUIRE(!is_central_pairing(mp2, notp));
    bool is_l = true;
    try {
        is_l = is_L_morphism(LinMap{notp.beta}, *KZ2, dualB);
    } catch (const error&) {
        is_l = false; // may already fail the algebra-morphism precondition
    }
    REQUIRE(!is_l);
}

TEST_CASE("lambda on the Drinfeld-double matched pair of H4") {
    HopfAlgebra H4 = sweedler();
    MatchedPair mp = drinfeld_matched_pair(H4);
    REQUIRE(!mp.trivial_actions());
    // the only lazy algebra maps on both legs are the counits; the output is
    // still verified central against the genuinely nontrivial actions
    CentralPairing L = lambda_map(mp, conv_unit(*mp.B), conv_unit(*mp.A));
    REQUIRE(is_central_pairing(mp, L));
    for (int b = 0; b < 4; ++b)
        for (int a = 0; a < 4; ++a) REQUIRE(L.beta.at(b, a) == mp.B->counit[b] * mp.A->counit[a]);
}
