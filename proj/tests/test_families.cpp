#include <catch2/catch_amalgamated.hpp>

#include "hopflab/monomial_galois.hpp"
#include "hopflab/sampling.hpp"

using namespace hopflab;

static const FieldSpec Q = FieldSpec::Q();

TEST_CASE("bosonization of Z2 |x Lambda W") {
    for (int n : {1, 2}) {
        SuperSpace S = SuperSpace::z2(Q, n);
        HopfAlgebra A = bosonization(Q, S);
        REQUIRE(A.dim == 2 << n);
        REQUIRE(verify_hopf_axioms(A).all_ok());
        HopfAlgebra En = en_algebra(Q, n);
        LinMap iota = en_to_boson_iso(En, A);
        REQUIRE(is_hopf_morphism(iota, En, A));
        REQUIRE(mat_inverse(iota.m).has_value());
    }
}

TEST_CASE("exponential twists") {
    SuperSpace S = SuperSpace::z2(Q, 2);
    HopfAlgebra A = bosonization(Q, S);

    // r = 0 gives the trivial twist
    Mat zero(2, 2, Q);
    ExpTwist t0 = exp_twist_cocycle(Q, S, zero);
    REQUIRE(t0.sigma == conv_unit2(t0.dual));

    Rng rng(19);
    for (int k = 0; k < 3; ++k) {
        Mat r = random_symmetric(rng, Q, 2);
        ExpTwist tw = exp_twist_cocycle(Q, S, r);
        REQUIRE(is_lazy2(tw.dual, tw.sigma));
        REQUIRE(is_left_cocycle(tw.dual, tw.sigma));
    }

    // the assignment r -> J is an exact group morphism into Z^2_L
    Mat r1 = random_symmetric(rng, Q, 2), r2 = random_symmetric(rng, Q, 2);
    Mat r12(2, 2, Q);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r12.at(i, j) = r1.at(i, j) + r2.at(i, j);
    ExpTwist a = exp_twist_cocycle(Q, S, r1), b = exp_twist_cocycle(Q, S, r2),
             c = exp_twist_cocycle(Q, S, r12);
    REQUIRE(convolve(a.dual, a.sigma, b.sigma) == c.sigma);

    // non-symmetric and non-invariant inputs are rejected
    Mat bad(2, 2, Q);
    bad.at(0, 1) = Scalar::integer(1);
    REQUIRE_THROWS_AS(exp_twist_cocycle(Q, S, bad), error);
}

TEST_CASE("exp twist on E(1) lands in the sigma_t family with constant -1") {
    HopfAlgebra E1 = en_algebra(Q, 1);
    for (long t : {1L, 2L, -3L}) {
        Mat r(1, 1, Q);
        r.at(0, 0) = Scalar::integer(t);
        REQUIRE(en_exp_twist(E1, r) == sweedler_sigma(E1, Scalar::integer(-t)));
    }
}

TEST_CASE("trivial matched pair gives the tensor Hopf algebra") {
    auto H4 = std::make_shared<const HopfAlgebra>(sweedler());
    MatchedPair mp = trivial_matched_pair(H4, H4);
    REQUIRE(check_matched_pair(mp).ok);
    REQUIRE(mp.trivial_actions());
    REQUIRE(hopf_equal(double_crossed(mp), tensor_hopf(*H4, *H4)));
}

TEST_CASE("perturbed matched pair is rejected") {
    auto H4 = std::make_shared<const HopfAlgebra>(sweedler());
    MatchedPair mp = trivial_matched_pair(H4, H4);
    mp.act_l[1][2] = {{2, Scalar::integer(-1)}}; // flip a sign in g -> x
    REQUIRE(!check_matched_pair(mp).ok);
    REQUIRE_THROWS_AS(double_crossed(mp), error);
}

TEST_CASE("group matched pair k[Z3] |><| k[Z2] builds k[S3]") {
    FiniteGroup Z3 = FiniteGroup::cyclic(3), Z2 = FiniteGroup::cyclic(2);
    // Z2 acts on Z3 by inversion; the back-action is trivial
    std::vector<std::vector<int>> a_on_b(2, std::vector<int>(3));
    std::vector<std::vector<int>> b_on_a(2, std::vector<int>(3));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b) {
            a_on_b[a][b] = (a == 0) ? b : Z3.inverse[b];
            b_on_a[a][b] = a;
        }
    MatchedPair mp = group_matched_pair(Q, Z3, Z2, a_on_b, b_on_a);
    REQUIRE(check_matched_pair(mp).ok);
    REQUIRE(!mp.trivial_actions());
    HopfAlgebra D = double_crossed(mp);
    REQUIRE(D.dim == 6);
    REQUIRE(verify_hopf_axioms(D).all_ok());
    // non-commutative (it is k[S3]) and cocommutative
    bool commutative = true;
    for (int i = 0; i < 6 && commutative; ++i)
        for (int j = 0; j < 6 && commutative; ++j)
            if (hopf_mul(D, basis_vec(D, i), basis_vec(D, j)) !=
                hopf_mul(D, basis_vec(D, j), basis_vec(D, i)))
                commutative = false;
    REQUIRE(!commutative);
}

TEST_CASE("drinfeld double") {
    // abelian case: D(k[Z2]) = k[Z2 x Z2]
    HopfAlgebra KZ2 = group_algebra(Q, FiniteGroup::cyclic(2));
    HopfAlgebra D2 = drinfeld_double(KZ2);
    REQUIRE(D2.dim == 4);
    REQUIRE(verify_hopf_axioms(D2).all_ok());
    MatchedPair mp2 = drinfeld_matched_pair(KZ2);
    REQUIRE(mp2.trivial_actions());

    HopfAlgebra H4 = sweedler();
    MatchedPair mp = drinfeld_matched_pair(H4);
    REQUIRE(check_matched_pair(mp).ok);
    REQUIRE(!mp.trivial_actions());
    HopfAlgebra D = double_crossed(mp);
    REQUIRE(D.dim == 16);
    REQUIRE(verify_hopf_axioms(D).all_ok());

    // A and (A*)^cop embed as Hopf subalgebras: f -> f >< 1 and a -> 1 >< a
    const HopfAlgebra& B = *mp.B;
    LinMap embA{Mat(16, 4, Q)};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (!B.unit[b].is_zero()) embA.m.at(b * 4 + a, a) = B.unit[b];
    REQUIRE(is_hopf_morphism(embA, H4, D));
    LinMap embB{Mat(16, 4, Q)};
    for (int b = 0; b < 4; ++b)
        for (int a = 0; a < 4; ++a)
            if (!H4.unit[a].is_zero()) embB.m.at(b * 4 + a, b) = H4.unit[a];
    REQUIRE(is_hopf_morphism(embB, B, D));
    REQUIRE(mat_rank(embA.m) == 4);
    REQUIRE(mat_rank(embB.m) == 4);
}

TEST_CASE("group cocycle machinery") {
    FiniteGroup V4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    int g = 2; // the element (1,0): index 1*2+0
    Mat triv(4, 4, Q);
    for (auto& s : triv.a) s = Scalar::one(Q);
    REQUIRE(is_group_2cocycle(V4, triv));
    REQUIRE(z2Lg_membership(V4, g, triv));

    // alternating bicharacter sigma((a,b),(a',b')) = (-1)^{b a'}
    Mat alt(4, 4, Q);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int b = i % 2, a2 = j / 2;
            alt.at(i, j) = Scalar::integer(b * a2 % 2 ? -1 : 1);
        }
    REQUIRE(is_group_2cocycle(V4, alt));
    // fails the Z^2_g symmetry condition sigma(g,h) = sigma(h,g)
    REQUIRE(!z2Lg_membership(V4, g, alt));

    // pullbacks along the quotient projection are members and normalize to 1 on g
    std::vector<int> proj;
    FiniteGroup quotient = V4.quotient_by_central(g, &proj);
    REQUIRE(quotient.order == 2);
    Mat qc(2, 2, Q);
    for (auto& s : qc.a) s = Scalar::one(Q);
    qc.at(1, 1) = Scalar::integer(-1); // the nontrivial cocycle class rep on Z2
    REQUIRE(is_group_2cocycle(quotient, qc));
    Mat pulled = theta_map(V4, g, quotient, qc, proj);
    REQUIRE(z2Lg_membership(V4, g, pulled));
    for (int h = 0; h < 4; ++h) REQUIRE(pulled.at(g, h).is_one());
}

TEST_CASE("monomial galois objects") {
    auto T = std::make_shared<const HopfAlgebra>(taft(3));
    const MonomialMeta& meta = *T->gens.monomial;
    const FieldSpec F = T->field;
    Mat triv(3, 3, F);
    for (auto& s : triv.a) s = Scalar::one(F);
    std::vector<int> id{0, 1, 2};

    // (trivial, id, 0) reproduces A(G) itself
    ComoduleAlgebra Z0 = galois_monomial(T, triv, id, Scalar::zero(F));
    for (int i = 0; i < T->dim; ++i)
        for (int j = 0; j < T->dim; ++j) {
            Vec lhs = Z0.mul(Z0.basis_el(i), Z0.basis_el(j));
            Vec rhs = hopf_mul(*T, basis_vec(*T, i), basis_vec(*T, j));
            REQUIRE(lhs == rhs);
        }

    // a = 1: X^3 = T_{g^3} = 1
    ComoduleAlgebra Z1 = galois_monomial(T, triv, id, Scalar::one(F));
    Vec X = Z1.basis_el(meta.index(0, 1));
    Vec X3 = Z1.mul(Z1.mul(X, X), X);
    REQUIRE(X3 == Z1.unit);
    REQUIRE(is_bicleft_monomial(GroupDatum{meta.G, meta.g, meta.chi, meta.mu}, triv, id));

    // the cleft cocycle extracted through Phi is lazy, with invariant a
    BiForm sig = cocycle_from_cleft(Z1, monomial_cleft_phi(*T));
    REQUIRE(is_lazy2(*T, sig));
    REQUIRE(is_left_cocycle(*T, sig));
    REQUIRE(monomial_twisted_power(*T, sig) == vec_scale(Scalar::one(F), T->unit));
    REQUIRE(monomial_invariant(*T, sig).is_one());
}

TEST_CASE("non-type-I monomial data reject u != id and a != 0") {
    // G = Z4, g = z^2, chi(z) = i: d = 2, not type I (chi^2 != 1)
    FieldSpec F = FieldSpec::cyclotomic(4);
    FiniteGroup Z4 = FiniteGroup::cyclic(4);
    std::vector<Scalar> chi(4);
    for (int j = 0; j < 4; ++j) chi[j] = Scalar::zeta(4).pow(j);
    GroupDatum datum{Z4, 2, chi, Scalar::zero(F)};
    REQUIRE(!datum.type_one());
    auto A = std::make_shared<const HopfAlgebra>(monomial_hopf(F, datum));
    REQUIRE(A->dim == 8);
    REQUIRE(verify_hopf_axioms(*A).all_ok());

    Mat triv(4, 4, F);
    for (auto& s : triv.a) s = Scalar::one(F);
    std::vector<int> uinv{0, 3, 2, 1}; // z -> z^3 fixes g = z^2
    // not bicleft (u != id), per the Lemma-7.4 criterion, no brute search
    REQUIRE(!is_bicleft_monomial(datum, triv, uinv));
    // and with trivial sigma compatibility (7.1) fails: chi(u(z)) != chi(z)
    REQUIRE_THROWS_AS(galois_monomial(A, triv, uinv, Scalar::zero(F)), error);
    // a != 0 is rejected for non-type-I data
    REQUIRE_THROWS_AS(galois_monomial(A, triv, {0, 1, 2, 3}, Scalar::one(F)), error);
    // the honest object with u = id and a = 0 passes all comodule axioms
    REQUIRE_NOTHROW(galois_monomial(A, triv, {0, 1, 2, 3}, Scalar::zero(F)));
}

TEST_CASE("cyclic data") {
    // (2,2,4,1,i): dim 8, valid datum
    CyclicDatum cd{2, 2, 4, 1, Scalar::zeta(4)};
    REQUIRE_NOTHROW(cd.validate());
    GroupDatum gd = cd.group_datum(FieldSpec::cyclotomic(4));
    HopfAlgebra A = monomial_hopf(FieldSpec::cyclotomic(4), gd);
    REQUIRE(A.dim == 8);
    REQUIRE(verify_hopf_axioms(A).all_ok());

    CyclicDatum bad{2, 2, 4, 1, Scalar::zeta(8)};
    REQUIRE_THROWS_AS(bad.validate(), error);

    // Taft as a cyclic datum: (3,3,3,1,zeta3) matches taft(3)
    CyclicDatum tcd{3, 3, 3, 1, Scalar::zeta(3)};
    REQUIRE_NOTHROW(tcd.validate());
    REQUIRE(hopf_equal(monomial_hopf(FieldSpec::cyclotomic(3), tcd.group_datum(FieldSpec::cyclotomic(3))),
                       taft(3)));
}

TEST_CASE("D(k[Z2]) is k[Z2 x Z2] through the character basis") {
    HopfAlgebra KZ2 = group_algebra(Q, FiniteGroup::cyclic(2));
    HopfAlgebra D = drinfeld_double(KZ2); // (k^Z2)^cop (x) k[Z2], B-major
    HopfAlgebra KV4 = group_algebra(Q, FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                                   FiniteGroup::cyclic(2)));
    // (u^a, v^b) -> (e_1 + (-1)^a e_g) (x) g^b
    LinMap iso{Mat(4, 4, Q)};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            int col = a * 2 + b;
            iso.m.at(0 * 2 + b, col) = Scalar::one(Q);
            iso.m.at(1 * 2 + b, col) = Scalar::integer(a ? -1 : 1);
        }
    REQUIRE(is_hopf_morphism(iso, KV4, D));
    REQUIRE(mat_inverse(iso.m).has_value());
}

TEST_CASE("bosonization over Z4 with a rotation action") {
    // G = Z4 acting on W = k^2 by 90-degree rotation; g = z^2 acts as -1
    SuperSpace S;
    S.G = FiniteGroup::cyclic(4);
    S.n = 2;
    S.g = 2;
    Mat rot(2, 2, Q);
    rot.at(0, 1) = Scalar::integer(-1);
    rot.at(1, 0) = Scalar::integer(1);
    S.rho = {Mat::identity(2, Q), rot, mat_mul(rot, rot), mat_mul(rot, mat_mul(rot, rot))};
    HopfAlgebra A = bosonization(Q, S);
    REQUIRE(A.dim == 16);
    REQUIRE(verify_hopf_axioms(A).all_ok());

    // invariant symmetric tensors are the multiples of the identity
    Mat good = Mat::identity(2, Q);
    for (auto& v : good.a) v = Scalar::integer(3) * v;
    ExpTwist tw = exp_twist_cocycle(Q, S, good); // laziness verified inside
    REQUIRE(is_lazy2(tw.dual, tw.sigma));

    Mat bad(2, 2, Q);
    bad.at(0, 0) = Scalar::integer(1);
    bad.at(1, 1) = Scalar::integer(-1); // symmetric but not rotation-invariant
    try {
        exp_twist_cocycle(Q, S, bad);
        FAIL("expected NotInvariant");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::not_invariant);
    }
}
