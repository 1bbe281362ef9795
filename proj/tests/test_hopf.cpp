#include <catch2/catch_amalgamated.hpp>

#include "hopflab/families.hpp"
#include "hopflab/sampling.hpp"

using namespace hopflab;

static const FieldSpec Q = FieldSpec::Q();

TEST_CASE("family algebras satisfy the Hopf axioms") {
    REQUIRE(verify_hopf_axioms(sweedler()).all_ok());
    REQUIRE(verify_hopf_axioms(group_algebra(Q, FiniteGroup::cyclic(2))).all_ok());
    REQUIRE(verify_hopf_axioms(en_algebra(Q, 2)).all_ok());
    REQUIRE(verify_hopf_axioms(group_algebra(Q, FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                                            FiniteGroup::cyclic(2))))
                .all_ok());
}

TEST_CASE("broken antipode is reported with the failing basis element") {
    HopfAlgebra H = sweedler();
    H.antipode = Mat::identity(4, Q);
    auto rep = verify_hopf_axioms(H);
    REQUIRE(!rep.all_ok());
    auto* anti = rep.find("antipode");
    REQUIRE(anti != nullptr);
    REQUIRE(!anti->ok);
    REQUIRE(anti->at == std::vector<int>{2}); // fails first at x
}

TEST_CASE("sweedler equals E(1) tensor for tensor") {
    REQUIRE(hopf_equal(sweedler(), en_algebra(Q, 1)));
}

TEST_CASE("convolution unit and the sigma_t group law") {
    HopfAlgebra H = sweedler();
    LinForm eps = conv_unit(H);
    REQUIRE(convolve(H, eps, eps) == eps);

    BiForm s = sweedler_sigma(H, Scalar::integer(1));
    BiForm t = sweedler_sigma(H, Scalar::rational(1, 2));
    REQUIRE(convolve(H, s, t) == sweedler_sigma(H, Scalar::rational(3, 2)));
    REQUIRE(conv_inverse(H, s) == sweedler_sigma(H, Scalar::integer(-1)));
}

TEST_CASE("grouplike convolution multiplies pointwise") {
    HopfAlgebra H = group_algebra(Q, FiniteGroup::cyclic(2));
    LinForm mu{{Scalar::integer(1), Scalar::integer(3)}};
    LinForm nu{{Scalar::integer(1), Scalar::integer(-2)}};
    LinForm prod = convolve(H, mu, nu);
    REQUIRE(prod.v[1] == Scalar::integer(-6));

    LinForm sing{{Scalar::integer(1), Scalar::integer(0)}};
    REQUIRE_THROWS_AS(conv_inverse(H, sing), error);
    REQUIRE(!is_conv_invertible(H, sing));
}

TEST_CASE("dual is involutive and dualizes structure") {
    for (const HopfAlgebra& H :
         {sweedler(), group_algebra(Q, FiniteGroup::cyclic(3)), en_algebra(Q, 2)}) {
        REQUIRE(verify_hopf_axioms(dual_hopf(H)).all_ok());
        REQUIRE(hopf_equal(dual_hopf(dual_hopf(H)), H));
    }
    // dual of k[Z2] is the function algebra: commutative
    HopfAlgebra D = dual_group_algebra(Q, FiniteGroup::cyclic(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Vec ij = hopf_mul(D, basis_vec(D, i), basis_vec(D, j));
            Vec ji = hopf_mul(D, basis_vec(D, j), basis_vec(D, i));
            REQUIRE(ij == ji);
        }
}

TEST_CASE("tensor products") {
    HopfAlgebra H4 = sweedler();
    HopfAlgebra T = tensor_hopf(H4, H4);
    REQUIRE(T.dim == 16);
    REQUIRE(verify_hopf_axioms(T).all_ok());

    FiniteGroup Z2 = FiniteGroup::cyclic(2);
    REQUIRE(hopf_equal(tensor_hopf(group_algebra(Q, Z2), group_algebra(Q, Z2)),
                       group_algebra(Q, FiniteGroup::direct_product(Z2, Z2))));
}

TEST_CASE("op and cop") {
    HopfAlgebra H4 = sweedler();
    REQUIRE(hopf_equal(op_cop(H4, false, false), H4));
    HopfAlgebra cop = op_cop(H4, false, true);
    REQUIRE(verify_hopf_axioms(cop).all_ok());
    REQUIRE(!hopf_equal(cop, H4));

    HopfAlgebra KZ3 = group_algebra(Q, FiniteGroup::cyclic(3));
    REQUIRE(hopf_equal(op_cop(KZ3, true, false), KZ3));
    REQUIRE(hopf_equal(op_cop(KZ3, false, true), KZ3));
}

TEST_CASE("taft algebra H_{3,zeta3}") {
    HopfAlgebra T = taft(3);
    REQUIRE(T.dim == 9);
    REQUIRE(verify_hopf_axioms(T).all_ok());
    // Delta(x^2) carries the Gaussian coefficient [2 choose 1]_q on the x (x) gx slot
    const MonomialMeta& meta = *T.gens.monomial;
    Scalar q = Scalar::zeta(3);
    int x2 = meta.index(0, 2);
    Scalar found = Scalar::zero(T.field);
    for (const auto& d : T.comult[x2])
        if (d.left == meta.index(0, 1) && d.right == meta.index(1, 1)) found = d.c;
    REQUIRE(found == qbinom(2, 1, q));
    REQUIRE(qbinom(2, 1, q) == Scalar::one(T.field) + q);
    REQUIRE(qbinom(2, 1, Scalar::integer(-1)).is_zero());
}

TEST_CASE("monomial datum for Z2 with the sign character gives H4") {
    FiniteGroup Z2 = FiniteGroup::cyclic(2);
    std::vector<Scalar> sign = {Scalar::integer(1), Scalar::integer(-1)};
    GroupDatum datum{Z2, 1, sign, Scalar::integer(0)};
    HopfAlgebra A = monomial_hopf(Q, datum);
    REQUIRE(A.dim == 4);
    REQUIRE(verify_hopf_axioms(A).all_ok());
    REQUIRE(datum.type_one());
    // check the defining relations x^2 = 0, xg = -gx
    const MonomialMeta& meta = *A.gens.monomial;
    Vec x = basis_vec(A, meta.index(0, 1));
    Vec g = basis_vec(A, meta.index(1, 0));
    REQUIRE(is_zero_vec(hopf_mul(A, x, x)));
    REQUIRE(hopf_mul(A, x, g) == vec_scale(Scalar::integer(-1), hopf_mul(A, g, x)));
}

TEST_CASE("characters enumeration") {
    auto chars_z2 = characters(FiniteGroup::cyclic(2), Q);
    REQUIRE(chars_z2.size() == 2);
    auto chars_z3_q = characters(FiniteGroup::cyclic(3), Q);
    REQUIRE(chars_z3_q.size() == 1); // Q has no cube roots of unity
    auto chars_z3 = characters(FiniteGroup::cyclic(3), FieldSpec::cyclotomic(3));
    REQUIRE(chars_z3.size() == 3);
    auto chars_v4 = characters(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
                               FieldSpec::Fp(5));
    REQUIRE(chars_v4.size() == 4);
    auto chars_g16 = characters(group_order16(), FieldSpec::cyclotomic(4));
    REQUIRE(chars_g16.size() == 8);
}

TEST_CASE("group order 16 of the CoOut example") {
    FiniteGroup G = group_order16();
    G.validate();
    REQUIRE(G.order == 16);
    REQUIRE(!G.is_abelian());
    REQUIRE(G.is_central(1)); // g sits at index gamma=1
    REQUIRE(G.element_order(1) == 4);
}

TEST_CASE("convolution is associative on randomized exact forms") {
    Rng rng(71);
    std::vector<HopfAlgebra> algebras;
    algebras.push_back(sweedler());
    algebras.push_back(en_algebra(Q, 2));
    algebras.push_back(group_algebra(Q, FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                                    FiniteGroup::cyclic(2))));
    for (const HopfAlgebra& H : algebras)
        for (int k = 0; k < 8; ++k) {
            LinForm f = random_linform(rng, H), g = random_linform(rng, H), h = random_linform(rng, H);
            REQUIRE(convolve(H, convolve(H, f, g), h) == convolve(H, f, convolve(H, g, h)));
            BiForm bf{Mat(H.dim, H.dim, Q)}, bg{Mat(H.dim, H.dim, Q)}, bh{Mat(H.dim, H.dim, Q)};
            for (auto& v : bf.m.a) v = random_scalar(rng, Q);
            for (auto& v : bg.m.a) v = random_scalar(rng, Q);
            for (auto& v : bh.m.a) v = random_scalar(rng, Q);
            REQUIRE(convolve(H, convolve(H, bf, bg), bh) == convolve(H, bf, convolve(H, bg, bh)));
            // two-sidedness of convolution inverses, whenever they exist
            LinForm u = random_reg1(rng, H);
            LinForm uinv = conv_inverse(H, u);
            REQUIRE(convolve(H, u, uinv) == conv_unit(H));
            REQUIRE(convolve(H, uinv, u) == conv_unit(H));
        }
}
