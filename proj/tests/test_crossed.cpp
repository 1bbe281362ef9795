#include <catch2/catch_amalgamated.hpp>

#include "hopflab/crossed.hpp"
#include "hopflab/families.hpp"

using namespace hopflab;

static const FieldSpec Q = FieldSpec::Q();

namespace {
std::shared_ptr<const HopfAlgebra> shared_h4() {
    static auto p = std::make_shared<const HopfAlgebra>(sweedler());
    return p;
}

/// H4 acting on k[y]/(y^2) by g -> y = -y, x -> y = 0, with trivial sigma.
CrossedSystem h4_on_dual_numbers() {
    auto H4 = shared_h4();
    CrossedSystem cs;
    cs.A = H4;
    cs.R = AssocAlgebra::dual_numbers(Q);
    cs.act.assign(4, std::vector<SparseVec>(2));
    // 1 -> : identity, g -> : y -> -y, x -> y = 0, gx -> y = 0
    cs.act[0][0] = {{0, Scalar::one(Q)}};
    cs.act[0][1] = {{1, Scalar::one(Q)}};
    cs.act[1][0] = {{0, Scalar::one(Q)}};
    cs.act[1][1] = {{1, Scalar::integer(-1)}};
    cs.act[2][0] = {};
    cs.act[2][1] = {};
    cs.act[3][0] = {};
    cs.act[3][1] = {};
    cs.sig.assign(4, std::vector<Vec>(4, zero_vec(2, Q)));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Scalar e = H4->counit[a] * H4->counit[b];
            cs.sig[a][b][0] = e;
        }
    return cs;
}
} // namespace

TEST_CASE("scalar crossed systems reduce to the cocycle theory") {
    auto H4 = shared_h4();
    BiForm s = sweedler_sigma(*H4, Scalar::integer(2));
    CrossedSystem cs = CrossedSystem::scalar(H4, s);
    REQUIRE(check_crossed_system(cs).ok);
    REQUIRE(is_lazy_crossed(cs)); // sigma_t is lazy

    LinForm gamma{{Scalar::one(Q), Scalar::one(Q), Scalar::one(Q), Scalar::integer(0)}};
    BiForm dg = coboundary(*H4, gamma);
    CrossedSystem nl = CrossedSystem::scalar(H4, dg);
    REQUIRE(check_crossed_system(nl).ok);
    REQUIRE(!is_lazy_crossed(nl)); // non-lazy coboundary

    // perturbed sigma entry fails the axioms
    CrossedSystem bad = cs;
    bad.sig[2][2][0] = bad.sig[2][2][0] + Scalar::one(Q);
    REQUIRE(!check_crossed_system(bad).ok);
}

TEST_CASE("H4 on dual numbers") {
    CrossedSystem cs = h4_on_dual_numbers();
    REQUIRE(check_crossed_system(cs).ok);
    // direct verification decides laziness: g acts nontrivially, so the
    // two sides differ at (x, 1, y)
    REQUIRE(!is_lazy_crossed(cs));
}

TEST_CASE("cocommutative base is always lazy") {
    auto KV4 = std::make_shared<const HopfAlgebra>(
        group_algebra(Q, FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))));
    // k[G] acting trivially with a bicharacter sigma
    BiForm s{Mat(4, 4, Q)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int b = i % 2, a2 = j / 2;
            s.m.at(i, j) = Scalar::integer(b * a2 % 2 ? -1 : 1);
        }
    REQUIRE(is_left_cocycle(*KV4, s));
    CrossedSystem cs = CrossedSystem::scalar(KV4, s);
    REQUIRE(check_crossed_system(cs).ok);
    REQUIRE(is_lazy_crossed(cs));
}

TEST_CASE("right action of lazy cocycles on crossed systems") {
    auto H4 = shared_h4();
    CrossedSystem cs = h4_on_dual_numbers();
    BiForm w1 = sweedler_sigma(*H4, Scalar::integer(1));
    BiForm w2 = sweedler_sigma(*H4, Scalar::integer(-3));
    // unit acts trivially
    CrossedSystem un = act_on_crossed(cs, conv_unit2(*H4));
    REQUIRE(un.sig == cs.sig);
    // right action law: act(act(cs,w1),w2) = act(cs, w1*w2)
    CrossedSystem lhs = act_on_crossed(act_on_crossed(cs, w1), w2);
    CrossedSystem rhs = act_on_crossed(cs, convolve(*H4, w1, w2));
    REQUIRE(lhs.sig == rhs.sig);
    // R = k reduces to convolution
    CrossedSystem sc = CrossedSystem::scalar(H4, sweedler_sigma(*H4, Scalar::integer(1)));
    CrossedSystem acted = act_on_crossed(sc, w2);
    BiForm expected = convolve(*H4, sweedler_sigma(*H4, Scalar::integer(1)), w2);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) REQUIRE(acted.sig[a][b][0] == expected.m.at(a, b));
}

TEST_CASE("crossed products") {
    auto H4 = shared_h4();
    // R = k gives the galois object
    BiForm s = sweedler_sigma(*H4, Scalar::integer(2));
    CrossedSystem sc = CrossedSystem::scalar(H4, s);
    ComoduleAlgebra Z = crossed_product(sc);
    ComoduleAlgebra G = galois_object(H4, s, GaloisSide::right);
    REQUIRE(Z.dim == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            REQUIRE(Z.mul(Z.basis_el(i), Z.basis_el(j)) == G.mul(G.basis_el(i), G.basis_el(j)));
    // lazy scalar system: beta is an algebra morphism
    REQUIRE(crossed_beta_is_algebra_morphism(sc, Z));

    // non-lazy system: beta check fails
    CrossedSystem nl = h4_on_dual_numbers();
    ComoduleAlgebra Znl = crossed_product(nl);
    REQUIRE(Znl.dim == 8);
    REQUIRE(!crossed_beta_is_algebra_morphism(nl, Znl));

    // lazy non-scalar system: trivial action of k[V4] on dual numbers
    auto KV4 = std::make_shared<const HopfAlgebra>(
        group_algebra(Q, FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))));
    CrossedSystem triv;
    triv.A = KV4;
    triv.R = AssocAlgebra::dual_numbers(Q);
    triv.act.assign(4, std::vector<SparseVec>(2));
    for (int a = 0; a < 4; ++a)
        for (int r = 0; r < 2; ++r)
            if (!KV4->counit[a].is_zero()) triv.act[a][r] = {{r, KV4->counit[a]}};
    triv.sig.assign(4, std::vector<Vec>(4, zero_vec(2, Q)));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) triv.sig[a][b][0] = KV4->counit[a] * KV4->counit[b];
    REQUIRE(check_crossed_system(triv).ok);
    REQUIRE(is_lazy_crossed(triv));
    ComoduleAlgebra Zt = crossed_product(triv);
    REQUIRE(crossed_beta_is_algebra_morphism(triv, Zt));
}
