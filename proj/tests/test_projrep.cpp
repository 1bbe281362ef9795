#include <catch2/catch_amalgamated.hpp>

#include "hopflab/families.hpp"
#include "hopflab/projrep.hpp"
#include "hopflab/sampling.hpp"

using namespace hopflab;

static const FieldSpec Q = FieldSpec::Q();

namespace {
std::shared_ptr<const HopfAlgebra> shared_h4() {
    static auto p = std::make_shared<const HopfAlgebra>(sweedler());
    return p;
}
} // namespace

TEST_CASE("regular projective representations") {
    auto H4 = shared_h4();
    ProjRep X0 = regular_projrep(H4, conv_unit2(*H4));
    REQUIRE(check_projrep(X0));
    // untwisted: pi(x) is honest left multiplication
    REQUIRE(X0.act(basis_vec(*H4, 2)) ==
            [&] {
                Mat m(4, 4, Q);
                for (int j = 0; j < 4; ++j) {
                    Vec col = hopf_mul(*H4, basis_vec(*H4, 2), basis_vec(*H4, j));
                    for (int i = 0; i < 4; ++i) m.at(i, j) = col[i];
                }
                return m;
            }());

    BiForm s = sweedler_sigma(*H4, Scalar::integer(3));
    ProjRep X = regular_projrep(H4, s);
    // pi(x)^2 = (t/2) Id
    Mat px = X.pi[2];
    REQUIRE(mat_mul(px, px) ==
            [&] {
                Mat m = Mat::identity(4, Q);
                for (auto& v : m.a) v = Scalar::rational(3, 2) * v;
                return m;
            }());

    // perturbation is caught with a failing pair
    ProjRep bad = X;
    bad.pi[2].at(0, 0) = bad.pi[2].at(0, 0) + Scalar::one(Q);
    REQUIRE(!check_projrep(bad));
    REQUIRE(projrep_fail(bad).has_value());
}

TEST_CASE("tensor and unit") {
    auto H4 = shared_h4();
    BiForm s = sweedler_sigma(*H4, Scalar::integer(1));
    BiForm t = sweedler_sigma(*H4, Scalar::integer(2));
    ProjRep X = regular_projrep(H4, s);
    ProjRep Y = regular_projrep(H4, t);
    ProjRep XY = tensor_projrep(X, Y);
    REQUIRE(XY.sigma == convolve(*H4, s, t)); // cocycle multiplies
    REQUIRE(check_projrep(XY));

    ProjRep U = unit_projrep(H4);
    ProjRep XU = tensor_projrep(X, U);
    REQUIRE(XU.sigma == X.sigma);
    for (int i = 0; i < 4; ++i) REQUIRE(XU.pi[i] == X.pi[i]); // V (x) k = V

    // associativity on the nose
    ProjRep Z = regular_projrep(H4, sweedler_sigma(*H4, Scalar::integer(-1)));
    ProjRep L = tensor_projrep(tensor_projrep(X, Y), Z);
    ProjRep R = tensor_projrep(X, tensor_projrep(Y, Z));
    REQUIRE(L.sigma == R.sigma);
    for (int i = 0; i < 4; ++i) REQUIRE(L.pi[i] == R.pi[i]);
}

TEST_CASE("duals, evaluation and coevaluation") {
    auto H4 = shared_h4();
    ProjRep U = unit_projrep(H4);
    ProjRep Ud = dual_projrep(U);
    REQUIRE(Ud.sigma == U.sigma);
    for (int i = 0; i < 4; ++i) REQUIRE(Ud.pi[i] == U.pi[i]);

    for (long t : {0L, 1L, 2L}) {
        BiForm s = sweedler_sigma(*H4, Scalar::integer(t));
        ProjRep X = regular_projrep(H4, s);
        ProjRep Xd = dual_projrep(X);
        REQUIRE(Xd.sigma == sweedler_sigma(*H4, Scalar::integer(-t))); // conv inverse
        REQUIRE(check_projrep(Xd));

        // evaluation: X* (x) X -> 1 is a basic morphism with mu = eps
        ProjRep E = tensor_projrep(Xd, X);
        REQUIRE(is_basic_morphism(evaluation_matrix(X), E, U, conv_unit(*H4)));
        // coevaluation: 1 -> X (x) X*
        ProjRep C = tensor_projrep(X, Xd);
        REQUIRE(is_basic_morphism(coevaluation_matrix(X), U, C, conv_unit(*H4)));
    }
}

TEST_CASE("basic morphisms separate cocycle classes") {
    auto H4 = shared_h4();
    ProjRep X = regular_projrep(H4, sweedler_sigma(*H4, Scalar::integer(1)));
    ProjRep Y = regular_projrep(H4, sweedler_sigma(*H4, Scalar::integer(2)));
    // identity is a basic morphism X -> X with mu = eps
    REQUIRE(is_basic_morphism(Mat::identity(4, Q), X, X, conv_unit(*H4)));
    // on H4 the only lazy unit is eps; different classes admit only 0
    auto space = basic_morphism_space(X, Y, conv_unit(*H4));
    REQUIRE(space.empty());
    auto same = basic_morphism_space(X, X, conv_unit(*H4));
    REQUIRE(!same.empty());

    // an intertwiner built from a lazy unit on E(2)
    auto E2 = std::make_shared<const HopfAlgebra>(en_algebra(Q, 2));
    LinForm mu{zero_vec(E2->dim, Q)};
    mu.v[0] = Scalar::one(Q);
    mu.v[1] = Scalar::one(Q);
    mu.v[6] = Scalar::integer(2);
    mu.v[7] = Scalar::integer(2);
    REQUIRE(is_lazy1(*E2, mu));
    Rng rng(9);
    BiForm theta = en_exp_twist(*E2, random_symmetric(rng, Q, 2));
    ProjRep XE = regular_projrep(E2, convolve(*E2, theta, coboundary(*E2, mu)));
    ProjRep YE = regular_projrep(E2, theta);
    // f(a) = mu(a1) a2 is an algebra map _((theta * d mu)) A -> _theta A and a
    // basic morphism with witness mu
    LinMap f = convolve(*E2, mu, identity_map(*E2));
    REQUIRE(is_basic_morphism(f.m, XE, YE, mu));
}
