#include <catch2/catch_amalgamated.hpp>

#include "hopflab/scalar.hpp"

using namespace hopflab;

TEST_CASE("rational arithmetic is exact and canonical") {
    Scalar a = Scalar::rational(3, 2);
    Scalar b = Scalar::rational(-6, 4);
    REQUIRE(a + b == Scalar::integer(0));
    REQUIRE(b.str() == "-3/2");
    REQUIRE((a * b).str() == "-9/4");
    REQUIRE(Scalar::rational(4, -6).str() == "-2/3"); // positive denominator, lowest terms
    REQUIRE(a.inverse().str() == "2/3");
    REQUIRE_THROWS_AS(Scalar::integer(0).inverse(), error);
}

TEST_CASE("prime field arithmetic") {
    Scalar a = Scalar::fp(5, 3), b = Scalar::fp(5, 4);
    REQUIRE((a * b).str() == "2 mod 5");
    REQUIRE((a + b).str() == "2 mod 5");
    REQUIRE(a.inverse() == Scalar::fp(5, 2));
    REQUIRE(a.pow(4).is_one());
    REQUIRE(Scalar::fp(5, 2).multiplicative_order() == 4);
    REQUIRE_THROWS_AS(FieldSpec::Fp(6), error);
}

TEST_CASE("field tags never coerce") {
    Scalar q = Scalar::integer(1);
    Scalar f = Scalar::fp(5, 1);
    REQUIRE_THROWS_AS(q + f, error);
    try {
        q* f;
        FAIL("expected FieldMismatch");
    } catch (const error& e) {
        REQUIRE(e.code() == errc::field_mismatch);
    }
}

TEST_CASE("cyclotomic arithmetic reduces mod Phi_N") {
    Scalar z = Scalar::zeta(3);
    // 1 + z + z^2 = 0 in Q(zeta_3)
    Scalar one = Scalar::one(FieldSpec::cyclotomic(3));
    REQUIRE((one + z + z * z).is_zero());
    REQUIRE(z.pow(3).is_one());
    REQUIRE(z.multiplicative_order() == 3);
    REQUIRE(z.inverse() == z.pow(2));

    Scalar i = Scalar::zeta(4);
    REQUIRE((i * i) == -Scalar::one(FieldSpec::cyclotomic(4)));
    REQUIRE(i.str() == "z");
    REQUIRE((i * i).str() == "-1");

    // zeta_2 = -1 lives in a degree-1 field
    REQUIRE(Scalar::zeta(2) == -Scalar::one(FieldSpec::cyclotomic(2)));

    // inverse of a generic element: (1 + 2 zeta_5)^-1 * (1 + 2 zeta_5) == 1
    Scalar w = Scalar::one(FieldSpec::cyclotomic(5)) + Scalar::of_long(FieldSpec::cyclotomic(5), 2) * Scalar::zeta(5);
    REQUIRE((w.inverse() * w).is_one());
}

TEST_CASE("scalar strings round-trip bit-exactly") {
    auto roundtrip = [](const FieldSpec& f, const Scalar& s) {
        Scalar t = Scalar::parse(f, s.str());
        REQUIRE(t == s);
        REQUIRE(t.str() == s.str());
    };
    roundtrip(FieldSpec::Q(), Scalar::rational(-22, 7));
    roundtrip(FieldSpec::Q(), Scalar::integer(0));
    roundtrip(FieldSpec::Fp(7), Scalar::fp(7, 6));
    FieldSpec c12 = FieldSpec::cyclotomic(12);
    Scalar z = Scalar::zeta(12);
    roundtrip(c12, z.pow(2) - Scalar::of_rational(c12, mpq_class(1, 2)) * z + Scalar::one(c12));
    roundtrip(c12, Scalar::zero(c12));
    roundtrip(c12, -z);

    REQUIRE_THROWS_AS(Scalar::parse(FieldSpec::Q(), "3//2"), error);
    REQUIRE_THROWS_AS(Scalar::parse(FieldSpec::Q(), ""), error);
    REQUIRE_THROWS_AS(Scalar::parse(FieldSpec::Q(), "1/2x"), error);
    REQUIRE(Scalar::parse(FieldSpec::Fp(5), "9") == Scalar::fp(5, 4));
    REQUIRE(Scalar::parse(FieldSpec::Fp(5), "4 mod 5") == Scalar::fp(5, 4));
    REQUIRE_THROWS_AS(Scalar::parse(FieldSpec::Fp(5), "4 mod 7"), error);
}

TEST_CASE("cyclotomic polynomial degrees match Euler phi") {
    REQUIRE(Scalar::zero(FieldSpec::cyclotomic(1)).cyclo_coeffs().size() == 1);
    REQUIRE(Scalar::zero(FieldSpec::cyclotomic(4)).cyclo_coeffs().size() == 2);
    REQUIRE(Scalar::zero(FieldSpec::cyclotomic(5)).cyclo_coeffs().size() == 4);
    REQUIRE(Scalar::zero(FieldSpec::cyclotomic(12)).cyclo_coeffs().size() == 4);
}
