#include <doctest.h>

#include "wilm/dyadic.hpp"
#include "wilm/error.hpp"

using wilm::Dyadic;

TEST_CASE("canonical form keeps mantissa odd or zero") {
    Dyadic d(mpz_class(12), 0); // 12 = 3 * 2^2
    CHECK(d.mantissa() == 3);
    CHECK(d.exponent() == 2);

    Dyadic z(mpz_class(0), 17);
    CHECK(z.is_zero());
    CHECK(z.exponent() == 0);
}

TEST_CASE("arithmetic is exact") {
    Dyadic a = Dyadic::parse("3*2^-1"); // 1.5
    Dyadic b = Dyadic::parse("1*2^-2"); // 0.25
    CHECK((a + b).str() == "7*2^-2");
    CHECK((a - b).str() == "5*2^-2");
    CHECK((a * b).str() == "3*2^-3");
    CHECK((-a).str() == "-3*2^-1");
    CHECK((a - a).is_zero());
}

TEST_CASE("from_double is bit exact") {
    for (double d : {0.5, -0.75, 1.0 / 3.0, 1e300, -5e-300, 0.0}) {
        CHECK(Dyadic::from_double(d).to_double() == d);
    }
    CHECK_THROWS_AS(Dyadic::from_double(1.0 / 0.0), wilm::ParameterError);
}

TEST_CASE("comparison") {
    CHECK(Dyadic(1) < Dyadic(2));
    CHECK(Dyadic(-3) < Dyadic::parse("1*2^-10"));
    CHECK(Dyadic::parse("1*2^-10") == Dyadic::pow2(-10));
    CHECK(Dyadic(0) < Dyadic::pow2(-100));
}

TEST_CASE("parse accepts the documented forms") {
    CHECK(Dyadic::parse("2^-40") == Dyadic::pow2(-40));
    CHECK(Dyadic::parse("-2^3") == Dyadic(-8));
    CHECK(Dyadic::parse("1/4") == Dyadic::pow2(-2));
    CHECK(Dyadic::parse("3/2^1") == Dyadic::parse("3*2^-1"));
    CHECK(Dyadic::parse("42") == Dyadic(42));
    CHECK_THROWS_AS(Dyadic::parse("1/3"), wilm::SchemaError);
    CHECK_THROWS_AS(Dyadic::parse("oops"), wilm::SchemaError);
    CHECK_THROWS_AS(Dyadic::parse(""), wilm::SchemaError);
}

TEST_CASE("round-trip through str") {
    for (const char* s : {"0*2^0", "3*2^-1", "-7*2^12", "1*2^0"}) {
        CHECK(Dyadic::parse(s).str() == s);
    }
}

TEST_CASE("from_mpq_round_up") {
    // Exact when the value is already dyadic at the precision.
    CHECK(Dyadic::from_mpq_round_up(mpq_class(1, 2), 32) == Dyadic::pow2(-1));
    // 1/3 rounds up.
    Dyadic r = Dyadic::from_mpq_round_up(mpq_class(1, 3), 8);
    CHECK(r.to_mpq() >= mpq_class(1, 3));
    CHECK(r.to_mpq() - mpq_class(1, 3) <= mpq_class(1, 256));
}
