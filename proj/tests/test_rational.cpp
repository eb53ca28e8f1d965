#include <lpcert/errors.hpp>
#include <lpcert/rational.hpp>

#include <doctest.h>

#include "test_util.hpp"

using namespace lpcert;

TEST_SUITE("rational") {

TEST_CASE("parsing reduces to lowest terms") {
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("4/2") == Rational(2));
    CHECK(parse_rational("0/5") == Rational(0));
    CHECK(parse_rational("+7/3") == Rational(7, 3));
    CHECK(parse_rational("-0") == Rational(0));
}

TEST_CASE("printing uses lowest terms and omits unit denominators") {
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(-1, 2)) == "-1/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(parse_rational("2/4")) == "1/2");
}

TEST_CASE("values beyond machine width round trip") {
    const std::string big = "123456789012345678901234567890123456789/2";
    Rational r = parse_rational(big);
    CHECK(to_string(r) == big);
    Rational twice = r * 2;
    CHECK(to_string(twice) == "123456789012345678901234567890123456789");
}

TEST_CASE("malformed text is rejected") {
    for (const char* bad : {"", "1/0", "abc", "1/-2", "1.5", "1/2/3", "/2", "2/", "-",
                            "1 /2", "0x10"}) {
        CHECK_THROWS_AS(parse_rational(bad), ParseError);
    }
}

TEST_CASE("two-argument construction reduces") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
}

TEST_CASE("vector helpers") {
    RVector a{Rational(1), Rational(2)};
    RVector b{Rational(3), Rational(-1, 2)};
    CHECK(dot(a, b) == Rational(2));
    CHECK(add(a, b) == RVector({Rational(4), Rational(3, 2)}));
    CHECK(sub(a, b) == RVector({Rational(-2), Rational(5, 2)}));
    CHECK(scaled(a, Rational(1, 2)) == RVector({Rational(1, 2), Rational(1)}));
    CHECK(zeros(3) == RVector({Rational(0), Rational(0), Rational(0)}));
    CHECK(ones(2) == RVector({Rational(1), Rational(1)}));
    CHECK(unit_vector(3, 1) == RVector({Rational(0), Rational(1), Rational(0)}));
    CHECK(is_zero_vector(zeros(4)));
    CHECK(!is_zero_vector(a));
    CHECK(is_nonnegative(a));
    CHECK(!is_nonnegative(b));
    CHECK(support(RVector{Rational(3), Rational(0), Rational(1, 2)}) ==
          std::vector<std::size_t>({0, 2}));
    CHECK(support(zeros(2)).empty());
    CHECK(to_string(RVector{Rational(1), Rational(1, 2)}) == "(1, 1/2)");
}

TEST_CASE("vector length mismatches are rejected") {
    RVector a{Rational(1)};
    RVector b{Rational(1), Rational(2)};
    CHECK_THROWS_AS(dot(a, b), PreconditionError);
    CHECK_THROWS_AS(add(a, b), PreconditionError);
    CHECK_THROWS_AS(sub(a, b), PreconditionError);
}

TEST_CASE("arithmetic is exact on random values") {
    std::mt19937_64 gen(42);
    for (int i = 0; i < 200; ++i) {
        Rational a = testutil::rand_rational(gen);
        Rational b = testutil::rand_rational(gen);
        Rational sum = a + b;
        Rational back = sum - b;
        CHECK(back == a);
        if (b != 0) {
            Rational prod = a * b;
            Rational quot = prod / b;
            CHECK(quot == a);
        }
    }
}

}  // TEST_SUITE
