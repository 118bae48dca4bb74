#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "poissonkit/laurent.hpp"
#include "poissonkit/parse.hpp"
#include "poissonkit/rational.hpp"

using namespace poissonkit;

TEST_CASE("rational literals reduce to lowest terms") {
    CHECK(rational_from_string("4/6") == Rational(2, 3));
    CHECK(rational_from_string("-10/4") == Rational(-5, 2));
    CHECK(rational_from_string("7") == 7);
    CHECK(rational_from_string("0/9") == 0);
    CHECK_THROWS_AS(rational_from_string("3/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("abc"), ParseError);
    CHECK_THROWS_AS(rational_from_string(""), ParseError);
}

TEST_CASE("laurent arithmetic and evaluation at t = 1") {
    LaurentScalar t = LaurentScalar::t_power(1);
    LaurentScalar tinv = LaurentScalar::t_power(-1);

    CHECK((t - tinv).eval_at_one() == 0);
    CHECK(LaurentScalar(1).eval_at_one() == 1);
    CHECK((t * tinv).is_one());
    CHECK((t - t).is_zero());

    LaurentScalar s = laurent_parse("2*t^3 - 1/2 + t^-2");
    CHECK(s.eval_at_one() == Rational(5, 2));
    CHECK(laurent_parse(s.to_string()) == s);
}

TEST_CASE("division by (t-1) is exact precisely when eval-at-one vanishes") {
    LaurentScalar t = LaurentScalar::t_power(1);
    LaurentScalar tinv = LaurentScalar::t_power(-1);

    // (t - t^-1) / (t - 1) = 1 + t^-1
    auto q = (t - tinv).divided_by_t_minus_one();
    REQUIRE(q.has_value());
    CHECK(*q == LaurentScalar(1) + tinv);
    CHECK(q->eval_at_one() == 2);

    CHECK_FALSE(LaurentScalar(1).divided_by_t_minus_one().has_value());
    CHECK(LaurentScalar().divided_by_t_minus_one().has_value());

    std::mt19937_64 rng(20240811);
    for (int round = 0; round < 200; ++round) {
        LaurentScalar s;
        int terms = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < terms; ++k) {
            long num = static_cast<long>(rng() % 19) - 9;
            Rational c(num, 1 + static_cast<long>(rng() % 3));
            c.canonicalize();
            s += LaurentScalar::t_power(static_cast<int>(rng() % 9) - 4, c);
        }
        auto divided = s.divided_by_t_minus_one();
        if (s.eval_at_one() == 0) {
            REQUIRE(divided.has_value());
            // multiply back
            LaurentScalar back = divided->shifted(1) - *divided;
            CHECK(back == s);
        } else {
            CHECK_FALSE(divided.has_value());
        }
        // and the converse direction: anything times (t-1) divides exactly
        LaurentScalar prod = s.shifted(1) - s;
        auto again = prod.divided_by_t_minus_one();
        REQUIRE(again.has_value());
        CHECK(*again == s);
    }
}

TEST_CASE("laurent printing") {
    CHECK(LaurentScalar().to_string() == "0");
    CHECK(LaurentScalar::t_power(-1).to_string() == "t^-1");
    CHECK((LaurentScalar(1) + LaurentScalar::t_power(-1)).to_string() == "1 + t^-1");
    LaurentScalar spread = LaurentScalar::t_power(1) - LaurentScalar::t_power(-1);
    CHECK(spread.to_string() == "t - t^-1");
    CHECK(laurent_parse("t - t^-1") == spread);
}
