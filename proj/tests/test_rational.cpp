#include "schmidt/interval.hpp"
#include "schmidt/rational.hpp"

#include <doctest.h>

#include <random>

using namespace schmidt;

TEST_CASE("parse and render rationals") {
    CHECK(rat_str(parse_rat("3/6")) == "1/2");
    CHECK(rat_str(parse_rat("-4/6")) == "-2/3");
    CHECK(rat_str(parse_rat("7")) == "7");
    CHECK(parse_rat("0/5") == 0);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::domain_error);
}

TEST_CASE("ceil_sqrt on the stated examples") {
    CHECK(ceil_sqrt(Rat(4)) == 2);
    CHECK(ceil_sqrt(make_rat(5, 12)) == 1);
    CHECK(ceil_sqrt(Rat(540)) == 24); // 23^2 = 529 < 540 <= 576
    CHECK_THROWS_AS(ceil_sqrt(Rat(0)), std::domain_error);
    CHECK_THROWS_AS(ceil_sqrt(Rat(-3)), std::domain_error);
}

TEST_CASE("ceil_sqrt bracketing property on sampled rationals") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 2000; ++i) {
        const long num = static_cast<long>(rng() % 1000000) + 1;
        const long den = static_cast<long>(rng() % 1000) + 1;
        const Rat r = make_rat(num, den);
        const Int n = ceil_sqrt(r);
        CHECK(Rat(n * n) >= r);
        if (Rat(n * n) != r) CHECK(Rat((n - 1) * (n - 1)) < r);
    }
}

TEST_CASE("in_sqrt_window squared comparisons") {
    CHECK(in_sqrt_window(Int(1), make_rat(5, 12), make_rat(5, 2)));
    CHECK_FALSE(in_sqrt_window(Int(2), make_rat(5, 12), make_rat(5, 2)));
    CHECK(in_sqrt_window(Int(3), make_rat(5, 2), Rat(15)));
    CHECK_THROWS_AS(in_sqrt_window(Int(1), Rat(2), Rat(1)), std::domain_error);
}

TEST_CASE("interval predicates agree with endpoint comparisons") {
    const Interval I(make_rat(1, 2), make_rat(1, 4));
    CHECK(I.lo() == make_rat(1, 4));
    CHECK(I.hi() == make_rat(3, 4));
    CHECK(I.contains(make_rat(1, 4)));
    CHECK(I.contains(make_rat(3, 4)));
    CHECK_FALSE(I.contains(make_rat(4, 5)));
    CHECK(I.contains(Interval(make_rat(1, 2), make_rat(1, 4))));
    CHECK_FALSE(I.properly_contains(Interval(make_rat(1, 2), make_rat(1, 4))));
    CHECK(I.properly_contains(Interval(make_rat(1, 2), make_rat(1, 8))));
    CHECK(I.dist(Rat(1)) == make_rat(1, 4));
    CHECK(I.dist(make_rat(1, 2)) == 0);
    CHECK_THROWS_AS(Interval(Rat(0), Rat(-1)), std::domain_error);
}

TEST_CASE("pow_rat handles negative exponents") {
    CHECK(pow_rat(make_rat(2, 3), 3) == make_rat(8, 27));
    CHECK(pow_rat(make_rat(2, 3), -2) == make_rat(9, 4));
    CHECK(pow_rat(make_rat(5, 7), 0) == 1);
}

TEST_CASE("root_floor integer k-th roots") {
    CHECK(root_floor(Rat(8), 2) == 2);
    CHECK(root_floor(Rat(8), 3) == 2);
    CHECK(root_floor(Rat(9), 2) == 3);
    CHECK(root_floor(make_rat(17, 2), 2) == 2);
}
