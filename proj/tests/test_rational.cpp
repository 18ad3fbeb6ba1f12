#include "ramsey/rational.hpp"

#include <doctest.h>

#include <random>

using namespace ramsey;

TEST_SUITE("rational") {

TEST_CASE("parse and format round-trip") {
    CHECK(format_rational(parse_rational("3/4")) == "3/4");
    CHECK(format_rational(parse_rational("-6/8")) == "-3/4");
    CHECK(format_rational(parse_rational("0.25")) == "1/4");
    CHECK(format_rational(parse_rational("-3.5e-2")) == "-7/200");
    CHECK(format_rational(parse_rational("17")) == "17");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("floor helpers") {
    CHECK(floor_rational(Rational(7, 2)) == 3);
    CHECK(floor_rational(Rational(-7, 2)) == -4);
    CHECK(ceil_rational(Rational(7, 2)) == 4);
    CHECK(floor_even(Rational(9, 2)) == 4);   // 4.5 -> 4
    CHECK(floor_even(Rational(6)) == 6);
    CHECK(floor_odd(Rational(9, 2)) == 3);    // 4.5 -> 3
    CHECK(floor_odd(Rational(7)) == 7);
    CHECK_THROWS_AS(floor_even(Rational(1)), std::invalid_argument);
}

TEST_CASE("cmp_root is the sign of x - y^(1/root)") {
    // sqrt(2): 99/70 > sqrt(2) > 140/99
    CHECK(cmp_root(Rational(99, 70), Rational(2), 2) > 0);
    CHECK(cmp_root(Rational(140, 99), Rational(2), 2) < 0);
    CHECK(cmp_root(Rational(3, 2), Rational(27, 8), 3) == 0);  // (3/2)^3 = 27/8
    CHECK(cmp_root(Rational(0), Rational(0), 5) == 0);
    // Negative x against a positive root is always below.
    CHECK(cmp_root(Rational(-1), Rational(1, 1000000), 4) < 0);
}

TEST_CASE("int_meets_threshold matches the closed form on perfect powers") {
    // threshold = (a - b * eta^(1/2)) * k with eta = 1/4: s >= (a - b/2) k
    const Rational a(3), b(1), eta(1, 4), k(10);
    CHECK(int_meets_threshold(25, a, b, eta, 2, k));
    CHECK_FALSE(int_meets_threshold(24, a, b, eta, 2, k));
    CHECK(min_int_meeting_threshold(a, b, eta, 2, k) == 25);
}

TEST_CASE("min_int_meeting_threshold is minimal: property over random parameters") {
    std::mt19937_64 rng(20250814);
    std::uniform_int_distribution<int> num(0, 40), den(1, 9), root_pick(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng) % 8, den(rng));
        const Rational eta(num(rng) % 10, den(rng) + 3);
        const unsigned root = static_cast<unsigned>(root_pick(rng));
        const Rational k(1 + num(rng) % 12);
        const long long s = min_int_meeting_threshold(a, b, eta, root, k);
        CHECK(int_meets_threshold(s, a, b, eta, root, k));
        if (s > 0) CHECK_FALSE(int_meets_threshold(s - 1, a, b, eta, root, k));
    }
}

TEST_CASE("rational_root_floor brackets the true root") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(0, 50), den(1, 20), root_pick(1, 8);
    for (int trial = 0; trial < 120; ++trial) {
        const Rational y(num(rng), den(rng));
        const unsigned root = static_cast<unsigned>(root_pick(rng));
        const unsigned bits = 24;
        const Rational f = rational_root_floor(y, root, bits);
        CHECK(f >= 0);
        CHECK(pow_rational(f, root) <= y);
        const Rational step(1, 1 << bits);
        CHECK(pow_rational(f + step, root) > y);
    }
}

TEST_CASE("approx_decimal marks truncation") {
    CHECK(approx_decimal(Rational(1, 4), 6) == "0.25");
    CHECK(approx_decimal(Rational(1, 3), 3).back() == '~');
}

}  // TEST_SUITE
