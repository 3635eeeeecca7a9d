#include "faro/modular.hpp"

#include <numeric>
#include <stdexcept>

#include <doctest.h>

using namespace faro;

TEST_CASE("gcd") {
    CHECK(gcd(11, 55) == 11);
    CHECK(gcd(1, 999) == 1);
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(0, 7) == 7);
    CHECK_THROWS_AS(gcd(0, 0), std::invalid_argument);
}

TEST_CASE("multiplicative order") {
    CHECK(multiplicative_order(2, 53) == 52);
    CHECK(multiplicative_order(2, 33) == 10);
    CHECK(multiplicative_order(2, 51) == 8);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK_THROWS_AS(multiplicative_order(2, 4), std::invalid_argument);   // not coprime
    CHECK_THROWS_AS(multiplicative_order(1, 7), std::invalid_argument);   // base too small
    CHECK_THROWS_AS(multiplicative_order(2, 1), std::invalid_argument);   // modulus too small
    CHECK_THROWS_AS(multiplicative_order(2, (std::uint64_t{1} << 63) + 2),
                    std::invalid_argument);
}

TEST_CASE("semi order") {
    auto s65 = semi_order(2, 65);
    CHECK(s65.exponent == 6);
    CHECK(s65.sign == -1);
    auto s105 = semi_order(2, 105);
    CHECK(s105.exponent == 12);
    CHECK(s105.sign == +1);
    auto s109 = semi_order(2, 109);
    CHECK(s109.exponent == 18);
    CHECK(s109.sign == -1);
    CHECK_THROWS_AS(semi_order(3, 9), std::invalid_argument);
}

TEST_CASE("semi order vs full order") {
    for (std::uint64_t m = 3; m <= 2001; m += 2) {
        const auto s = semi_order(2, m);
        const auto r = multiplicative_order(2, m);
        if (s.sign == -1)
            CHECK(r == 2 * s.exponent);
        else
            CHECK(r == s.exponent);
    }
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(53) == 52);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(33) == 20);
    CHECK(euler_phi(360) == 96);
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("order divides phi") {
    for (std::uint64_t m = 3; m <= 10000; ++m) {
        for (std::uint64_t a : {std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{10}}) {
            if (a >= m || std::gcd(a, m) != 1) continue;
            CHECK(euler_phi(m) % multiplicative_order(a, m) == 0);
        }
    }
}

TEST_CASE("phi divisibility at the power-of-two moduli") {
    for (int p = 1; p <= 20; ++p) {
        const std::uint64_t pow = std::uint64_t{1} << p;
        CHECK(euler_phi(pow - 1) % static_cast<std::uint64_t>(p) == 0);
        CHECK(euler_phi(pow + 1) % static_cast<std::uint64_t>(2 * p) == 0);
    }
}
