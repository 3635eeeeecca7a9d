#include "faro/iterates.hpp"

#include <random>

#include <doctest.h>

#include "faro/shuffles.hpp"

using namespace faro;

TEST_CASE("power-of-two in-shuffle iterate") {
    CHECK(in_iterate_pow2(5, 3, 3) == 2);
    CHECK(in_iterate_pow2(0, 2, 3) == 6);
    CHECK(in_iterate_pow2(0, 6, 3) == 0);
    for (int i = 0; i < 8; ++i) CHECK(in_iterate_pow2(i, 0, 3) == i);
    CHECK_THROWS_AS(in_iterate_pow2(0, 7, 3), std::out_of_range);
    CHECK_THROWS_AS(in_iterate_pow2(8, 1, 3), std::out_of_range);
}

TEST_CASE("power-of-two iterates match the permutation, p <= 8") {
    for (int p = 1; p <= 8; ++p) {
        const int m = 1 << p;
        const Permutation f = build({Family::InShuffle, m / 2});
        Permutation cur = Permutation::identity(m);
        for (int k = 0; k <= 2 * p; ++k) {
            for (int i = 0; i < m; ++i) CHECK(in_iterate_pow2(i, k, p) == cur(i));
            cur = compose(cur, f);
        }
    }
}

TEST_CASE("half period reverses the deck") {
    for (int p = 1; p <= 12; ++p) {
        const int m = 1 << p;
        for (int i = 0; i < m; ++i) CHECK(in_iterate_pow2(i, p, p) == m - 1 - i);
    }
}

TEST_CASE("2^p-2 deck iterate is a digit rotation") {
    CHECK(in_iterate_pow2m2(1, 1, 3) == 4);
    CHECK(in_iterate_pow2m2(3, 1, 3) == 5);
    for (int i = 1; i <= 6; ++i) CHECK(in_iterate_pow2m2(i, 3, 3) == i);
    CHECK_THROWS_AS(in_iterate_pow2m2(0, 1, 3), std::out_of_range);
    CHECK_THROWS_AS(in_iterate_pow2m2(7, 1, 3), std::out_of_range);
    CHECK_THROWS_AS(in_iterate_pow2m2(1, 4, 3), std::out_of_range);

    // Oracle: the 1-based placement map of the 2^p - 2 deck.
    for (int p = 2; p <= 8; ++p) {
        const int m = (1 << p) - 2;
        const Permutation f = build({Family::InShuffle, m / 2});
        Permutation cur = Permutation::identity(m);
        for (int k = 0; k <= p; ++k) {
            for (int i = 1; i <= m; ++i) CHECK(in_iterate_pow2m2(i, k, p) == cur(i - 1) + 1);
            cur = compose(cur, f);
        }
    }
}

TEST_CASE("Monge zero iterates") {
    CHECK(monge_zero_iterate(MongeVariant::H1, 1, 3) == 4);
    CHECK(monge_zero_iterate(MongeVariant::H1, 3, 3) == 7);
    CHECK(monge_zero_iterate(MongeVariant::H2, 2, 3) == 5);
    CHECK(monge_zero_iterate(MongeVariant::H2, 4, 3) == 0);
    CHECK_THROWS_AS(monge_zero_iterate(MongeVariant::H1, 5, 3), std::out_of_range);

    // Oracle: iterate the transfer shuffles' card->position maps at 0.
    for (int p = 1; p <= 10; ++p) {
        const Permutation h1 = destination_map({Family::MongeH1, 1 << (p - 1)});
        const Permutation h2 = destination_map({Family::MongeH2, 1 << (p - 1)});
        int c1 = 0, c2 = 0;
        for (int k = 0; k <= p + 1; ++k) {
            CHECK(monge_zero_iterate(MongeVariant::H1, k, p) == c1);
            CHECK(monge_zero_iterate(MongeVariant::H2, k, p) == c2);
            c1 = h1(c1);
            c2 = h2(c2);
        }
    }
}

TEST_CASE("block decomposition") {
    const auto d = block_decompose(19, 5);  // 10011
    CHECK(d.lengths == std::vector<int>{2, 2, 1});
    CHECK(d.lsb_bit == 1);
    CHECK(d.width == 5);

    const auto zero = block_decompose(0, 3);
    CHECK(zero.lengths == std::vector<int>{3});
    CHECK(zero.lsb_bit == 0);

    const auto ones = block_decompose(7, 3);
    CHECK(ones.lengths == std::vector<int>{3});
    CHECK(ones.lsb_bit == 1);

    CHECK_THROWS_AS(block_decompose(8, 3), std::out_of_range);
}

TEST_CASE("block decomposition covers the word with alternating runs") {
    std::mt19937_64 rng(123456);
    for (int trial = 0; trial < 500; ++trial) {
        const int p = 1 + static_cast<int>(rng() % 40);
        const std::uint64_t i =
            p == 64 ? rng() : rng() & ((std::uint64_t{1} << p) - 1);
        const auto d = block_decompose(i, p);
        int total = 0;
        std::uint64_t rebuilt = 0;
        int pos = 0;
        int bit = d.lsb_bit;
        for (int len : d.lengths) {
            CHECK(len >= 1);
            for (int b = 0; b < len; ++b, ++pos)
                if (bit) rebuilt |= std::uint64_t{1} << pos;
            total += len;
            bit = 1 - bit;
        }
        CHECK(total == p);
        CHECK(rebuilt == i);
    }
}
