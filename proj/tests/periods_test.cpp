#include "faro/periods.hpp"

#include <numeric>
#include <set>

#include <doctest.h>

#include "faro/modular.hpp"

using namespace faro;

TEST_CASE("theorem periods") {
    CHECK(shuffle_period({Family::InShuffle, 26}) == 52);
    CHECK(shuffle_period({Family::InShuffle, 15}) == 5);
    CHECK(shuffle_period({Family::InShuffle, 1}) == 2);
    CHECK(shuffle_period({Family::OutShuffle, 1}) == 1);  // 2-card deck is the identity
    CHECK(shuffle_period({Family::MongeH1, 21}) == 8);
    CHECK(shuffle_period({Family::MongeH2, 1}) == 1);
    CHECK(shuffle_period({Family::MongeH2, 32}) == 7);
    CHECK(shuffle_period({Family::OddFirstCut, 2}) == 4);
    CHECK(shuffle_period({Family::OddSecondCut, 2}) == 4);
    CHECK(shuffle_period({Family::GeneralizedIn, 9, 3}) == 6);
    CHECK(shuffle_period({Family::GeneralizedOut, 1, 2}) == 1);
    CHECK_THROWS_AS(shuffle_period({Family::InShuffle, 0}), std::invalid_argument);
}

TEST_CASE("theorem agrees with the cycle oracle at small sizes") {
    for (int n = 1; n <= 32; ++n)
        for (Family f : {Family::InShuffle, Family::OutShuffle, Family::MongeH1,
                         Family::MongeH2, Family::MongeH3, Family::MongeH4,
                         Family::OddFirstCut, Family::OddSecondCut}) {
            const ShuffleSpec spec{f, n};
            CHECK(shuffle_period(spec) == order(build(spec)));
        }
    for (int k = 2; k <= 5; ++k)
        for (int n = 1; n <= 12; ++n)
            for (Family f : {Family::GeneralizedIn, Family::GeneralizedOut}) {
                const ShuffleSpec spec{f, n, k};
                CHECK(shuffle_period(spec) == order(build(spec)));
            }
}

TEST_CASE("corollary closed forms") {
    CHECK(corollary_period(CorollaryKind::InPow2, 5) == 10);
    CHECK(corollary_period(CorollaryKind::MongePow2, 5) == 6);
    CHECK(corollary_period(CorollaryKind::OutPow2, 1) == 1);
    CHECK(corollary_period(CorollaryKind::InPow2Minus2, 5) == 5);
    CHECK(corollary_period(CorollaryKind::OutPow2Plus2, 3) == 6);
    CHECK(corollary_period(CorollaryKind::GenInPow, 3, 3) == 6);
    CHECK(corollary_period(CorollaryKind::GenOutPow, 3, 3) == 3);
    CHECK_THROWS_AS(corollary_period(CorollaryKind::InPow2, 0), std::invalid_argument);
    CHECK_THROWS_AS(corollary_period(CorollaryKind::InPow2Minus2, 1), std::invalid_argument);
    CHECK_THROWS_AS(corollary_period(CorollaryKind::GenInPow, 3, 1), std::invalid_argument);
}

namespace {

// Independent oracle: deal an actual two-color deck and shuffle it until the
// bottom half is one color again.
long long color_period_by_simulation(const ShuffleSpec& spec) {
    const Permutation map = build(spec);
    const int m = map.size();
    const int half = m / 2;
    std::vector<char> deck;
    for (int i = 0; i < m; ++i) deck.push_back(i < half ? 'G' : 'R');
    const std::vector<char> start = deck;
    for (long long t = 1;; ++t) {
        deck = apply(map, deck);
        if (deck == start) return t;
    }
}

}  // namespace

TEST_CASE("color period") {
    CHECK(color_period({Family::InShuffle, 1}) == 2);
    CHECK(color_period({Family::InShuffle, 2}) == 4);
    CHECK(color_period({Family::InShuffle, 4}) == 6);
    CHECK_THROWS_AS(color_period({Family::OddFirstCut, 3}), std::invalid_argument);

    for (int n = 1; n <= 24; ++n)
        for (Family f : {Family::InShuffle, Family::OutShuffle, Family::MongeH1,
                         Family::MongeH2, Family::MongeH3, Family::MongeH4}) {
            const ShuffleSpec spec{f, n};
            CHECK(color_period(spec) == color_period_by_simulation(spec));
        }
}

TEST_CASE("color period divides the full period") {
    int strict_count = 0;
    for (int n = 1; n <= 50; ++n)
        for (Family f : {Family::InShuffle, Family::OutShuffle, Family::MongeH1,
                         Family::MongeH2, Family::MongeH3, Family::MongeH4}) {
            const ShuffleSpec spec{f, n};
            const long long rp = color_period(spec);
            const long long r = order(build(spec));
            CHECK(r % rp == 0);
            if (rp < r) ++strict_count;
        }
    // Record how often the halves come back before the full order does;
    // nothing is asserted about the count itself.
    MESSAGE("strict color-period cases (r' < r) among 300 decks: " << strict_count);
}

TEST_CASE("Monge half-period sign") {
    // Whenever 2^u = -1 at the semi order, the H3 map still needs the full u
    // shuffles to come back.
    for (int n = 1; n <= 100; ++n) {
        const auto s = semi_order(2, 4 * static_cast<std::uint64_t>(n) + 1);
        if (s.sign != -1) continue;
        const Permutation h3 = build({Family::MongeH3, n});
        const long long u = shuffle_period({Family::MongeH3, n});
        CHECK(power(h3, u) == Permutation::identity(2 * n));
        CHECK(order(h3) == u);
    }
}

TEST_CASE("in-shuffle cycle lengths divide the cycle of card 1") {
    for (int n = 1; n <= 50; ++n) {
        const auto d = orbit_decomposition(build({Family::InShuffle, n}));
        const auto len_of = [&](int pos) {
            return d.orbits[static_cast<std::size_t>(d.orbit_of[static_cast<std::size_t>(pos)])]
                .size();
        };
        const std::size_t lead = len_of(0);
        for (int i = 0; i < 2 * n; ++i) {
            CHECK(lead % len_of(i) == 0);
            if (std::gcd(i + 1, 2 * n + 1) == 1) CHECK(len_of(i) == lead);
        }
    }
}
