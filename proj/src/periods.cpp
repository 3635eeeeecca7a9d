#include "faro/periods.hpp"

#include <stdexcept>

#include "faro/modular.hpp"

namespace faro {

namespace {

long long ord(std::uint64_t a, std::uint64_t m) {
    // Modulus 1 only arises for the 2-card out-shuffle, which is the identity.
    if (m < 2) return 1;
    return static_cast<long long>(multiplicative_order(a, m));
}

}  // namespace

long long shuffle_period(const ShuffleSpec& spec) {
    (void)deck_size(spec);  // validates n and k
    const auto n = static_cast<std::uint64_t>(spec.n);
    const auto k = static_cast<std::uint64_t>(spec.k);
    switch (spec.family) {
        case Family::InShuffle: return ord(2, 2 * n + 1);
        case Family::OutShuffle: return ord(2, 2 * n - 1);
        case Family::MongeH1:
        case Family::MongeH3: return static_cast<long long>(semi_order(2, 4 * n + 1).exponent);
        case Family::MongeH2:
        case Family::MongeH4: return static_cast<long long>(semi_order(2, 4 * n - 1).exponent);
        case Family::OddFirstCut:
        case Family::OddSecondCut: return ord(2, 2 * n + 1);
        case Family::GeneralizedIn: return ord(k, k * n + 1);
        case Family::GeneralizedOut: return ord(k, k * n - 1);
    }
    throw std::invalid_argument("shuffle_period: unknown family");
}

long long corollary_period(CorollaryKind kind, int p, int k) {
    const int min_p = (kind == CorollaryKind::InPow2Minus2) ? 2 : 1;
    if (p < min_p) throw std::invalid_argument("corollary_period: p out of range");
    switch (kind) {
        case CorollaryKind::InPow2: return 2LL * p;
        case CorollaryKind::InPow2Minus2: return p;
        case CorollaryKind::OutPow2: return p;
        case CorollaryKind::OutPow2Plus2: return 2LL * p;
        case CorollaryKind::MongePow2: return p + 1LL;
        case CorollaryKind::GenInPow:
            if (k < 2) throw std::invalid_argument("corollary_period: k must be >= 2");
            return 2LL * p;
        case CorollaryKind::GenOutPow:
            if (k < 2) throw std::invalid_argument("corollary_period: k must be >= 2");
            return p;
    }
    throw std::invalid_argument("corollary_period: unknown kind");
}

long long color_period(const ShuffleSpec& spec) {
    const int m = deck_size(spec);
    if (m % 2 != 0) throw std::invalid_argument("color_period: deck size must be even");
    const int half = m / 2;
    const Permutation map = build(spec);
    const long long full = order(map);

    auto bottom_restored = [half](const Permutation& q) {
        for (int i = 0; i < half; ++i)
            if (q(i) >= half) return false;
        return true;
    };

    Permutation cur = map;
    for (long long t = 1; t <= full; ++t) {
        if (bottom_restored(cur)) return t;
        cur = compose(cur, map);
    }
    // t = order(map) restores everything, so reaching this line means the
    // iteration above is broken.
    throw std::logic_error("color_period: halves never restored within the full period");
}

}  // namespace faro
