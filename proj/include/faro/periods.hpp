#pragma once

#include "faro/shuffles.hpp"

namespace faro {

// Period of the shuffle from the congruence it satisfies, without touching
// the permutation itself:
//   in-shuffle 2n        ord of 2 mod (2n+1)
//   out-shuffle 2n       ord of 2 mod (2n-1); the 2-card deck is the identity
//   Monge H1/H3, 2n      least u with 2^u = +-1 mod (4n+1)
//   Monge H2/H4, 2n      least u with 2^u = +-1 mod (4n-1)
//   odd cuts, 2n+1       ord of 2 mod (2n+1)
//   generalized in, kn   ord of k mod (kn+1)
//   generalized out, kn  ord of k mod (kn-1); kn = 2 is the identity
long long shuffle_period(const ShuffleSpec& spec);

// Closed forms available when the deck size is an exact power.
enum class CorollaryKind {
    InPow2,        // 2^p cards, in-shuffle: 2p
    InPow2Minus2,  // 2^p - 2 cards, in-shuffle: p      (p >= 2)
    OutPow2,       // 2^p cards, out-shuffle: p
    OutPow2Plus2,  // 2^p + 2 cards, out-shuffle: 2p
    MongePow2,     // 2^p cards, Monge: p + 1
    GenInPow,      // k packets of k^(p-1), generalized in: 2p
    GenOutPow,     // k packets of k^(p-1), generalized out: p
};
long long corollary_period(CorollaryKind kind, int p, int k = 2);

// Least r' >= 1 after which the cards occupying the bottom half are exactly
// the original bottom-half set (order ignored). No closed form is known;
// computed by direct iteration, never more than order(map) steps.
// Requires an even deck.
long long color_period(const ShuffleSpec& spec);

}  // namespace faro
