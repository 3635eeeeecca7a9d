#pragma once

#include <cstdint>
#include <vector>

namespace faro {

// k-th in-shuffle iterate of position i in a 2^p deck (0-based), 0 <= k <= 2p.
// For k <= p the low k bits of i move to the top, complemented; for k >= p
// the low k-p bits move to the top unchanged and the rest is complemented.
// The half-way iterate k = p is the reversal i -> 2^p - 1 - i.
int in_iterate_pow2(int i, int k, int p);

// k-th in-shuffle iterate of card label i in a (2^p - 2)-card deck, 1-based,
// 0 <= k <= p: a right rotation of the p-bit word of i by k positions.
// Labels 0 and 2^p - 1 are not cards of this deck and are rejected.
int in_iterate_pow2m2(int i, int k, int p);

enum class MongeVariant { H1, H2 };

// k-th Monge iterate of position 0 in a 2^p deck, 0 <= k <= p + 1.
// H1 reaches k ones over p-k zeros; H2 the same with the top one cleared.
// Both return to 0 at k = p + 1.
int monge_zero_iterate(MongeVariant variant, int k, int p);

struct BlockDecomposition {
    std::vector<int> lengths;  // maximal runs of equal bits, LSB to MSB;
                               // a leading-zero run is kept so the runs cover all p bits
    int lsb_bit;               // value of the rightmost run
    int width;                 // p
};

BlockDecomposition block_decompose(std::uint64_t i, int p);

}  // namespace faro
