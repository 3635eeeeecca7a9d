#include "faro/iterates.hpp"

#include <stdexcept>

namespace faro {

namespace {

constexpr int kMaxWidth = 30;  // keeps 2^p and every intermediate in int range

void check_width(int p, int max_width = kMaxWidth) {
    if (p < 1 || p > max_width) throw std::out_of_range("bit width p out of range");
}

int low_mask(int bits) { return (1 << bits) - 1; }

}  // namespace

int in_iterate_pow2(int i, int k, int p) {
    check_width(p);
    if (i < 0 || i >= (1 << p)) throw std::out_of_range("in_iterate_pow2: i out of range");
    if (k < 0 || k > 2 * p) throw std::out_of_range("in_iterate_pow2: k out of range");
    if (k <= p) {
        const int low = i & low_mask(k);
        return ((~low & low_mask(k)) << (p - k)) | (i >> k);
    }
    const int kp = k - p;
    const int low = i & low_mask(kp);
    const int high = i >> kp;
    return (low << (p - kp)) | (~high & low_mask(p - kp));
}

int in_iterate_pow2m2(int i, int k, int p) {
    if (p < 2) throw std::out_of_range("in_iterate_pow2m2: p must be >= 2");
    check_width(p);
    if (i <= 0 || i >= low_mask(p))
        throw std::out_of_range("in_iterate_pow2m2: label must be in 1..2^p-2");
    if (k < 0 || k > p) throw std::out_of_range("in_iterate_pow2m2: k out of range");
    const int r = k % p;
    if (r == 0) return i;
    return ((i >> r) | (i << (p - r))) & low_mask(p);
}

int monge_zero_iterate(MongeVariant variant, int k, int p) {
    check_width(p);
    if (k < 0 || k > p + 1) throw std::out_of_range("monge_zero_iterate: k out of range");
    if (k == 0 || k == p + 1) return 0;
    // H1 after k steps: k ones over p-k zeros. H2: all ones except a single
    // zero at bit p-k.
    if (variant == MongeVariant::H1) return (1 << p) - (1 << (p - k));
    return ((1 << p) - 1) - (1 << (p - k));
}

BlockDecomposition block_decompose(std::uint64_t i, int p) {
    if (p < 1 || p > 64) throw std::out_of_range("block_decompose: p out of range");
    if (p < 64 && (i >> p) != 0) throw std::out_of_range("block_decompose: i out of range");
    BlockDecomposition d;
    d.width = p;
    d.lsb_bit = static_cast<int>(i & 1);
    int run = 0;
    int prev = d.lsb_bit;
    for (int b = 0; b < p; ++b) {
        const int bit = static_cast<int>((i >> b) & 1);
        if (bit == prev) {
            ++run;
        } else {
            d.lengths.push_back(run);
            run = 1;
            prev = bit;
        }
    }
    d.lengths.push_back(run);
    return d;
}

}  // namespace faro
