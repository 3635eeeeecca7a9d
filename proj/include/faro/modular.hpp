#pragma once

#include <cstdint>

namespace faro {

// Rejects gcd(0, 0).
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Count of 1 <= j <= m coprime to m, by trial-division factorization.
std::uint64_t euler_phi(std::uint64_t m);

// Least r >= 1 with a^r = 1 (mod m). Requires a >= 2, m >= 2, gcd(a, m) = 1,
// m < 2^63. Computed by a linear scan with a running product, which keeps
// this routine usable as an independent oracle for the period theorems.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

struct SemiOrder {
    std::uint64_t exponent;  // least u >= 1 with a^u = +-1 (mod m)
    int sign;                // +1 or -1, whichever congruence is realized at u
};

// When sign is -1 the full multiplicative order of a is 2*exponent;
// when sign is +1 the two coincide.
SemiOrder semi_order(std::uint64_t a, std::uint64_t m);

}  // namespace faro
