#include "faro/modular.hpp"

#include <numeric>
#include <stdexcept>

namespace faro {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 63;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

void check_order_args(std::uint64_t a, std::uint64_t m) {
    if (a < 2) throw std::invalid_argument("order: base must be >= 2");
    if (m < 2) throw std::invalid_argument("order: modulus must be >= 2");
    if (m > kMaxModulus) throw std::invalid_argument("order: modulus above 2^63");
    if (std::gcd(a, m) != 1)
        throw std::invalid_argument("order: base and modulus are not coprime");
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
    return std::gcd(a, b);
}

std::uint64_t euler_phi(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("euler_phi: m must be >= 1");
    std::uint64_t phi = m;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        phi -= phi / d;
        while (m % d == 0) m /= d;
    }
    if (m > 1) phi -= phi / m;
    return phi;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    check_order_args(a, m);
    std::uint64_t x = 1;
    for (std::uint64_t r = 1; r < m; ++r) {
        x = mulmod(x, a, m);
        if (x == 1) return r;
    }
    throw std::logic_error("multiplicative_order: no order below the modulus");
}

SemiOrder semi_order(std::uint64_t a, std::uint64_t m) {
    check_order_args(a, m);
    std::uint64_t x = 1;
    for (std::uint64_t u = 1; u <= m; ++u) {
        x = mulmod(x, a, m);
        if (x == 1) return {u, +1};
        if (x == m - 1) return {u, -1};
    }
    throw std::logic_error("semi_order: no exponent below the modulus");
}

}  // namespace faro
