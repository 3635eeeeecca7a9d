#include "faro/permutation.hpp"

#include <cstdint>
#include <limits>
#include <numeric>

namespace faro {

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
    if (map_.empty()) throw std::invalid_argument("Permutation: map must not be empty");
    std::vector<bool> seen(map_.size(), false);
    for (int v : map_) {
        if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: map is not a bijection of {0..m-1}");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int size) {
    if (size < 1) throw std::invalid_argument("identity: size must be >= 1");
    std::vector<int> m(static_cast<std::size_t>(size));
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> m(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) m[static_cast<std::size_t>(i)] = p(q(i));
    return Permutation(std::move(m));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> m(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) m[static_cast<std::size_t>(p(i))] = i;
    return Permutation(std::move(m));
}

Permutation power(const Permutation& p, long long k) {
    const int m = p.size();
    std::vector<int> out(static_cast<std::size_t>(m), -1);
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    std::vector<int> cycle;
    for (int s = 0; s < m; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        cycle.clear();
        for (int c = s; !seen[static_cast<std::size_t>(c)]; c = p(c)) {
            seen[static_cast<std::size_t>(c)] = true;
            cycle.push_back(c);
        }
        const long long len = static_cast<long long>(cycle.size());
        const long long shift = ((k % len) + len) % len;
        for (std::size_t t = 0; t < cycle.size(); ++t)
            out[static_cast<std::size_t>(cycle[t])] =
                cycle[(t + static_cast<std::size_t>(shift)) % cycle.size()];
    }
    return Permutation(std::move(out));
}

long long order(const Permutation& p) {
    long long acc = 1;
    for (const auto& cycle : orbit_decomposition(p).orbits) {
        const long long len = static_cast<long long>(cycle.size());
        const long long g = std::gcd(acc, len);
        const __int128 next = static_cast<__int128>(acc / g) * len;
        if (next > std::numeric_limits<long long>::max())
            throw std::overflow_error("order: lcm of cycle lengths exceeds 64 bits");
        acc = static_cast<long long>(next);
    }
    return acc;
}

OrbitDecomposition orbit_decomposition(const Permutation& p) {
    const int m = p.size();
    OrbitDecomposition d;
    d.orbit_of.assign(static_cast<std::size_t>(m), -1);
    // Scanning positions in increasing order makes each cycle start at its
    // minimum and lists the cycles sorted by that minimum.
    for (int s = 0; s < m; ++s) {
        if (d.orbit_of[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(d.orbits.size());
        std::vector<int> cycle;
        for (int c = s; d.orbit_of[static_cast<std::size_t>(c)] < 0; c = p(c)) {
            d.orbit_of[static_cast<std::size_t>(c)] = id;
            cycle.push_back(c);
        }
        d.orbits.push_back(std::move(cycle));
    }
    return d;
}

}  // namespace faro
