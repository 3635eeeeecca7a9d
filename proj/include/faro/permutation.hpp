#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace faro {

// Bijection of {0..m-1}. For shuffles this is the placement map:
// map[position] = card occupying that position after one shuffle, so
// iterating it from the identity deck gives the k-th shuffle iterate.
class Permutation {
public:
    explicit Permutation(std::vector<int> map);
    static Permutation identity(int size);

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& map() const { return map_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> map_;
};

// (p after q)(i) = p(q(i))
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// k-fold self-composition, negative k via the inverse. Computed by cycle
// jumping, so exponents up to 2^63 stay O(m).
Permutation power(const Permutation& p, long long k);

// Least r >= 1 with p^r = identity: lcm of the cycle lengths.
long long order(const Permutation& p);

// result[i] = deck[p(i)]
template <typename T>
std::vector<T> apply(const Permutation& p, const std::vector<T>& deck) {
    if (static_cast<int>(deck.size()) != p.size())
        throw std::invalid_argument("apply: deck has " + std::to_string(deck.size()) +
                                    " cards, permutation expects " + std::to_string(p.size()));
    std::vector<T> out;
    out.reserve(deck.size());
    for (int i = 0; i < p.size(); ++i) out.push_back(deck[static_cast<std::size_t>(p(i))]);
    return out;
}

struct OrbitDecomposition {
    std::vector<std::vector<int>> orbits;  // cycles in traversal order, minimum element first,
                                           // sorted by minimum element
    std::vector<int> orbit_of;             // position -> index into orbits
};

OrbitDecomposition orbit_decomposition(const Permutation& p);

}  // namespace faro
