#include "faro/shuffles.hpp"

#include <array>
#include <utility>

namespace faro {

namespace {

void check_spec(const ShuffleSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("ShuffleSpec: n must be >= 1");
    if (is_generalized(spec.family) && spec.k < 2)
        throw std::invalid_argument("ShuffleSpec: generalized families need k >= 2");
}

// All map builders below produce 0-based placement maps.

std::vector<int> in_shuffle_map(int n) {
    std::vector<int> m(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i)
        m[static_cast<std::size_t>(i)] = (i % 2 == 0) ? i / 2 + n : (i - 1) / 2;
    return m;
}

std::vector<int> out_shuffle_map(int n) {
    std::vector<int> m(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i)
        m[static_cast<std::size_t>(i)] = (i % 2 == 0) ? i / 2 : (i - 1) / 2 + n;
    return m;
}

// The H1/H2 transfer shuffles are classically written as card -> position
// maps; their placement maps are the closed-form inverses used here.
std::vector<int> monge_h1_map(int n) {
    std::vector<int> m(static_cast<std::size_t>(2 * n));
    for (int j = 0; j < 2 * n; ++j)
        m[static_cast<std::size_t>(j)] = (j < n) ? 2 * n - 1 - 2 * j : 2 * j - 2 * n;
    return m;
}

std::vector<int> monge_h2_map(int n) {
    std::vector<int> m(static_cast<std::size_t>(2 * n));
    for (int j = 0; j < 2 * n; ++j)
        m[static_cast<std::size_t>(j)] = (j < n) ? 2 * n - 2 - 2 * j : 2 * j - 2 * n + 1;
    return m;
}

std::vector<int> monge_h3_map(int n) {
    std::vector<int> m(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i)
        m[static_cast<std::size_t>(i)] = (i % 2 == 1) ? (i - 1) / 2 : 2 * n - 1 - i / 2;
    return m;
}

std::vector<int> monge_h4_map(int n) {
    std::vector<int> m(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i)
        m[static_cast<std::size_t>(i)] = (i % 2 == 0) ? i / 2 : 2 * n - (i + 1) / 2;
    return m;
}

std::vector<int> odd_first_cut_map(int n) {
    // In-shuffle of the first 2n positions; the top card never moves.
    std::vector<int> m = in_shuffle_map(n);
    m.push_back(2 * n);
    return m;
}

std::vector<int> odd_second_cut_map(int n) {
    // The bottom card never moves; the rest is a shifted in-shuffle.
    std::vector<int> m;
    m.reserve(static_cast<std::size_t>(2 * n + 1));
    m.push_back(0);
    for (int v : in_shuffle_map(n)) m.push_back(v + 1);
    return m;
}

std::vector<int> generalized_in_map(int k, int n) {
    // Deal one card per packet starting with packet 1; each dealt card goes
    // under the previous one.
    std::vector<int> m(static_cast<std::size_t>(k * n));
    for (int i = 1; i <= k * n; ++i) {
        const int l = i % k;
        const int card = (l == 0) ? i / k : (i - l) / k + (k - l) * n + 1;
        m[static_cast<std::size_t>(i - 1)] = card - 1;
    }
    return m;
}

std::vector<int> generalized_out_map(int k, int n) {
    // Same deal starting with the last packet; the bottom card stays put.
    std::vector<int> m(static_cast<std::size_t>(k * n));
    for (int i = 0; i < k * n; ++i) {
        const int l = i % k;
        m[static_cast<std::size_t>(i)] = (i - l) / k + l * n;
    }
    return m;
}

}  // namespace

int deck_size(const ShuffleSpec& spec) {
    check_spec(spec);
    if (is_generalized(spec.family)) return spec.k * spec.n;
    if (is_odd_deck(spec.family)) return 2 * spec.n + 1;
    return 2 * spec.n;
}

Permutation build(const ShuffleSpec& spec) {
    check_spec(spec);
    switch (spec.family) {
        case Family::InShuffle: return Permutation(in_shuffle_map(spec.n));
        case Family::OutShuffle: return Permutation(out_shuffle_map(spec.n));
        case Family::MongeH1: return Permutation(monge_h1_map(spec.n));
        case Family::MongeH2: return Permutation(monge_h2_map(spec.n));
        case Family::MongeH3: return Permutation(monge_h3_map(spec.n));
        case Family::MongeH4: return Permutation(monge_h4_map(spec.n));
        case Family::OddFirstCut: return Permutation(odd_first_cut_map(spec.n));
        case Family::OddSecondCut: return Permutation(odd_second_cut_map(spec.n));
        case Family::GeneralizedIn: return Permutation(generalized_in_map(spec.k, spec.n));
        case Family::GeneralizedOut: return Permutation(generalized_out_map(spec.k, spec.n));
    }
    throw std::invalid_argument("build: unknown family");
}

Permutation symmetry(int m) {
    if (m < 1) throw std::invalid_argument("symmetry: size must be >= 1");
    std::vector<int> v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = m - 1 - i;
    return Permutation(std::move(v));
}

MapRole map_role(Family family) {
    switch (family) {
        case Family::MongeH1:
        case Family::MongeH2: return MapRole::Destination;
        default: return MapRole::Placement;
    }
}

Permutation destination_map(const ShuffleSpec& spec) { return inverse(build(spec)); }

bool is_generalized(Family family) {
    return family == Family::GeneralizedIn || family == Family::GeneralizedOut;
}

bool is_odd_deck(Family family) {
    return family == Family::OddFirstCut || family == Family::OddSecondCut;
}

int default_label_base(Family family) {
    switch (family) {
        case Family::InShuffle:
        case Family::MongeH1:
        case Family::MongeH3:
        case Family::OddFirstCut:
        case Family::GeneralizedIn: return 1;
        default: return 0;
    }
}

namespace {
constexpr std::array<std::pair<Family, const char*>, 10> kFamilyNames{{
    {Family::InShuffle, "in"},
    {Family::OutShuffle, "out"},
    {Family::MongeH1, "monge-h1"},
    {Family::MongeH2, "monge-h2"},
    {Family::MongeH3, "monge-h3"},
    {Family::MongeH4, "monge-h4"},
    {Family::OddFirstCut, "odd-first"},
    {Family::OddSecondCut, "odd-second"},
    {Family::GeneralizedIn, "gen-in"},
    {Family::GeneralizedOut, "gen-out"},
}};
}  // namespace

std::string to_string(Family family) {
    for (const auto& [f, name] : kFamilyNames)
        if (f == family) return name;
    return "?";
}

Family family_from_string(const std::string& name) {
    for (const auto& [f, n] : kFamilyNames)
        if (name == n) return f;
    throw std::invalid_argument("unknown shuffle family: " + name);
}

}  // namespace faro
