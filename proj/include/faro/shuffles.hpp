#pragma once

#include <string>

#include "faro/permutation.hpp"

namespace faro {

enum class Family {
    InShuffle,      // interleave starting with the second half; no fixed card
    OutShuffle,     // interleave starting with the first half; both ends fixed
    MongeH1,        // over/under transfer, second card goes under
    MongeH2,        // over/under transfer, second card goes over
    MongeH3,        // in-shuffle against the reversed second half
    MongeH4,        // out-shuffle against the reversed second half
    OddFirstCut,    // 2n+1 cards cut at n; top card stays put
    OddSecondCut,   // 2n+1 cards cut at n+1; bottom card stays put
    GeneralizedIn,  // k packets of n, dealt starting with the first packet
    GeneralizedOut, // k packets of n, dealt starting with the last packet
};

struct ShuffleSpec {
    Family family;
    int n;      // half-deck size, or packet size for the generalized families
    int k = 2;  // packet count, generalized families only
};

int deck_size(const ShuffleSpec& spec);

// The placement map of the shuffle: map[position] = card now at that position.
Permutation build(const ShuffleSpec& spec);

// i -> m-1-i
Permutation symmetry(int m);

// Direction in which the family's classical closed form is written. The
// MongeH1/MongeH2 formulas give card -> destination position; every other
// family's formula is already the placement (position -> card) map. build()
// returns the placement map for all families, inverting where needed.
enum class MapRole { Placement, Destination };
MapRole map_role(Family family);

// inverse(build(spec)): where each card lands after one shuffle.
Permutation destination_map(const ShuffleSpec& spec);

bool is_generalized(Family family);
bool is_odd_deck(Family family);

// Presentation default: the in-style families are classically numbered from 1,
// the out-style families from 0.
int default_label_base(Family family);

std::string to_string(Family family);
Family family_from_string(const std::string& name);

}  // namespace faro
