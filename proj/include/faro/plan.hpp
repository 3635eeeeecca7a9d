#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace faro {

// Run-length encoded sequence of in ('I') / out ('O') shuffles.
// Text form: the letters concatenated, empty string for the empty plan.
class ShufflePlan {
public:
    struct Block {
        char letter;  // 'I' or 'O'
        int count;    // >= 1
        bool operator==(const Block&) const = default;
    };

    ShufflePlan() = default;
    static ShufflePlan from_letters(std::string_view letters);

    // Extends the plan, merging into a trailing block of the same letter.
    void append(char letter, int count = 1);

    const std::vector<Block>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }
    int length() const;
    std::string letters() const;

    bool operator==(const ShufflePlan&) const = default;

private:
    std::vector<Block> blocks_;
};

struct TrackResult {
    int final_position;
    std::vector<int> trajectory;  // position after each executed shuffle
};

// Follows one card through the plan in an even deck of `cards` cards,
// starting from the identity order.
TrackResult track_plan(const ShufflePlan& plan, int card, int cards);

// Plan moving a given card to a given position in a 2^p deck: compare the
// binary digits of card and position from the top bit down, emitting I where
// they differ and O where they coincide. Card and position play symmetric
// roles. Returns the empty plan when they are equal; otherwise the plan has
// exactly p letters, leading O's included.
ShufflePlan elmsley_plan(int card, int position, int p);

enum class BoundaryRole {
    BottomTo,  // bottom card to position i; works on any even deck
    TopTo,     // top card to position i; 2^p decks only
    ToBottom,  // card i to the bottom; 2^p decks only
    ToTop,     // card i to the top; 2^p decks only
};

// The binary-digit plans for the four boundary moves. BottomTo/ToBottom read
// 1 -> I, 0 -> O; TopTo/ToTop invert the letters. The run of shuffles that
// would only hold the boundary card in place is dropped: the leading O-run
// for BottomTo/TopTo, the trailing one for ToBottom/ToTop.
ShufflePlan boundary_plan(BoundaryRole role, int i, int cards);

}  // namespace faro
