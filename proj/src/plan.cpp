#include "faro/plan.hpp"

#include <bit>
#include <stdexcept>

namespace faro {

namespace {

void check_letter(char letter) {
    if (letter != 'I' && letter != 'O')
        throw std::invalid_argument(std::string("plan letter must be I or O, got '") + letter +
                                    "'");
}

void check_even_deck(int cards) {
    if (cards < 2 || cards % 2 != 0)
        throw std::invalid_argument("deck size must be even and >= 2");
}

int log2_exact(int cards) {
    const auto u = static_cast<unsigned>(cards);
    if (cards < 2 || !std::has_single_bit(u))
        throw std::invalid_argument("deck size must be a power of two >= 2");
    return std::bit_width(u) - 1;
}

// One in-shuffle / out-shuffle step of a card sitting at position j.
int step_in(int j, int half) { return j < half ? 2 * j + 1 : 2 * j - 2 * half; }
int step_out(int j, int half) { return j < half ? 2 * j : 2 * j + 1 - 2 * half; }

std::string letters_msb_first(int value, int width, char one, char zero) {
    std::string s;
    s.reserve(static_cast<std::size_t>(width));
    for (int b = width - 1; b >= 0; --b) s.push_back(((value >> b) & 1) != 0 ? one : zero);
    return s;
}

void strip_leading(std::string& s, char c) {
    s.erase(0, s.find_first_not_of(c));
}

void strip_trailing(std::string& s, char c) {
    const auto last = s.find_last_not_of(c);
    s.erase(last == std::string::npos ? 0 : last + 1);
}

}  // namespace

ShufflePlan ShufflePlan::from_letters(std::string_view letters) {
    ShufflePlan plan;
    for (char c : letters) plan.append(c);
    return plan;
}

void ShufflePlan::append(char letter, int count) {
    check_letter(letter);
    if (count < 1) throw std::invalid_argument("plan block count must be >= 1");
    if (!blocks_.empty() && blocks_.back().letter == letter)
        blocks_.back().count += count;
    else
        blocks_.push_back({letter, count});
}

int ShufflePlan::length() const {
    int n = 0;
    for (const Block& b : blocks_) n += b.count;
    return n;
}

std::string ShufflePlan::letters() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(length()));
    for (const Block& b : blocks_) s.append(static_cast<std::size_t>(b.count), b.letter);
    return s;
}

TrackResult track_plan(const ShufflePlan& plan, int card, int cards) {
    check_even_deck(cards);
    if (card < 0 || card >= cards) throw std::out_of_range("track_plan: card out of range");
    const int half = cards / 2;
    TrackResult r{card, {}};
    r.trajectory.reserve(static_cast<std::size_t>(plan.length()));
    for (const auto& [letter, count] : plan.blocks()) {
        for (int t = 0; t < count; ++t) {
            r.final_position = letter == 'I' ? step_in(r.final_position, half)
                                             : step_out(r.final_position, half);
            r.trajectory.push_back(r.final_position);
        }
    }
    return r;
}

ShufflePlan elmsley_plan(int card, int position, int p) {
    if (p < 1 || p > 30) throw std::out_of_range("elmsley_plan: p out of range");
    const int m = 1 << p;
    if (card < 0 || card >= m || position < 0 || position >= m)
        throw std::out_of_range("elmsley_plan: card or position out of range");
    ShufflePlan plan;
    if (card == position) return plan;  // all-O, which moves nothing
    for (int b = p - 1; b >= 0; --b) {
        const bool differ = ((card >> b) & 1) != ((position >> b) & 1);
        plan.append(differ ? 'I' : 'O');
    }
    return plan;
}

ShufflePlan boundary_plan(BoundaryRole role, int i, int cards) {
    check_even_deck(cards);
    if (i < 0 || i >= cards) throw std::out_of_range("boundary_plan: argument out of range");

    if (role == BoundaryRole::BottomTo) {
        // Any even deck. Leading zeros contribute nothing, so the natural
        // bit width of i is the whole plan; each prefix of i's digits is the
        // card's position so far and must stay inside the deck.
        const int width = std::bit_width(static_cast<unsigned>(i));
        int prefix = 0;
        for (int b = width - 1; b >= 0; --b) {
            prefix = (prefix << 1) | ((i >> b) & 1);
            if (prefix > cards - 1)
                throw std::logic_error("boundary_plan: intermediate position left the deck");
        }
        return ShufflePlan::from_letters(letters_msb_first(i, width, 'I', 'O'));
    }

    const int p = log2_exact(cards);
    std::string s;
    switch (role) {
        case BoundaryRole::TopTo:
            s = letters_msb_first(i, p, 'O', 'I');
            strip_leading(s, 'O');  // out-shuffles fix the top card
            break;
        case BoundaryRole::ToBottom:
            s = letters_msb_first(i, p, 'I', 'O');
            strip_trailing(s, 'O');  // out-shuffles fix the bottom card
            break;
        case BoundaryRole::ToTop:
            s = letters_msb_first(i, p, 'O', 'I');
            strip_trailing(s, 'O');
            break;
        case BoundaryRole::BottomTo: break;  // handled above
    }
    return ShufflePlan::from_letters(s);
}

}  // namespace faro
