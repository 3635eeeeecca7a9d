#include "faro/cli.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "faro/periods.hpp"
#include "faro/plan.hpp"
#include "faro/shuffles.hpp"

namespace faro::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCrossCheck = 3;

// Oracle cross-checks are cheap up to this deck size and run on every
// period query.
constexpr int kOracleDeckLimit = 512;

bool color_enabled(const std::ostream& out) {
    if (&out != &std::cout) return false;
    if (const char* env = std::getenv("FARO_COLOR"); env && std::string_view(env) == "0")
        return false;
    return isatty(fileno(stdout)) != 0;
}

std::string paint(const std::string& text, const char* code, bool color) {
    if (!color) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

struct SpecFlags {
    std::string family = "in";
    int cards = 0;
    int k = 0;  // 0 = not given
};

void add_spec_flags(CLI::App* cmd, SpecFlags& flags) {
    cmd->add_option("--family", flags.family,
                    "shuffle family: in, out, monge-h1..monge-h4, odd-first, odd-second, "
                    "gen-in, gen-out")
        ->required();
    cmd->add_option("--cards", flags.cards, "deck size")->required();
    cmd->add_option("--k", flags.k, "packet count (gen-in / gen-out only)");
}

ShuffleSpec spec_from_flags(const SpecFlags& flags) {
    const Family family = family_from_string(flags.family);
    const int cards = flags.cards;
    ShuffleSpec spec{family, 1, 2};
    if (is_generalized(family)) {
        if (flags.k < 2) throw CLI::ValidationError("--k", "gen families need --k >= 2");
        if (cards < flags.k || cards % flags.k != 0)
            throw CLI::ValidationError("--cards", "deck size must be a multiple of --k");
        spec.k = flags.k;
        spec.n = cards / flags.k;
        return spec;
    }
    if (flags.k != 0)
        throw CLI::ValidationError("--k", "only meaningful for gen-in / gen-out");
    if (is_odd_deck(family)) {
        if (cards < 3 || cards % 2 == 0)
            throw CLI::ValidationError("--cards", "odd families need an odd deck >= 3");
        spec.n = (cards - 1) / 2;
        return spec;
    }
    if (cards < 2 || cards % 2 != 0)
        throw CLI::ValidationError("--cards", "deck size must be even and >= 2");
    spec.n = cards / 2;
    return spec;
}

std::string join(const std::vector<int>& values, char sep) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s.push_back(sep);
        s += std::to_string(values[i]);
    }
    return s;
}

// ---- period ----------------------------------------------------------

int cmd_period(const SpecFlags& flags, const std::string& format, std::ostream& out,
               std::ostream& err, bool color) {
    const ShuffleSpec spec = spec_from_flags(flags);
    const long long theorem = shuffle_period(spec);

    const int cards = deck_size(spec);
    bool checked = false;
    long long oracle = -1;
    if (cards <= kOracleDeckLimit) {
        checked = true;
        oracle = order(build(spec));
    }
    const bool mismatch = checked && oracle != theorem;

    if (format == "json") {
        ordered_json j;
        j["family"] = flags.family;
        j["cards"] = cards;
        if (is_generalized(spec.family)) j["k"] = spec.k;
        j["theorem"] = theorem;
        j["oracle"] = checked ? ordered_json(oracle) : ordered_json(nullptr);
        out << j.dump(2) << '\n';
    } else if (format == "csv") {
        out << "family,cards,k,theorem,oracle\n";
        out << flags.family << ',' << cards << ','
            << (is_generalized(spec.family) ? std::to_string(spec.k) : "") << ',' << theorem
            << ',' << (checked ? std::to_string(oracle) : "") << '\n';
    } else {
        out << "family  " << flags.family << '\n';
        out << "cards   " << cards << '\n';
        if (is_generalized(spec.family)) out << "packets " << spec.k << '\n';
        out << "theorem " << theorem << '\n';
        if (checked)
            out << "oracle  " << oracle << ' '
                << (mismatch ? paint("[MISMATCH]", "31", color) : paint("[ok]", "32", color))
                << '\n';
        else
            out << "oracle  skipped (deck larger than " << kOracleDeckLimit << ")\n";
    }

    if (mismatch) {
        err << "internal error: theorem period " << theorem << " disagrees with cycle order "
            << oracle << '\n';
        return kExitCrossCheck;
    }
    return kExitOk;
}

// ---- table -----------------------------------------------------------

int cmd_table(int max_cards, const std::string& format, std::ostream& out) {
    if (max_cards < 2 || max_cards % 2 != 0)
        throw CLI::ValidationError("--max", "must be an even deck size >= 2");

    std::vector<int> cards;
    std::vector<long long> in_row, h1_row, h2_row;
    for (int m = 2; m <= max_cards; m += 2) {
        cards.push_back(m);
        in_row.push_back(shuffle_period({Family::InShuffle, m / 2}));
        h1_row.push_back(shuffle_period({Family::MongeH1, m / 2}));
        h2_row.push_back(shuffle_period({Family::MongeH2, m / 2}));
    }

    if (format == "json") {
        ordered_json j;
        j["cards"] = cards;
        j["in-shuffle"] = in_row;
        j["in-monge"] = h1_row;
        j["out-monge"] = h2_row;
        out << j.dump(2) << '\n';
        return kExitOk;
    }

    auto row_csv = [&](const char* label, const std::vector<long long>& vals) {
        out << label;
        for (long long v : vals) out << ',' << v;
        out << '\n';
    };
    if (format == "csv") {
        out << "cards";
        for (int m : cards) out << ',' << m;
        out << '\n';
        row_csv("in-shuffle", in_row);
        row_csv("in-monge", h1_row);
        row_csv("out-monge", h2_row);
        return kExitOk;
    }

    // Text: blocks of eight columns.
    constexpr int kBlock = 8;
    for (std::size_t base = 0; base < cards.size(); base += kBlock) {
        if (base > 0) out << '\n';
        const std::size_t stop = std::min(cards.size(), base + kBlock);
        auto row_text = [&](const char* label, auto value_at) {
            out << std::left << std::setw(11) << label << std::right;
            for (std::size_t c = base; c < stop; ++c) out << std::setw(5) << value_at(c);
            out << '\n';
        };
        row_text("cards", [&](std::size_t c) { return static_cast<long long>(cards[c]); });
        row_text("in-shuffle", [&](std::size_t c) { return in_row[c]; });
        row_text("in-monge", [&](std::size_t c) { return h1_row[c]; });
        row_text("out-monge", [&](std::size_t c) { return h2_row[c]; });
    }
    return kExitOk;
}

// ---- orbits ----------------------------------------------------------

int cmd_orbits(const SpecFlags& flags, int base, long long power_arg, const std::string& format,
               std::ostream& out) {
    const ShuffleSpec spec = spec_from_flags(flags);
    Permutation map = build(spec);
    if (power_arg != 1) map = power(map, power_arg);
    const OrbitDecomposition decomp = orbit_decomposition(map);

    if (base < 0) base = default_label_base(spec.family);

    std::vector<std::vector<int>> orbits;
    orbits.reserve(decomp.orbits.size());
    for (const auto& cycle : decomp.orbits) {
        std::vector<int> members = cycle;
        std::sort(members.begin(), members.end());
        for (int& v : members) v += base;
        orbits.push_back(std::move(members));
    }

    if (format == "json") {
        ordered_json j;
        j["family"] = flags.family;
        j["cards"] = deck_size(spec);
        j["base"] = base;
        j["orbits"] = orbits;
        out << j.dump(2) << '\n';
    } else if (format == "csv") {
        for (const auto& members : orbits) out << join(members, ',') << '\n';
    } else {
        for (const auto& members : orbits)
            out << members.front() << ": " << join(members, ' ') << '\n';
    }
    return kExitOk;
}

// ---- plan ------------------------------------------------------------

void print_plan(const ShufflePlan& plan, int start, const TrackResult& tracked,
                std::ostream& out) {
    out << plan.letters() << '\n';
    out << "trajectory: " << start;
    for (int pos : tracked.trajectory) out << ' ' << pos;
    out << '\n';
}

int cmd_plan_move(int card, int to, int cards, std::ostream& out) {
    const auto u = static_cast<unsigned>(cards);
    if (cards < 2 || (u & (u - 1)) != 0)
        throw CLI::ValidationError("--cards", "plan move needs a power-of-two deck");
    const int p = std::bit_width(u) - 1;
    if (card < 0 || card >= cards || to < 0 || to >= cards)
        throw CLI::ValidationError("--card/--to", "out of deck range");

    const ShufflePlan plan = elmsley_plan(card, to, p);
    print_plan(plan, card, track_plan(plan, card, cards), out);

    // The digit-comparison plan is not minimal; flag the cases where one
    // shuffle already does the job.
    if (plan.length() > 1) {
        for (char letter : {'I', 'O'}) {
            ShufflePlan single;
            single.append(letter);
            if (track_plan(single, card, cards).final_position == to)
                out << "note: a single " << (letter == 'I' ? "in" : "out")
                    << "-shuffle also moves card " << card << " to position " << to << '\n';
        }
    }
    return kExitOk;
}

int cmd_plan_boundary(BoundaryRole role, int i, int cards, std::ostream& out) {
    const ShufflePlan plan = boundary_plan(role, i, cards);
    const int start = (role == BoundaryRole::BottomTo)  ? 0
                      : (role == BoundaryRole::TopTo)   ? cards - 1
                                                        : i;
    print_plan(plan, start, track_plan(plan, start, cards), out);
    return kExitOk;
}

// ---- simulate --------------------------------------------------------

int cmd_simulate(const SpecFlags& flags, int steps, int base, std::ostream& out) {
    if (steps < 0) throw CLI::ValidationError("--steps", "must be >= 0");
    const ShuffleSpec spec = spec_from_flags(flags);
    if (base < 0) base = default_label_base(spec.family);
    const Permutation map = build(spec);

    std::vector<int> deck(static_cast<std::size_t>(deck_size(spec)));
    for (std::size_t i = 0; i < deck.size(); ++i) deck[i] = static_cast<int>(i) + base;
    out << join(deck, ' ') << '\n';
    for (int s = 0; s < steps; ++s) {
        deck = apply(map, deck);
        out << join(deck, ' ') << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Perfect-shuffle periods, orbits and card planning"};
    app.name("faro");
    app.require_subcommand(1);
    const bool color = color_enabled(out);

    std::string format = "text";
    const auto format_check = CLI::IsMember({"text", "csv", "json"});

    SpecFlags period_flags;
    CLI::App* period = app.add_subcommand("period", "theorem period of a shuffle, oracle-checked");
    add_spec_flags(period, period_flags);
    period->add_option("--format", format, "text, csv or json")->check(format_check);

    int table_max = 64;
    CLI::App* table = app.add_subcommand("table", "periods of in/Monge shuffles per deck size");
    table->add_option("--max", table_max, "largest (even) deck size")->required();
    table->add_option("--format", format, "text, csv or json")->check(format_check);

    SpecFlags orbit_flags;
    int orbit_base = -1;
    long long orbit_power = 1;
    CLI::App* orbits = app.add_subcommand("orbits", "cycle decomposition of a shuffle");
    add_spec_flags(orbits, orbit_flags);
    orbits->add_option("--base", orbit_base, "label numbering: 0 or 1")
        ->check(CLI::Range(0, 1));
    orbits->add_option("--power", orbit_power, "decompose this iterate of the shuffle");
    orbits->add_option("--format", format, "text, csv or json")->check(format_check);

    CLI::App* plan = app.add_subcommand("plan", "in/out-shuffle sequences moving one card");
    plan->require_subcommand(1);
    int plan_card = 0, plan_to = 0, plan_cards = 0;
    CLI::App* plan_move = plan->add_subcommand("move", "move a card to a position (2^p deck)");
    plan_move->add_option("--card", plan_card)->required();
    plan_move->add_option("--to", plan_to)->required();
    plan_move->add_option("--cards", plan_cards, "deck size")->required();
    CLI::App* plan_bottom_to = plan->add_subcommand("bottom-to", "bottom card to a position");
    plan_bottom_to->add_option("--to", plan_to)->required();
    plan_bottom_to->add_option("--cards", plan_cards, "deck size (any even)")->required();
    CLI::App* plan_top_to = plan->add_subcommand("top-to", "top card to a position (2^p deck)");
    plan_top_to->add_option("--to", plan_to)->required();
    plan_top_to->add_option("--cards", plan_cards, "deck size")->required();
    CLI::App* plan_to_bottom = plan->add_subcommand("to-bottom", "card to the bottom (2^p deck)");
    plan_to_bottom->add_option("--card", plan_card)->required();
    plan_to_bottom->add_option("--cards", plan_cards, "deck size")->required();
    CLI::App* plan_to_top = plan->add_subcommand("to-top", "card to the top (2^p deck)");
    plan_to_top->add_option("--card", plan_card)->required();
    plan_to_top->add_option("--cards", plan_cards, "deck size")->required();

    SpecFlags sim_flags;
    int sim_steps = 0;
    int sim_base = -1;
    CLI::App* simulate = app.add_subcommand("simulate", "print the deck after each shuffle");
    add_spec_flags(simulate, sim_flags);
    simulate->add_option("--steps", sim_steps, "number of shuffles")->required();
    simulate->add_option("--base", sim_base, "label numbering: 0 or 1")->check(CLI::Range(0, 1));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(period)) return cmd_period(period_flags, format, out, err, color);
        if (app.got_subcommand(table)) return cmd_table(table_max, format, out);
        if (app.got_subcommand(orbits))
            return cmd_orbits(orbit_flags, orbit_base, orbit_power, format, out);
        if (app.got_subcommand(plan)) {
            if (plan->got_subcommand(plan_move))
                return cmd_plan_move(plan_card, plan_to, plan_cards, out);
            if (plan->got_subcommand(plan_bottom_to))
                return cmd_plan_boundary(BoundaryRole::BottomTo, plan_to, plan_cards, out);
            if (plan->got_subcommand(plan_top_to))
                return cmd_plan_boundary(BoundaryRole::TopTo, plan_to, plan_cards, out);
            if (plan->got_subcommand(plan_to_bottom))
                return cmd_plan_boundary(BoundaryRole::ToBottom, plan_card, plan_cards, out);
            if (plan->got_subcommand(plan_to_top))
                return cmd_plan_boundary(BoundaryRole::ToTop, plan_card, plan_cards, out);
        }
        if (app.got_subcommand(simulate)) return cmd_simulate(sim_flags, sim_steps, sim_base, out);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "error: no command given\n";
    return kExitUsage;
}

}  // namespace faro::cli
