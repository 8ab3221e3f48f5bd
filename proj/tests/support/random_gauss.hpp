#pragma once

#include <random>
#include <utility>
#include <vector>

#include "conway/gauss_diagram.hpp"

namespace conway::testing {

/// Seeded generator of valid (mostly non-realizable) Gauss diagrams.
/// Uses rng() % n directly so sequences are identical across platforms.
class DiagramGen {
public:
    explicit DiagramGen(unsigned seed) : rng_(seed) {}

    int pick(int n) { return static_cast<int>(rng_() % static_cast<unsigned>(n)); }

    GaussDiagram random_knot(int chords) { return build({2 * chords}, chords); }

    GaussDiagram random_link(int chords) {
        int split = pick(2 * chords + 1);
        return build({split, 2 * chords - split}, chords);
    }

    /// Knot or 2-circle diagram, size up to max_chords.
    GaussDiagram random_diagram(int max_chords) {
        int chords = pick(max_chords + 1);
        if (pick(2) == 0 || chords == 0) return random_knot(chords);
        return random_link(chords);
    }

    /// Knot diagram whose every chord is met at the overpass first.
    GaussDiagram random_descending(int chords) {
        GaussDiagram d = random_knot(chords);
        for (ChordId id : d.chord_ids())
            if (d.under_slot(id) < d.over_slot(id)) d = switch_crossing(d, id);
        return d;
    }

    Sign random_sign() { return pick(2) == 0 ? Sign::plus : Sign::minus; }

private:
    GaussDiagram build(std::vector<int> circle_sizes, int chords) {
        int total = 2 * chords;
        std::vector<int> slots(static_cast<std::size_t>(total));
        for (int i = 0; i < total; ++i) slots[static_cast<std::size_t>(i)] = i;
        for (std::size_t i = slots.size(); i > 1; --i)
            std::swap(slots[i - 1], slots[static_cast<std::size_t>(pick(static_cast<int>(i)))]);

        std::vector<Token> flat(static_cast<std::size_t>(total));
        for (int c = 0; c < chords; ++c) {
            int a = slots[static_cast<std::size_t>(2 * c)];
            int b = slots[static_cast<std::size_t>(2 * c + 1)];
            if (pick(2) == 0) std::swap(a, b);
            Sign sign = random_sign();
            flat[static_cast<std::size_t>(a)] = Token{Role::over, c + 1, sign};
            flat[static_cast<std::size_t>(b)] = Token{Role::under, c + 1, sign};
        }
        std::vector<std::vector<Token>> circles;
        int at = 0;
        for (int size : circle_sizes) {
            circles.emplace_back(flat.begin() + at, flat.begin() + at + size);
            at += size;
        }
        return GaussDiagram::from_tokens(circles);
    }

    std::mt19937 rng_;
};

} // namespace conway::testing
