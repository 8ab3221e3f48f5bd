#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "conway/core.hpp"
#include "conway/gauss_diagram.hpp"
#include "conway/polynomial.hpp"

namespace conway {

/// Chords that keep the diagram from being descending. For a knot: chords
/// met at the underpass first, scanning from the base point. For a link:
/// inter-circle chords where the based component passes over.
inline std::vector<ChordId> violating_chords(const GaussDiagram& g) {
    std::vector<ChordId> out;
    if (g.circle_count() == 1) {
        for (int s = 0; s < g.slot_count(); ++s) {
            const Token& t = g.token(s);
            if (t.role == Role::under && g.chord(t.label).over_slot > s) out.push_back(t.label);
        }
    } else {
        for (int s = 0; s < g.circle_size(0); ++s) {
            const Token& t = g.token(s);
            if (t.role == Role::over && g.inter_circle(t.label)) out.push_back(t.label);
        }
    }
    return out;
}

inline std::optional<ChordId> first_violating_chord(const GaussDiagram& g) {
    auto v = violating_chords(g);
    if (v.empty()) return std::nullopt;
    return v.front();
}

struct SkeinOptions {
    /// When set, the violating chord is picked at random instead of first.
    std::optional<unsigned> random_seed;
    bool memoize = false;
};

struct SkeinStats {
    int max_depth = 0;
    std::int64_t nodes = 0;
};

namespace detail {

class SkeinEvaluator {
public:
    SkeinEvaluator(const SkeinOptions& options, SkeinStats* stats)
        : options_(options), stats_(stats) {
        if (options_.random_seed) rng_.seed(*options_.random_seed);
    }

    Polynomial eval(const GaussDiagram& g, int depth) {
        if (stats_) {
            stats_->max_depth = std::max(stats_->max_depth, depth);
            ++stats_->nodes;
        }
        std::string key;
        if (options_.memoize) {
            key = g.serialize();
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        auto violating = violating_chords(g);
        Polynomial result;
        if (violating.empty()) {
            result = g.circle_count() == 1 ? Polynomial::one() : Polynomial::zero();
        } else {
            ChordId x = options_.random_seed
                            ? violating[static_cast<std::size_t>(rng_() % violating.size())]
                            : violating.front();
            // Switching removes the violation at x; smoothing removes x.
            // With x positive: nabla(g) = nabla(switched) + z nabla(smoothed),
            // with x negative the z term enters with a minus.
            Polynomial switched = eval(switch_crossing(g, x), depth + 1);
            Polynomial smoothed = eval(smooth_crossing(g, x), depth + 1);
            result = switched + smoothed.scale_shift(value(g.chord_sign(x)), 1);
        }
        if (options_.memoize) memo_.emplace(std::move(key), result);
        return result;
    }

private:
    SkeinOptions options_;
    SkeinStats* stats_;
    std::mt19937 rng_;
    std::map<std::string, Polynomial> memo_;
};

} // namespace detail

/// Conway polynomial by the skein recursion: switch violating crossings
/// until the diagram is descending (an unknot, value 1) or the based
/// component lies below the other one (a split link, value 0).
inline Polynomial conway_skein_ex(const GaussDiagram& g, const SkeinOptions& options,
                                  SkeinStats* stats = nullptr) {
    return detail::SkeinEvaluator(options, stats).eval(g, 0);
}

inline Polynomial conway_skein(const GaussDiagram& g) { return conway_skein_ex(g, {}); }

} // namespace conway
