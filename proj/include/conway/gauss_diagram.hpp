#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "conway/core.hpp"

namespace conway {

enum class Role { over, under };

inline Role other(Role r) { return r == Role::over ? Role::under : Role::over; }

/// One chord endpoint as written in a Gauss code: role, crossing label, sign.
struct Token {
    Role role;
    ChordId label;
    Sign sign;

    bool operator==(const Token&) const = default;
};

/// A subset of the crossings of a diagram, named by chord id.
using CrossingSubset = std::vector<ChordId>;

/// Based, signed, oriented chord diagram on one or two circles. Circle 0
/// carries the base point, which sits just before that circle's first slot.
/// Slots are numbered globally: circle 0 first, then circle 1. Immutable;
/// all surgeries return new values.
class GaussDiagram {
public:
    struct Chord {
        int over_slot;
        int under_slot;
        Sign sign;
    };

    /// Builds and validates a diagram from per-circle token sequences.
    static GaussDiagram from_tokens(const std::vector<std::vector<Token>>& circles) {
        if (circles.empty() || circles.size() > 2)
            fail(errc::too_many_circles, "a diagram has one or two circles");
        GaussDiagram d;
        d.circle_sizes_.reserve(circles.size());
        for (const auto& c : circles) {
            d.circle_sizes_.push_back(static_cast<int>(c.size()));
            d.slots_.insert(d.slots_.end(), c.begin(), c.end());
        }
        for (int s = 0; s < d.slot_count(); ++s) {
            const Token& t = d.slots_[static_cast<std::size_t>(s)];
            if (t.label <= 0) fail(errc::malformed_token, "crossing labels must be positive");
            auto [it, fresh] = d.chords_.try_emplace(t.label, Chord{-1, -1, t.sign});
            Chord& ch = it->second;
            int& slot_for_role = t.role == Role::over ? ch.over_slot : ch.under_slot;
            if (!fresh && slot_for_role >= 0)
                fail(errc::duplicate_role, "crossing " + std::to_string(t.label) +
                                               " repeats the same passage");
            if (!fresh && t.sign != ch.sign)
                fail(errc::sign_mismatch,
                     "crossing " + std::to_string(t.label) + " has conflicting signs");
            slot_for_role = s;
        }
        for (const auto& [id, ch] : d.chords_)
            if (ch.over_slot < 0 || ch.under_slot < 0)
                fail(errc::dangling_chord,
                     "crossing " + std::to_string(id) + " appears only once");
        return d;
    }

    /// Parses the `O<label><sign>`/`U<label><sign>` code, circles split by `|`.
    static GaussDiagram parse(std::string_view text) {
        std::vector<std::vector<Token>> circles;
        std::size_t start = 0;
        while (true) {
            std::size_t bar = text.find('|', start);
            std::string_view part =
                text.substr(start, bar == std::string_view::npos ? bar : bar - start);
            circles.push_back(tokenize(part));
            if (bar == std::string_view::npos) break;
            start = bar + 1;
            if (circles.size() == 2) fail(errc::too_many_circles, "more than two circles");
        }
        return from_tokens(circles);
    }

    std::string serialize() const {
        std::string parts[2];
        for (int c = 0; c < circle_count(); ++c) {
            std::string& out = parts[c];
            for (int s = circle_begin(c); s < circle_begin(c) + circle_size(c); ++s) {
                if (!out.empty()) out += ' ';
                const Token& t = slots_[static_cast<std::size_t>(s)];
                out += (t.role == Role::over ? 'O' : 'U');
                out += std::to_string(t.label);
                out += sign_char(t.sign);
            }
        }
        if (circle_count() == 1) return parts[0];
        std::string out = parts[0].empty() ? "" : parts[0] + " ";
        out += '|';
        if (!parts[1].empty()) out += " " + parts[1];
        return out;
    }

    int circle_count() const { return static_cast<int>(circle_sizes_.size()); }
    int circle_size(int c) const { return circle_sizes_[static_cast<std::size_t>(c)]; }
    int circle_begin(int c) const { return c == 0 ? 0 : circle_sizes_[0]; }
    int slot_count() const { return static_cast<int>(slots_.size()); }

    int circle_of(int slot) const { return slot < circle_sizes_[0] ? 0 : 1; }

    /// Next slot on the same circle, in the orientation direction.
    int successor(int slot) const {
        int c = circle_of(slot);
        int begin = circle_begin(c);
        int next = slot + 1;
        return next < begin + circle_size(c) ? next : begin;
    }

    const Token& token(int slot) const { return slots_[static_cast<std::size_t>(slot)]; }

    int chord_count() const { return static_cast<int>(chords_.size()); }
    bool has_chord(ChordId id) const { return chords_.count(id) != 0; }

    const Chord& chord(ChordId id) const {
        auto it = chords_.find(id);
        if (it == chords_.end())
            fail(errc::unknown_chord, "no crossing labeled " + std::to_string(id));
        return it->second;
    }

    int over_slot(ChordId id) const { return chord(id).over_slot; }
    int under_slot(ChordId id) const { return chord(id).under_slot; }
    Sign chord_sign(ChordId id) const { return chord(id).sign; }

    bool inter_circle(ChordId id) const {
        const Chord& ch = chord(id);
        return circle_of(ch.over_slot) != circle_of(ch.under_slot);
    }

    std::vector<ChordId> chord_ids() const {
        std::vector<ChordId> ids;
        ids.reserve(chords_.size());
        for (const auto& [id, ch] : chords_) ids.push_back(id);
        return ids;
    }

    const std::map<ChordId, Chord>& chords() const { return chords_; }

    std::vector<std::vector<Token>> circle_tokens() const {
        std::vector<std::vector<Token>> out;
        for (int c = 0; c < circle_count(); ++c)
            out.emplace_back(slots_.begin() + circle_begin(c),
                             slots_.begin() + circle_begin(c) + circle_size(c));
        return out;
    }

    bool operator==(const GaussDiagram& o) const {
        return circle_sizes_ == o.circle_sizes_ && slots_ == o.slots_;
    }
    bool operator!=(const GaussDiagram& o) const { return !(*this == o); }

private:
    GaussDiagram() = default;

    static std::vector<Token> tokenize(std::string_view part) {
        std::vector<Token> tokens;
        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < part.size() && std::isspace(static_cast<unsigned char>(part[i]))) ++i;
        };
        skip_ws();
        while (i < part.size()) {
            char rc = part[i];
            if (rc != 'O' && rc != 'U')
                fail(errc::malformed_token,
                     "expected O or U at: " + std::string(part.substr(i)));
            ++i;
            std::size_t dstart = i;
            while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) ++i;
            if (i == dstart)
                fail(errc::malformed_token,
                     "expected crossing label at: " + std::string(part.substr(dstart)));
            int label = 0;
            for (std::size_t k = dstart; k < i; ++k) {
                label = label * 10 + (part[k] - '0');
                if (label > 1000000) fail(errc::malformed_token, "crossing label too large");
            }
            if (label == 0) fail(errc::malformed_token, "crossing labels must be positive");
            if (i >= part.size() || (part[i] != '+' && part[i] != '-'))
                fail(errc::malformed_token,
                     "expected sign after label " + std::to_string(label));
            Sign sign = part[i] == '+' ? Sign::plus : Sign::minus;
            ++i;
            tokens.push_back(Token{rc == 'O' ? Role::over : Role::under, label, sign});
            skip_ws();
        }
        return tokens;
    }

    std::vector<int> circle_sizes_;
    std::vector<Token> slots_;
    std::map<ChordId, Chord> chords_;
};

namespace detail {

/// Successor permutation of the slots after orientedly smoothing every chord
/// in `subset`: the successors of the two endpoints of a smoothed chord are
/// exchanged.
inline std::vector<int> smoothed_successors(const GaussDiagram& d, const CrossingSubset& subset) {
    std::vector<int> succ(static_cast<std::size_t>(d.slot_count()));
    for (int s = 0; s < d.slot_count(); ++s) succ[static_cast<std::size_t>(s)] = d.successor(s);
    for (ChordId id : subset) {
        const auto& ch = d.chord(id);
        std::swap(succ[static_cast<std::size_t>(ch.over_slot)],
                  succ[static_cast<std::size_t>(ch.under_slot)]);
    }
    return succ;
}

inline int cycle_count(const std::vector<int>& succ) {
    std::vector<char> seen(succ.size(), 0);
    int cycles = 0;
    for (std::size_t s = 0; s < succ.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(succ[t])) seen[t] = 1;
    }
    return cycles;
}

} // namespace detail

/// Number of closed components after orientedly smoothing every chord in
/// `subset`. Endpoint-free circles count as components.
inline int smooth_count_components(const GaussDiagram& d, const CrossingSubset& subset) {
    auto succ = detail::smoothed_successors(d, subset);
    int free_circles = 0;
    for (int c = 0; c < d.circle_count(); ++c)
        if (d.circle_size(c) == 0) ++free_circles;
    return detail::cycle_count(succ) + free_circles;
}

/// Slots visited in order when traveling the smoothed curve from the base
/// point. Fails unless that curve passes every slot exactly once.
inline std::vector<int> smoothed_traversal(const GaussDiagram& d, const CrossingSubset& subset) {
    auto succ = detail::smoothed_successors(d, subset);
    std::vector<int> order;
    if (d.slot_count() == 0) return order;
    if (d.circle_size(0) == 0)
        fail(errc::not_one_component, "base-point circle is disjoint from the smoothed curve");
    order.reserve(succ.size());
    int start = 0;
    int s = start;
    do {
        order.push_back(s);
        s = succ[static_cast<std::size_t>(s)];
    } while (s != start && order.size() <= succ.size());
    if (order.size() != succ.size())
        fail(errc::not_one_component, "smoothed curve does not pass every slot");
    return order;
}

/// True iff `subset` smooths to a single component and, walking that curve
/// from the base point, each smoothed crossing is met first at its over slot
/// (ascending) or under slot (descending).
inline bool classify_subset(const GaussDiagram& d, const CrossingSubset& subset, Direction dir) {
    for (ChordId id : subset) d.chord(id);
    if (smooth_count_components(d, subset) != 1) return false;
    auto succ = detail::smoothed_successors(d, subset);
    std::vector<char> in_subset(static_cast<std::size_t>(d.slot_count()), 0);
    for (ChordId id : subset) {
        in_subset[static_cast<std::size_t>(d.chord(id).over_slot)] = 1;
        in_subset[static_cast<std::size_t>(d.chord(id).under_slot)] = 1;
    }
    std::vector<char> chord_seen(static_cast<std::size_t>(d.slot_count()), 0);
    Role wanted = dir == Direction::ascending ? Role::over : Role::under;
    if (d.slot_count() == 0) return true;
    int s = 0;
    for (int step = 0; step < d.slot_count(); ++step) {
        if (in_subset[static_cast<std::size_t>(s)]) {
            const auto& ch = d.chord(d.token(s).label);
            int mate = ch.over_slot == s ? ch.under_slot : ch.over_slot;
            if (!chord_seen[static_cast<std::size_t>(mate)]) {
                if (d.token(s).role != wanted) return false;
                chord_seen[static_cast<std::size_t>(s)] = 1;
            }
        }
        s = succ[static_cast<std::size_t>(s)];
    }
    return true;
}

/// Exchanges the over and under passage of one crossing and negates its sign.
inline GaussDiagram switch_crossing(const GaussDiagram& d, ChordId id) {
    const auto& ch = d.chord(id);
    auto circles = d.circle_tokens();
    auto flip = [&](int slot) {
        int c = d.circle_of(slot);
        Token& t = circles[static_cast<std::size_t>(c)][static_cast<std::size_t>(slot - d.circle_begin(c))];
        t.role = other(t.role);
        t.sign = negated(t.sign);
    };
    flip(ch.over_slot);
    flip(ch.under_slot);
    return GaussDiagram::from_tokens(circles);
}

/// Orientedly smooths one crossing: the chord disappears and the circles are
/// reconnected at its endpoints. A knot chord yields two circles; an
/// inter-circle chord of a link yields one. Surviving chords keep their
/// labels and signs; the base point keeps its place on the circle it ends up
/// on.
inline GaussDiagram smooth_crossing(const GaussDiagram& d, ChordId id) {
    const auto& ch = d.chord(id);
    bool splits = d.circle_of(ch.over_slot) == d.circle_of(ch.under_slot);
    if (splits && d.circle_count() == 2)
        fail(errc::too_many_circles, "smoothing would produce three circles");

    auto succ = detail::smoothed_successors(d, {id});
    std::vector<char> removed(static_cast<std::size_t>(d.slot_count()), 0);
    removed[static_cast<std::size_t>(ch.over_slot)] = 1;
    removed[static_cast<std::size_t>(ch.under_slot)] = 1;

    std::vector<char> visited(static_cast<std::size_t>(d.slot_count()), 0);
    auto collect_cycle = [&](int start) {
        std::vector<int> cycle;
        for (int s = start; !visited[static_cast<std::size_t>(s)];
             s = succ[static_cast<std::size_t>(s)]) {
            visited[static_cast<std::size_t>(s)] = 1;
            cycle.push_back(s);
        }
        return cycle;
    };

    std::vector<std::vector<Token>> circles;
    auto tokens_of = [&](const std::vector<int>& cycle) {
        std::vector<Token> tokens;
        for (int s : cycle)
            if (!removed[static_cast<std::size_t>(s)]) tokens.push_back(d.token(s));
        return tokens;
    };

    // The chord's circles are nonempty, so slot 0 exists and starts the cycle
    // that carries the base point.
    circles.push_back(tokens_of(collect_cycle(0)));
    for (int s = 0; s < d.slot_count(); ++s)
        if (!visited[static_cast<std::size_t>(s)]) circles.push_back(tokens_of(collect_cycle(s)));
    return GaussDiagram::from_tokens(circles);
}

/// Advances the base point of a knot diagram past `steps` endpoint slots.
inline GaussDiagram move_base_point(const GaussDiagram& d, int steps) {
    if (d.circle_count() != 1)
        fail(errc::too_many_circles, "base-point moves are defined for knot diagrams");
    int n = d.slot_count();
    if (n == 0) return d;
    int shift = ((steps % n) + n) % n;
    std::vector<Token> tokens;
    tokens.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) tokens.push_back(d.token((i + shift) % n));
    return GaussDiagram::from_tokens({tokens});
}

/// Reverses every chord (over and under exchanged, signs kept).
inline GaussDiagram arrow_reversed(const GaussDiagram& d) {
    auto circles = d.circle_tokens();
    for (auto& circle : circles)
        for (Token& t : circle) t.role = other(t.role);
    return GaussDiagram::from_tokens(circles);
}

/// Renames chords through a bijective label map.
inline GaussDiagram relabeled(const GaussDiagram& d, const std::map<ChordId, ChordId>& names) {
    auto circles = d.circle_tokens();
    for (auto& circle : circles)
        for (Token& t : circle) {
            auto it = names.find(t.label);
            if (it == names.end())
                fail(errc::unknown_chord, "relabeling misses crossing " + std::to_string(t.label));
            t.label = it->second;
        }
    return GaussDiagram::from_tokens(circles);
}

inline ChordId next_free_label(const GaussDiagram& d) {
    ChordId next = 1;
    for (const auto& [id, ch] : d.chords()) next = std::max(next, id + 1);
    return next;
}

/// Inserts an isolated chord (both endpoints adjacent) at the given position
/// of a circle: a curl. `first_role` is the passage written closer to the
/// base point.
inline GaussDiagram r1_insert(const GaussDiagram& d, int circle, int pos, Sign sign,
                              Role first_role) {
    auto circles = d.circle_tokens();
    auto& tokens = circles.at(static_cast<std::size_t>(circle));
    if (pos < 0 || pos > static_cast<int>(tokens.size()))
        fail(errc::no_such_configuration, "curl insertion point out of range");
    ChordId label = next_free_label(d);
    tokens.insert(tokens.begin() + pos,
                  {Token{first_role, label, sign}, Token{other(first_role), label, sign}});
    return GaussDiagram::from_tokens(circles);
}

/// Removes an isolated chord whose endpoints are adjacent (no base point or
/// other endpoint between them).
inline GaussDiagram r1_delete(const GaussDiagram& d, ChordId id) {
    const auto& ch = d.chord(id);
    int a = std::min(ch.over_slot, ch.under_slot);
    int b = std::max(ch.over_slot, ch.under_slot);
    if (b != a + 1 || d.circle_of(a) != d.circle_of(b))
        fail(errc::no_such_configuration,
             "crossing " + std::to_string(id) + " is not an isolated curl");
    auto circles = d.circle_tokens();
    auto& tokens = circles[static_cast<std::size_t>(d.circle_of(a))];
    int base = d.circle_begin(d.circle_of(a));
    tokens.erase(tokens.begin() + (a - base), tokens.begin() + (a - base) + 2);
    return GaussDiagram::from_tokens(circles);
}

/// Slides one strand over another: inserts two chords of opposite sign whose
/// over slots sit adjacent at one position and whose under slots sit adjacent
/// at another. `parallel` selects the relative order of the under pair.
inline GaussDiagram r2_insert(const GaussDiagram& d, int over_circle, int over_pos,
                              int under_circle, int under_pos, Sign sign, bool parallel) {
    auto circles = d.circle_tokens();
    if (over_circle < 0 || over_circle >= d.circle_count() || under_circle < 0 ||
        under_circle >= d.circle_count())
        fail(errc::no_such_configuration, "strand-slide circle out of range");
    ChordId first = next_free_label(d);
    ChordId second = first + 1;
    std::vector<Token> overs = {Token{Role::over, first, sign},
                                Token{Role::over, second, negated(sign)}};
    std::vector<Token> unders = {Token{Role::under, first, sign},
                                 Token{Role::under, second, negated(sign)}};
    if (!parallel) std::swap(unders[0], unders[1]);

    auto insert_at = [&](int circle, int pos, const std::vector<Token>& pair) {
        auto& tokens = circles[static_cast<std::size_t>(circle)];
        if (pos < 0 || pos > static_cast<int>(tokens.size()))
            fail(errc::no_such_configuration, "strand-slide insertion point out of range");
        tokens.insert(tokens.begin() + pos, pair.begin(), pair.end());
    };
    if (over_circle == under_circle && under_pos >= over_pos) {
        insert_at(under_circle, under_pos, unders);
        insert_at(over_circle, over_pos, overs);
    } else {
        insert_at(over_circle, over_pos, overs);
        insert_at(under_circle, under_pos, unders);
    }
    return GaussDiagram::from_tokens(circles);
}

/// Removes a pair of chords forming a strand-slide configuration.
inline GaussDiagram r2_delete(const GaussDiagram& d, ChordId first, ChordId second) {
    const auto& a = d.chord(first);
    const auto& b = d.chord(second);
    auto adjacent = [&](int s, int t) {
        return d.circle_of(s) == d.circle_of(t) && std::abs(s - t) == 1;
    };
    bool overs_ok = adjacent(a.over_slot, b.over_slot);
    bool unders_ok = adjacent(a.under_slot, b.under_slot);
    if (!overs_ok || !unders_ok || a.sign != negated(b.sign))
        fail(errc::no_such_configuration, "crossings " + std::to_string(first) + "," +
                                              std::to_string(second) +
                                              " do not form a strand slide");
    std::vector<int> doomed = {a.over_slot, a.under_slot, b.over_slot, b.under_slot};
    std::sort(doomed.begin(), doomed.end());
    auto circles = d.circle_tokens();
    for (auto it = doomed.rbegin(); it != doomed.rend(); ++it) {
        int c = d.circle_of(*it);
        auto& tokens = circles[static_cast<std::size_t>(c)];
        tokens.erase(tokens.begin() + (*it - d.circle_begin(c)));
    }
    return GaussDiagram::from_tokens(circles);
}

} // namespace conway
