#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conway/core.hpp"
#include "conway/gauss_diagram.hpp"

namespace conway {

namespace detail {

/// Successor permutation for bare circles (sizes given) with every listed
/// slot pair smoothed.
inline std::vector<int> paired_successors(const std::vector<int>& circle_sizes,
                                          const std::vector<std::pair<int, int>>& pairs) {
    int total = 0;
    for (int n : circle_sizes) total += n;
    std::vector<int> succ(static_cast<std::size_t>(total));
    int begin = 0;
    for (int n : circle_sizes) {
        for (int i = 0; i < n; ++i)
            succ[static_cast<std::size_t>(begin + i)] = begin + (i + 1) % n;
        begin += n;
    }
    for (const auto& [a, b] : pairs)
        std::swap(succ[static_cast<std::size_t>(a)], succ[static_cast<std::size_t>(b)]);
    return succ;
}

} // namespace detail

/// Based, unsigned, unoriented chord diagram: one or two circles, every slot
/// an endpoint of exactly one chord.
struct ChordDiagram {
    std::vector<int> circle_sizes;
    std::vector<std::pair<int, int>> chords;

    int slot_count() const {
        int total = 0;
        for (int n : circle_sizes) total += n;
        return total;
    }
};

/// Components of the curve obtained by doubling every chord in parallel.
inline int doubled_component_count(const ChordDiagram& cd) {
    auto succ = detail::paired_successors(cd.circle_sizes, cd.chords);
    int free_circles = 0;
    for (int n : cd.circle_sizes)
        if (n == 0) ++free_circles;
    return detail::cycle_count(succ) + free_circles;
}

/// Based, unsigned, oriented chord diagram; the template side of the pairing.
class ArrowDiagram {
public:
    ArrowDiagram(std::vector<int> circle_sizes, std::vector<std::pair<int, int>> arrows)
        : circle_sizes_(std::move(circle_sizes)), arrows_(std::move(arrows)) {
        if (circle_sizes_.empty() || circle_sizes_.size() > 2)
            fail(errc::too_many_circles, "an arrow diagram has one or two circles");
        int total = slot_count();
        slot_arrow_.assign(static_cast<std::size_t>(total), -1);
        slot_is_tail_.assign(static_cast<std::size_t>(total), 0);
        for (std::size_t i = 0; i < arrows_.size(); ++i) {
            auto [tail, head] = arrows_[i];
            for (int s : {tail, head}) {
                if (s < 0 || s >= total || slot_arrow_[static_cast<std::size_t>(s)] != -1)
                    fail(errc::malformed_token, "arrow endpoints must cover each slot once");
                slot_arrow_[static_cast<std::size_t>(s)] = static_cast<int>(i);
            }
            slot_is_tail_[static_cast<std::size_t>(tail)] = 1;
        }
        for (int v : slot_arrow_)
            if (v == -1) fail(errc::malformed_token, "slot without an arrow endpoint");
    }

    int circle_count() const { return static_cast<int>(circle_sizes_.size()); }
    int circle_size(int c) const { return circle_sizes_[static_cast<std::size_t>(c)]; }
    int circle_begin(int c) const { return c == 0 ? 0 : circle_sizes_[0]; }
    int slot_count() const {
        int total = 0;
        for (int n : circle_sizes_) total += n;
        return total;
    }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    int slot_arrow(int s) const { return slot_arrow_[static_cast<std::size_t>(s)]; }
    bool slot_is_tail(int s) const { return slot_is_tail_[static_cast<std::size_t>(s)] != 0; }

    /// Deterministic text form: `T<k>`/`H<k>` tokens with chords numbered in
    /// first-appearance order, circles separated by `|`. The unbased circle
    /// is read from whichever rotation gives the lexicographically smallest
    /// encoding, so equal diagrams get equal keys.
    std::string canonical_key() const {
        if (circle_count() == 1 || circle_size(1) == 0) return render(0);
        std::string best = render(0);
        for (int r = 1; r < circle_size(1); ++r) best = std::min(best, render(r));
        return best;
    }

    bool operator==(const ArrowDiagram& o) const {
        return circle_sizes_ == o.circle_sizes_ && arrows_ == o.arrows_;
    }

    /// Parses the canonical text form.
    static ArrowDiagram from_key(std::string_view text) {
        std::vector<std::vector<std::pair<bool, int>>> circles;
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
        std::vector<int> sizes;
        std::vector<std::pair<int, int>> arrows;
        std::vector<int> tail_of, head_of;
        int slot = 0;
        for (const auto& circle : circles) {
            sizes.push_back(static_cast<int>(circle.size()));
            for (const auto& [is_tail, num] : circle) {
                auto& table = is_tail ? tail_of : head_of;
                if (static_cast<int>(table.size()) < num + 1) table.resize(num + 1, -1);
                if (table[static_cast<std::size_t>(num)] != -1)
                    fail(errc::parse_error, "arrow " + std::to_string(num) + " repeats a passage");
                table[static_cast<std::size_t>(num)] = slot;
                ++slot;
            }
        }
        if (tail_of.size() != head_of.size())
            fail(errc::parse_error, "arrow with a missing endpoint");
        for (std::size_t n = 0; n < tail_of.size(); ++n) {
            int t = n < tail_of.size() ? tail_of[n] : -1;
            int h = n < head_of.size() ? head_of[n] : -1;
            if ((t == -1) != (h == -1))
                fail(errc::parse_error, "arrow " + std::to_string(n) + " has a missing endpoint");
            if (t != -1) arrows.emplace_back(t, h);
        }
        return ArrowDiagram(std::move(sizes), std::move(arrows));
    }

private:
    /// Key text with the unbased circle started at rotation offset r.
    std::string render(int rotation) const {
        std::vector<int> number(arrows_.size(), 0);
        int next = 1;
        std::string parts[2];
        for (int c = 0; c < circle_count(); ++c) {
            std::string& out = parts[c];
            int n = circle_size(c);
            for (int i = 0; i < n; ++i) {
                int s = circle_begin(c) + (c == 0 ? i : (i + rotation) % n);
                int a = slot_arrow(s);
                if (number[static_cast<std::size_t>(a)] == 0)
                    number[static_cast<std::size_t>(a)] = next++;
                if (!out.empty()) out += ' ';
                out += slot_is_tail(s) ? 'T' : 'H';
                out += std::to_string(number[static_cast<std::size_t>(a)]);
            }
        }
        if (circle_count() == 1) return parts[0];
        std::string out = parts[0].empty() ? "" : parts[0] + " ";
        out += '|';
        if (!parts[1].empty()) out += " " + parts[1];
        return out;
    }

    static std::vector<std::pair<bool, int>> tokenize(std::string_view part) {
        std::vector<std::pair<bool, int>> tokens;
        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < part.size() && std::isspace(static_cast<unsigned char>(part[i]))) ++i;
        };
        skip_ws();
        while (i < part.size()) {
            char rc = part[i];
            if (rc != 'T' && rc != 'H')
                fail(errc::parse_error, "expected T or H at: " + std::string(part.substr(i)));
            ++i;
            std::size_t dstart = i;
            int num = 0;
            while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) {
                num = num * 10 + (part[i] - '0');
                if (num > 1000000) fail(errc::parse_error, "arrow number too large");
                ++i;
            }
            if (i == dstart || num == 0)
                fail(errc::parse_error, "expected arrow number in: " + std::string(part));
            tokens.emplace_back(rc == 'T', num - 1);
            skip_ws();
        }
        return tokens;
    }

    std::vector<int> circle_sizes_;
    std::vector<std::pair<int, int>> arrows_;
    std::vector<int> slot_arrow_;
    std::vector<char> slot_is_tail_;
};

/// Orients each chord of a one-component diagram in the direction of the
/// first passage along the doubled curve: the tail is whichever endpoint the
/// traversal from the base point reaches first.
inline ArrowDiagram to_ascending_arrow_diagram(const ChordDiagram& cd) {
    if (doubled_component_count(cd) != 1)
        fail(errc::not_one_component, "doubled curve has more than one component");
    auto succ = detail::paired_successors(cd.circle_sizes, cd.chords);
    std::vector<char> seen(static_cast<std::size_t>(cd.slot_count()), 0);
    std::vector<std::pair<int, int>> arrows(cd.chords.size());
    std::vector<int> pair_of(static_cast<std::size_t>(cd.slot_count()));
    for (std::size_t i = 0; i < cd.chords.size(); ++i) {
        pair_of[static_cast<std::size_t>(cd.chords[i].first)] = static_cast<int>(i);
        pair_of[static_cast<std::size_t>(cd.chords[i].second)] = static_cast<int>(i);
    }
    int s = 0;
    for (int step = 0; step < cd.slot_count(); ++step) {
        int i = pair_of[static_cast<std::size_t>(s)];
        auto [a, b] = cd.chords[static_cast<std::size_t>(i)];
        int mate = a == s ? b : a;
        if (!seen[static_cast<std::size_t>(mate)]) {
            arrows[static_cast<std::size_t>(i)] = {s, mate};
            seen[static_cast<std::size_t>(s)] = 1;
        }
        s = succ[static_cast<std::size_t>(s)];
    }
    return ArrowDiagram(cd.circle_sizes, std::move(arrows));
}

} // namespace conway
