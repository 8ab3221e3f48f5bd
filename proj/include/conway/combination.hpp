#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "conway/arrow_diagram.hpp"
#include "conway/core.hpp"

namespace conway {

/// A multiset of arrow diagrams with integer weights, keyed by canonical
/// text form.
struct Combination {
    struct Term {
        ArrowDiagram diagram;
        std::int64_t multiplicity;
    };

    int arrow_count = 0;
    std::map<std::string, Term> terms;

    std::size_t size() const { return terms.size(); }
};

namespace detail {

template <typename Fn>
void for_each_matching(std::vector<std::pair<int, int>>& pairs, std::vector<char>& used,
                       const std::vector<int>& order, Fn&& fn) {
    std::size_t first = 0;
    while (first < used.size() && used[static_cast<std::size_t>(order[first])]) ++first;
    if (first == used.size()) {
        fn(pairs);
        return;
    }
    int a = order[first];
    used[static_cast<std::size_t>(a)] = 1;
    for (std::size_t j = first + 1; j < used.size(); ++j) {
        int b = order[j];
        if (used[static_cast<std::size_t>(b)]) continue;
        used[static_cast<std::size_t>(b)] = 1;
        pairs.emplace_back(std::min(a, b), std::max(a, b));
        for_each_matching(pairs, used, order, fn);
        pairs.pop_back();
        used[static_cast<std::size_t>(b)] = 0;
    }
    used[static_cast<std::size_t>(a)] = 0;
}

} // namespace detail

/// All based one-component ascending arrow diagrams with m arrows, each with
/// multiplicity 1. Even m lives on one circle; odd m on two circles, the
/// unbased circle taken up to rotation. An optional seed shuffles the
/// enumeration order; the result does not depend on it.
inline Combination generate_conway_combination(int m, std::optional<unsigned> shuffle_seed = {}) {
    if (m < 1) fail(errc::parse_error, "combination size must be at least 1");
    Combination combo;
    combo.arrow_count = m;
    int total = 2 * m;

    std::vector<int> order(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) order[static_cast<std::size_t>(i)] = i;
    if (shuffle_seed) {
        std::mt19937 rng(*shuffle_seed);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng() % i]);
    }

    auto consider = [&](const std::vector<int>& circle_sizes,
                        const std::vector<std::pair<int, int>>& chords) {
        ChordDiagram cd{circle_sizes, chords};
        if (doubled_component_count(cd) != 1) return;
        ArrowDiagram arrow = to_ascending_arrow_diagram(cd);
        combo.terms.try_emplace(arrow.canonical_key(), Combination::Term{arrow, 1});
    };

    std::vector<std::pair<int, int>> pairs;
    std::vector<char> used(static_cast<std::size_t>(total), 0);
    if (m % 2 == 0) {
        detail::for_each_matching(pairs, used, order,
                                  [&](const auto& chords) { consider({total}, chords); });
    } else {
        for (int p = 1; p < total; ++p) {
            detail::for_each_matching(
                pairs, used, order,
                [&](const auto& chords) { consider({p, total - p}, chords); });
        }
    }
    return combo;
}

/// Writes `m=<m> count=<N>` and one canonical key per line.
inline void save_combination(const Combination& combo, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail(errc::parse_error, "cannot write " + path.string());
    out << "m=" << combo.arrow_count << " count=" << combo.size() << "\n";
    for (const auto& [key, term] : combo.terms) out << key << "\n";
}

inline Combination load_combination(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot read " + path.string());
    std::string header;
    std::getline(in, header);
    int m = 0;
    std::size_t count = 0;
    if (std::sscanf(header.c_str(), "m=%d count=%zu", &m, &count) != 2 || m < 1)
        fail(errc::parse_error, path.string() + ": bad cache header: " + header);
    Combination combo;
    combo.arrow_count = m;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ArrowDiagram arrow = ArrowDiagram::from_key(line);
        if (arrow.arrow_count() != m || arrow.canonical_key() != line)
            fail(errc::parse_error, path.string() + ": non-canonical cache line: " + line);
        combo.terms.try_emplace(line, Combination::Term{arrow, 1});
    }
    if (combo.size() != count)
        fail(errc::parse_error,
             path.string() + ": header announces " + std::to_string(count) + " keys, found " +
                 std::to_string(combo.size()));
    return combo;
}

/// Hands out combinations, generating at most once per size. With a cache
/// directory set, sizes are read from and written to `c<m>.txt` files there.
class CombinationStore {
public:
    CombinationStore() = default;
    explicit CombinationStore(std::filesystem::path cache_dir) : dir_(std::move(cache_dir)) {}

    const Combination& get(int m) {
        auto it = memory_.find(m);
        if (it != memory_.end()) return it->second;
        if (dir_) {
            std::filesystem::path file = *dir_ / ("c" + std::to_string(m) + ".txt");
            if (std::filesystem::exists(file))
                return memory_.emplace(m, load_combination(file)).first->second;
            const Combination& combo =
                memory_.emplace(m, generate_conway_combination(m)).first->second;
            std::filesystem::create_directories(*dir_);
            save_combination(combo, file);
            return combo;
        }
        return memory_.emplace(m, generate_conway_combination(m)).first->second;
    }

private:
    std::optional<std::filesystem::path> dir_;
    std::map<int, Combination> memory_;
};

} // namespace conway
