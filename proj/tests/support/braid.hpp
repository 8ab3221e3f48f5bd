#pragma once

#include <cstdlib>
#include <random>
#include <vector>

#include "conway/core.hpp"
#include "conway/gauss_diagram.hpp"

namespace conway::testing {

/// Number of components of the closure of a braid word on `strands` strands.
/// Letters are ±j for the j-th elementary crossing.
inline int braid_closure_components(int strands, const std::vector<int>& word) {
    std::vector<int> perm(static_cast<std::size_t>(strands));
    for (int i = 0; i < strands; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    for (int v : word) {
        int j = std::abs(v);
        std::swap(perm[static_cast<std::size_t>(j - 1)], perm[static_cast<std::size_t>(j)]);
    }
    std::vector<char> seen(static_cast<std::size_t>(strands), 0);
    int cycles = 0;
    for (int p = 1; p <= strands; ++p) {
        if (seen[static_cast<std::size_t>(p - 1)]) continue;
        ++cycles;
        for (int q = p; !seen[static_cast<std::size_t>(q - 1)];
             q = perm[static_cast<std::size_t>(q - 1)]) {
            seen[static_cast<std::size_t>(q - 1)] = 1;
        }
    }
    return cycles;
}

/// Gauss diagram of a braid closure (all strands oriented coherently, so
/// positive letters are positive crossings). The component through the
/// bottom of strand 1 carries the base point. The closure must have one or
/// two components; every output is realizable by construction.
inline GaussDiagram braid_closure(int strands, const std::vector<int>& word) {
    if (braid_closure_components(strands, word) > 2)
        fail(errc::too_many_circles, "braid closure has more than two components");

    std::vector<char> traced(static_cast<std::size_t>(strands), 0);
    std::vector<std::vector<Token>> circles;
    for (int start = 1; start <= strands; ++start) {
        if (traced[static_cast<std::size_t>(start - 1)]) continue;
        std::vector<Token> tokens;
        int pos = start;
        do {
            traced[static_cast<std::size_t>(pos - 1)] = 1;
            for (std::size_t i = 0; i < word.size(); ++i) {
                int v = word[i];
                int j = std::abs(v);
                if (pos != j && pos != j + 1) continue;
                bool over = (v > 0) == (pos == j);
                tokens.push_back(Token{over ? Role::over : Role::under, static_cast<int>(i) + 1,
                                       v > 0 ? Sign::plus : Sign::minus});
                pos = pos == j ? j + 1 : j;
            }
        } while (pos != start);
        circles.push_back(std::move(tokens));
    }
    return GaussDiagram::from_tokens(circles);
}

/// Random braid closures give realizable test diagrams.
class BraidGen {
public:
    explicit BraidGen(unsigned seed) : rng_(seed) {}

    /// A random realizable diagram with the requested number of circles.
    GaussDiagram random_closure(int circles, int max_letters) {
        while (true) {
            int strands = 2 + static_cast<int>(rng_() % 3u);
            int letters = 1 + static_cast<int>(rng_() % static_cast<unsigned>(max_letters));
            std::vector<int> word;
            word.reserve(static_cast<std::size_t>(letters));
            for (int i = 0; i < letters; ++i) {
                int j = 1 + static_cast<int>(rng_() % static_cast<unsigned>(strands - 1));
                word.push_back(rng_() % 2u == 0 ? j : -j);
            }
            if (braid_closure_components(strands, word) != circles) continue;
            return braid_closure(strands, word);
        }
    }

private:
    std::mt19937 rng_;
};

} // namespace conway::testing
