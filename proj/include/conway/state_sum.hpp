#pragma once

#include <cstdint>
#include <vector>

#include "conway/core.hpp"
#include "conway/gauss_diagram.hpp"
#include "conway/polynomial.hpp"

namespace conway {

/// Direct evaluation of the crossing-subset state model: the sum over
/// ascending (or descending) one-component subsets S of the writhe product
/// times z^|S|. The empty subset gives a knot diagram its constant term 1;
/// two-circle diagrams only collect odd subset sizes.
inline Polynomial nabla_state(const GaussDiagram& g, Direction dir) {
    std::vector<ChordId> ids = g.chord_ids();
    int n = static_cast<int>(ids.size());
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n) + 1, 0);
    CrossingSubset subset;
    subset.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        subset.clear();
        int product = 1;
        for (int i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            subset.push_back(ids[static_cast<std::size_t>(i)]);
            product *= value(g.chord_sign(ids[static_cast<std::size_t>(i)]));
        }
        if (classify_subset(g, subset, dir))
            coeffs[subset.size()] = checked_add(coeffs[subset.size()], product);
    }
    return Polynomial(std::move(coeffs));
}

} // namespace conway
