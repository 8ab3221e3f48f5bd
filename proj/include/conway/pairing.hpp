#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "conway/arrow_diagram.hpp"
#include "conway/combination.hpp"
#include "conway/core.hpp"
#include "conway/gauss_diagram.hpp"
#include "conway/polynomial.hpp"

namespace conway {

/// One homomorphism of an arrow diagram into a Gauss diagram, recorded as the
/// induced chord map: image[i] is the crossing hit by template arrow i.
struct HomMatch {
    std::vector<ChordId> image;
};

namespace detail {

/// Backtracking enumeration of the order- and orientation-preserving
/// embeddings of `a` into `g`. The based circles are anchored at both base
/// points; the unbased circle of `a` may start anywhere on the unbased circle
/// of `g`, and two embeddings count once when they induce the same endpoint
/// map. Calls `fn(image)` once per homomorphism.
class HomSearch {
public:
    HomSearch(const ArrowDiagram& a, const GaussDiagram& g,
              const std::function<void(const std::vector<ChordId>&)>& fn)
        : a_(a), g_(g), fn_(fn) {}

    void run() {
        if (a_.circle_count() != g_.circle_count())
            fail(errc::circle_count_mismatch,
                 "template and diagram have different numbers of circles");
        if (a_.slot_count() > g_.slot_count()) return;
        for (int c = 0; c < a_.circle_count(); ++c)
            if (a_.circle_size(c) > (g_.circle_size(c)))
                return;
        image_.assign(static_cast<std::size_t>(a_.arrow_count()), 0);
        arrow_slot_.assign(static_cast<std::size_t>(a_.arrow_count()), -1);
        extend(0, 0);
    }

private:
    // Template slots are scanned in global order; lin is the next admissible
    // linearized position on the current circle. The unbased circle's
    // linearization starts at the chosen rotation offset.
    void extend(int t, int lin) {
        if (t == a_.slot_count()) {
            fn_(image_);
            return;
        }
        int circle = t < a_.circle_size(0) ? 0 : 1;
        if (circle == 1 && t == a_.circle_size(0)) {
            // First slot on the unbased circle: pin it to each start slot.
            for (rotation_ = 0; rotation_ < g_.circle_size(1); ++rotation_)
                try_slot(t, circle, 0);
            return;
        }
        int size = g_.circle_size(circle);
        int left = (circle == 0 ? a_.circle_size(0) : a_.slot_count()) - t;
        for (int pos = lin; pos + left <= size; ++pos) try_slot(t, circle, pos);
    }

    void try_slot(int t, int circle, int lin) {
        int g_slot = g_.circle_begin(circle) +
                     (circle == 0 ? lin : (rotation_ + lin) % g_.circle_size(1));
        int ai = a_.slot_arrow(t);
        bool tail = a_.slot_is_tail(t);
        const Token& tok = g_.token(g_slot);
        if ((tok.role == Role::over) != tail) return;
        int prev_slot = arrow_slot_[static_cast<std::size_t>(ai)];
        if (prev_slot == -1) {
            // First endpoint of this arrow: the image chord is decided here.
            arrow_slot_[static_cast<std::size_t>(ai)] = g_slot;
            image_[static_cast<std::size_t>(ai)] = tok.label;
            extend(t + 1, lin + 1);
            arrow_slot_[static_cast<std::size_t>(ai)] = -1;
        } else {
            // Second endpoint: the required slot is the image chord's mate.
            const auto& ch = g_.chord(image_[static_cast<std::size_t>(ai)]);
            int mate = tail ? ch.over_slot : ch.under_slot;
            if (mate == g_slot) extend(t + 1, lin + 1);
        }
    }

    const ArrowDiagram& a_;
    const GaussDiagram& g_;
    const std::function<void(const std::vector<ChordId>&)>& fn_;
    std::vector<ChordId> image_;
    std::vector<int> arrow_slot_;
    int rotation_ = 0;
};

} // namespace detail

inline void for_each_homomorphism(const ArrowDiagram& a, const GaussDiagram& g,
                                  const std::function<void(const std::vector<ChordId>&)>& fn) {
    detail::HomSearch(a, g, fn).run();
}

inline std::vector<HomMatch> enumerate_homomorphisms(const ArrowDiagram& a,
                                                     const GaussDiagram& g) {
    std::vector<HomMatch> out;
    for_each_homomorphism(a, g, [&](const std::vector<ChordId>& image) {
        out.push_back(HomMatch{image});
    });
    return out;
}

/// Signed embedding count: the sum over homomorphisms of the product of the
/// image chords' signs. The empty template pairs to 1.
inline std::int64_t pairing_value(const ArrowDiagram& a, const GaussDiagram& g) {
    std::int64_t total = 0;
    for_each_homomorphism(a, g, [&](const std::vector<ChordId>& image) {
        int product = 1;
        for (ChordId id : image) product *= value(g.chord_sign(id));
        total = checked_add(total, product);
    });
    return total;
}

inline std::int64_t combination_pairing(const Combination& combo, const GaussDiagram& g) {
    std::int64_t total = 0;
    for (const auto& [key, term] : combo.terms)
        total = checked_add(total, checked_mul(term.multiplicity, pairing_value(term.diagram, g)));
    return total;
}

/// Conway coefficient of z^k computed through the pairing. Knots carry even
/// degrees with constant term 1; two-circle links carry odd degrees, with
/// degree 1 the linking number.
inline std::int64_t conway_coefficient(const GaussDiagram& g, int k, CombinationStore& store) {
    if (k < 0) return 0;
    if (g.circle_count() == 1) {
        if (k == 0) return 1;
        if (k % 2 != 0) return 0;
    } else {
        if (k % 2 == 0) return 0;
    }
    return combination_pairing(store.get(k), g);
}

/// The pairing-side polynomial through `max_degree`.
inline Polynomial conway_polynomial_pairing(const GaussDiagram& g, int max_degree,
                                            CombinationStore& store) {
    std::vector<std::int64_t> coeffs;
    coeffs.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int k = 0; k <= max_degree; ++k) coeffs.push_back(conway_coefficient(g, k, store));
    return Polynomial(std::move(coeffs));
}

} // namespace conway
