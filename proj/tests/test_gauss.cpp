#include "doctest.h"

#include <algorithm>
#include <set>

#include "conway/gauss_diagram.hpp"
#include "support/random_gauss.hpp"

using conway::ChordId;
using conway::classify_subset;
using conway::CrossingSubset;
using conway::Direction;
using conway::errc;
using conway::GaussDiagram;
using conway::Role;
using conway::Sign;
using conway::smooth_count_components;
using conway::smoothed_traversal;

namespace {

const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
const char* kHopf = "O1+ U2+ | U1+ O2+";

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const conway::error& e) {
        return e.code();
    }
    throw std::logic_error("expected a conway::error");
}

} // namespace

TEST_CASE("gauss code parsing") {
    GaussDiagram d = GaussDiagram::parse(kTrefoil);
    CHECK(d.circle_count() == 1);
    CHECK(d.chord_count() == 3);
    CHECK(d.slot_count() == 6);
    CHECK(d.over_slot(1) == 0);
    CHECK(d.under_slot(1) == 3);
    CHECK(d.chord_sign(2) == Sign::plus);
    CHECK(d.serialize() == kTrefoil);

    GaussDiagram hopf = GaussDiagram::parse(kHopf);
    CHECK(hopf.circle_count() == 2);
    CHECK(hopf.circle_size(0) == 2);
    CHECK(hopf.circle_size(1) == 2);
    CHECK(hopf.inter_circle(1));
    CHECK(hopf.inter_circle(2));
    CHECK(hopf.serialize() == kHopf);
}

TEST_CASE("gauss code parsing accepts compact and ragged spacing") {
    CHECK(GaussDiagram::parse("O1+U2+U1+O2+") == GaussDiagram::parse("O1+ U2+  U1+ O2+"));
    CHECK(GaussDiagram::parse(" O1+ U2+ |U1+O2+ ") == GaussDiagram::parse(kHopf));
}

TEST_CASE("gauss code parse errors") {
    CHECK(code_of([] { GaussDiagram::parse("O1+ U1-"); }) == errc::sign_mismatch);
    CHECK(code_of([] { GaussDiagram::parse("O1+ O1+"); }) == errc::duplicate_role);
    CHECK(code_of([] { GaussDiagram::parse("O1+ U2+ U1+"); }) == errc::dangling_chord);
    CHECK(code_of([] { GaussDiagram::parse("O1+ U1+ | | "); }) == errc::too_many_circles);
    CHECK(code_of([] { GaussDiagram::parse("X1+ Y1+"); }) == errc::malformed_token);
    CHECK(code_of([] { GaussDiagram::parse("O+ U+"); }) == errc::malformed_token);
    CHECK(code_of([] { GaussDiagram::parse("O1 U1"); }) == errc::malformed_token);
    CHECK(code_of([] { GaussDiagram::parse("O0+ U0+"); }) == errc::malformed_token);
}

TEST_CASE("empty diagrams") {
    GaussDiagram empty_knot = GaussDiagram::parse("");
    CHECK(empty_knot.circle_count() == 1);
    CHECK(empty_knot.slot_count() == 0);
    CHECK(empty_knot.serialize() == "");

    GaussDiagram two_circles = GaussDiagram::parse("|");
    CHECK(two_circles.circle_count() == 2);
    CHECK(two_circles.serialize() == "|");

    GaussDiagram half = GaussDiagram::parse("O1+ U1+ |");
    CHECK(half.circle_count() == 2);
    CHECK(half.circle_size(1) == 0);
    CHECK(half.serialize() == "O1+ U1+ |");
    CHECK(GaussDiagram::parse("| U1+ O1+").serialize() == "| U1+ O1+");
}

TEST_CASE("round trip on random diagrams") {
    conway::testing::DiagramGen gen(101);
    for (int i = 0; i < 300; ++i) {
        GaussDiagram d = gen.random_diagram(8);
        CHECK(GaussDiagram::parse(d.serialize()) == d);
    }
}

TEST_CASE("smoothing component counts") {
    CHECK(smooth_count_components(GaussDiagram::parse("O1+ U1+"), {1}) == 2);
    CHECK(smooth_count_components(GaussDiagram::parse("O1+ U2+ U1+ O2+"), {1, 2}) == 1);
    CHECK(smooth_count_components(GaussDiagram::parse(""), {}) == 1);
    CHECK(smooth_count_components(GaussDiagram::parse("|"), {}) == 2);
    CHECK(smooth_count_components(GaussDiagram::parse(kHopf), {1}) == 1);
    CHECK(code_of([] {
              smooth_count_components(GaussDiagram::parse("O1+ U1+"), {2});
          }) == errc::unknown_chord);
}

TEST_CASE("smoothed traversal") {
    GaussDiagram d = GaussDiagram::parse("O1+ U2+ U1+ O2+");
    CHECK(smoothed_traversal(d, {1, 2}) == std::vector<int>{0, 3, 2, 1});
    CHECK(smoothed_traversal(d, {}) == std::vector<int>{0, 1, 2, 3});
    CHECK(code_of([] {
              smoothed_traversal(GaussDiagram::parse("O1+ U1+"), {1});
          }) == errc::not_one_component);
}

TEST_CASE("subset classification") {
    GaussDiagram interleaved = GaussDiagram::parse("O1+ U2+ U1+ O2+");
    CHECK(classify_subset(interleaved, {1, 2}, Direction::ascending));
    CHECK_FALSE(classify_subset(interleaved, {1, 2}, Direction::descending));

    GaussDiagram straight = GaussDiagram::parse("O1+ O2+ U1+ U2+");
    CHECK_FALSE(classify_subset(straight, {1, 2}, Direction::ascending));

    CHECK(classify_subset(interleaved, {}, Direction::ascending));
    CHECK(classify_subset(interleaved, {}, Direction::descending));
    CHECK(classify_subset(GaussDiagram::parse(""), {}, Direction::ascending));
    // A single smoothing splits a knot, so singletons never classify.
    CHECK_FALSE(classify_subset(interleaved, {1}, Direction::ascending));
}

TEST_CASE("component count parity") {
    conway::testing::DiagramGen gen(202);
    for (int i = 0; i < 200; ++i) {
        GaussDiagram d = gen.random_diagram(6);
        auto ids = d.chord_ids();
        int n = static_cast<int>(ids.size());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            CrossingSubset subset;
            for (int b = 0; b < n; ++b)
                if (mask >> b & 1) subset.push_back(ids[static_cast<std::size_t>(b)]);
            int components = smooth_count_components(d, subset);
            int start = d.circle_count();
            CHECK(((components - start) % 2 + 2) % 2 == static_cast<int>(subset.size()) % 2);
            if (components == 1)
                CHECK(static_cast<int>(subset.size()) % 2 == (d.circle_count() == 1 ? 0 : 1));
        }
    }
}

TEST_CASE("classification mirrors under arrow reversal") {
    conway::testing::DiagramGen gen(303);
    for (int i = 0; i < 150; ++i) {
        GaussDiagram d = gen.random_diagram(6);
        GaussDiagram rev = conway::arrow_reversed(d);
        auto ids = d.chord_ids();
        int n = static_cast<int>(ids.size());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            CrossingSubset subset;
            for (int b = 0; b < n; ++b)
                if (mask >> b & 1) subset.push_back(ids[static_cast<std::size_t>(b)]);
            CHECK(classify_subset(rev, subset, Direction::ascending) ==
                  classify_subset(d, subset, Direction::descending));
        }
    }
}
