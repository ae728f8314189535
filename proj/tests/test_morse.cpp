#include "doctest.h"

#include <map>

#include "gbg/theta4_reference.hpp"
#include "gbg/json_io.hpp"
#include "gbg/morse.hpp"
#include "gbg/presentation.hpp"

using namespace gbg;

namespace {

SpanningTree fixture_tree(const std::string& name) {
    GraphBundle b = fixture(name);
    return build_spanning_tree(b.g, *b.g.root(), b.deleted_hints);
}

Cell appendix_cell(const SpanningTree& t, const theta4_ref::OneCell& oc) {
    int e = -1;
    for (int i = 0; i < t.host.edge_count(); ++i)
        if (t.tau[i] == oc.tau && t.iota[i] == oc.iota) e = i;
    REQUIRE(e >= 0);
    return make_cell(t, oc.verts, {e});
}

} // namespace

TEST_CASE("the basepoint is the unique critical 0-cell") {
    for (const auto& name : {"s3", "theta3", "theta4"}) {
        SpanningTree t = fixture_tree(name);
        for (int n = 2; n <= 3; ++n) {
            if (!is_sufficiently_subdivided(t.host, n)) continue;
            MorseComplex mc(t, n, 2);
            REQUIRE(mc.critical(0).size() == 1);
            CHECK(mc.cell(0, mc.critical(0)[0]) == mc.basepoint());
        }
    }
}

TEST_CASE("appendix: g0 is critical, order-respecting examples behave") {
    SpanningTree t = fixture_tree("theta4");
    MorseComplex mc(t, 3, 3);
    Cell g0 = appendix_cell(t, theta4_ref::one_cells()[0]);
    CHECK(mc.kind_of(g0) == CellKind::Critical);
}

TEST_CASE("appendix: 25 critical 1-cells and 21 critical 2-cells, exact contents") {
    SpanningTree t = fixture_tree("theta4");
    MorseComplex mc(t, 3, 3);
    REQUIRE(mc.critical(1).size() == 25);
    REQUIRE(mc.critical(2).size() == 21);
    // match by content
    std::map<int, int> ours_to_g; // index in critical(1) order -> g number
    for (int gi = 0; gi < 25; ++gi) {
        Cell c = appendix_cell(t, theta4_ref::one_cells()[gi]);
        int idx = mc.find_cell(c);
        REQUIRE(idx >= 0);
        CHECK(mc.kind(1, idx) == CellKind::Critical);
        int pos = -1;
        for (int k = 0; k < 25; ++k)
            if (mc.critical(1)[k] == idx) pos = k;
        REQUIRE(pos >= 0);
        ours_to_g[pos] = gi;
    }
    CHECK(ours_to_g.size() == 25);
}

TEST_CASE("appendix: every reduced boundary word matches the published one") {
    SpanningTree t = fixture_tree("theta4");
    MorseComplex mc(t, 3, 3);
    MorsePresentation mp = morse_presentation(mc);
    REQUIRE(mp.generators.size() == 25);
    REQUIRE(mp.relators.size() == 21);

    // generator renumbering: our dense index -> appendix g number
    std::map<int, int> to_g;
    for (int gi = 0; gi < 25; ++gi) {
        Cell c = appendix_cell(t, theta4_ref::one_cells()[gi]);
        for (size_t k = 0; k < mp.generators.size(); ++k)
            if (mp.generators[k] == c) to_g[static_cast<int>(k)] = gi;
    }
    REQUIRE(to_g.size() == 25);

    // match each critical 2-cell by content
    int matched = 0;
    for (const auto& tc : theta4_ref::two_cells()) {
        int e1 = -1, e2 = -1;
        for (int i = 0; i < t.host.edge_count(); ++i) {
            if (t.tau[i] == tc.tau1 && t.iota[i] == tc.iota1) e1 = i;
            if (t.tau[i] == tc.tau2 && t.iota[i] == tc.iota2) e2 = i;
        }
        REQUIRE(e1 >= 0);
        REQUIRE(e2 >= 0);
        Cell two = make_cell(t, {tc.vert}, {e1, e2});
        int which = -1;
        for (size_t k = 0; k < mp.relator_cells.size(); ++k)
            if (mp.relator_cells[k] == two) which = static_cast<int>(k);
        REQUIRE(which >= 0);
        // our relator, renamed into appendix numbering
        std::vector<int> ours;
        for (int l : mp.relators[which]) {
            int g = to_g.at(std::abs(l) - 1);
            ours.push_back(l > 0 ? g + 1 : -(g + 1));
        }
        Word a((std::vector<int>(ours)));
        Word b((std::vector<int>(tc.word)));
        CHECK(cyclically_equal(a, b, true));
        ++matched;
    }
    CHECK(matched == 21);
}

TEST_CASE("matching is a bijection on every fixture (property)") {
    for (const auto& name : {"s3", "s4", "theta3", "theta4", "vartheta3"}) {
        SpanningTree t = fixture_tree(name);
        for (int n = 2; n <= 3; ++n) {
            if (!is_sufficiently_subdivided(t.host, n)) continue;
            MorseComplex mc(t, n, n);
            for (int d = 0; d < n; ++d) {
                int red = 0, col_up = 0;
                for (int i = 0; i < mc.cell_count(d); ++i)
                    if (mc.kind(d, i) == CellKind::Redundant) ++red;
                for (int i = 0; i < mc.cell_count(d + 1); ++i)
                    if (mc.kind(d + 1, i) == CellKind::Collapsible) ++col_up;
                CHECK(red == col_up);
                // partners are mutual
                for (int i = 0; i < mc.cell_count(d); ++i) {
                    if (mc.kind(d, i) != CellKind::Redundant) continue;
                    int j = mc.match_up(d, i);
                    REQUIRE(j >= 0);
                    CHECK(mc.match_down(d + 1, j) == i);
                }
            }
        }
    }
}

TEST_CASE("star groups are free: no critical 2-cells") {
    for (const auto& name : {"s3", "s4", "s5"}) {
        GraphBundle b = fixture(name);
        for (int n = 2; n <= 3; ++n) {
            Graph g = ensure_sufficient_subdivision(b.g, n);
            SpanningTree t = build_spanning_tree(g, *b.g.root());
            MorseComplex mc(t, n, 2);
            CHECK(mc.critical(2).empty());
        }
    }
}

TEST_CASE("F-infinity is idempotent on generator-shaped loop words") {
    SpanningTree t = fixture_tree("theta4");
    MorseComplex mc(t, 3, 3);
    for (int idx : mc.critical(1)) {
        std::vector<int> w{idx + 1};
        std::vector<int> once = mc.reduce(w);
        std::vector<int> twice = mc.reduce(once);
        CHECK(once == twice);
    }
}

TEST_CASE("reduce_to_critical validates closure") {
    SpanningTree t = fixture_tree("theta4");
    MorseComplex mc(t, 3, 2);
    // a single collapsible letter does not chain back to the basepoint
    Cell c = make_cell(t, {0, 1}, {t.host.require_edge("t3")});
    CHECK_THROWS_AS(mc.validate_closed_loop({SignedCell{c, 1}}), input_error);
}
