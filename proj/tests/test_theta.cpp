#include "doctest.h"

#include "gbg/json_io.hpp"
#include "gbg/theta.hpp"

using namespace gbg;

namespace {

SpanningTree fixture_tree(const std::string& name) {
    GraphBundle b = fixture(name);
    return build_spanning_tree(b.g, *b.g.root(), b.deleted_hints);
}

} // namespace

TEST_CASE("theta3: (v;1,2) and (w;1,2) are related by the identity embedding") {
    SpanningTree t = fixture_tree("theta3");
    int v = t.label_of[t.host.require_vertex("v")];
    int w = t.label_of[t.host.require_vertex("w")];
    auto wit = theta_related(t, Triple{v, 1, 2}, Triple{w, 1, 2});
    REQUIRE(wit.has_value());
    CHECK(wit->shape == "theta3");
}

TEST_CASE("vartheta3: (v;1,2) and (w;1,2) are related through the arm template") {
    SpanningTree t = fixture_tree("vartheta3");
    int v = t.label_of[t.host.require_vertex("v")];
    int w = t.label_of[t.host.require_vertex("w")];
    auto wit = theta_related(t, Triple{v, 1, 2}, Triple{w, 1, 2});
    REQUIRE(wit.has_value());
    CHECK(wit->shape == "vartheta3");
}

TEST_CASE("stars admit no theta relations") {
    GraphBundle b = fixture("s4");
    Graph g = ensure_sufficient_subdivision(b.g, 2);
    SpanningTree t = build_spanning_tree(g, "a0");
    auto ts = all_triples(t);
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j)
            CHECK(!theta_related(t, ts[i], ts[j]).has_value());
}

TEST_CASE("K4 and W4 triples collapse to a single class") {
    for (const auto& name : {"k4", "w4", "prism"}) {
        SpanningTree t = fixture_tree(name);
        ThetaClasses cls = theta_classes(t);
        CHECK(cls.classes.size() == 1);
    }
}

TEST_CASE("theta4 classes pair v-triples with w-triples through the theta subgraphs") {
    SpanningTree t = fixture_tree("theta4");
    ThetaClasses cls = theta_classes(t);
    // strict tree-compatible reading: {(v;1,3),(w;2,3)}, {(v;2,3),(w;1,3)},
    // and the two singletons (v;1,2), (w;1,2)
    CHECK(cls.classes.size() == 4);
    int pairs = 0, singles = 0;
    for (const auto& c : cls.classes) {
        if (c.size() == 2) ++pairs;
        if (c.size() == 1) ++singles;
    }
    CHECK(pairs == 2);
    CHECK(singles == 2);
}

TEST_CASE("replaying the theta relation reduces to the empty word") {
    SpanningTree t = fixture_tree("theta3");
    int v = t.label_of[t.host.require_vertex("v")];
    int w = t.label_of[t.host.require_vertex("w")];
    Triple tv{v, 1, 2}, tw{w, 1, 2};
    auto wit = theta_related(t, tv, tw);
    REQUIRE(wit.has_value());
    for (int n = 2; n <= 3; ++n) {
        MorseComplex mc(t, n, 2);
        auto R = replay_theta_relation(mc, *wit, tv, tw);
        CHECK(mc.reduce_signed(R).empty());
    }
}

TEST_CASE("replaying the vartheta relation reduces to the empty word") {
    SpanningTree t = fixture_tree("vartheta3");
    int v = t.label_of[t.host.require_vertex("v")];
    int w = t.label_of[t.host.require_vertex("w")];
    Triple tv{v, 1, 2}, tw{w, 1, 2};
    auto wit = theta_related(t, tv, tw);
    REQUIRE(wit.has_value());
    MorseComplex mc(t, 2, 2);
    auto R = replay_theta_relation(mc, *wit, tv, tw);
    CHECK(mc.reduce_signed(R).empty());
}

TEST_CASE("facial cycles of K4 and the wheel") {
    Graph k4m = fixture("k4").g.minimal_simplicial_representative();
    // any face walk is facial
    FaceDecomposition fd = faces(k4m);
    for (const auto& face : fd.face_edge_sets()) {
        std::vector<std::string> names;
        for (int e : face) names.push_back(k4m.edge(e).name);
        CHECK(is_facial_cycle(k4m, names));
    }
    // wheel rim is facial (removing it leaves the hub)
    Graph w4m = fixture("w4").g.minimal_simplicial_representative();
    std::vector<std::string> rim;
    for (int e = 0; e < w4m.edge_count(); ++e) {
        int u = w4m.edge(e).u, v = w4m.edge(e).v;
        if (w4m.degree(u) == 3 && w4m.degree(v) == 3) rim.push_back(w4m.edge(e).name);
    }
    REQUIRE(rim.size() == 4);
    CHECK(is_facial_cycle(w4m, rim));
}

TEST_CASE("the octahedron equator separates the poles") {
    // octahedron: 6 vertices, 12 edges, 3-connected planar
    Graph g;
    for (int i = 0; i < 4; ++i) g.add_vertex("q" + std::to_string(i));
    g.add_vertex("top");
    g.add_vertex("bot");
    for (int i = 0; i < 4; ++i) {
        g.add_edge("q" + std::to_string(i), "q" + std::to_string((i + 1) % 4),
                   "eq" + std::to_string(i));
        g.add_edge("top", "q" + std::to_string(i), "t" + std::to_string(i));
        g.add_edge("bot", "q" + std::to_string(i), "b" + std::to_string(i));
    }
    // planar rotation: square q0..q3 around, top inside the square's upper
    // region, bottom outside
    g.set_rotation_by_names("top", {"t0", "t1", "t2", "t3"});
    g.set_rotation_by_names("bot", {"b3", "b2", "b1", "b0"});
    g.set_rotation_by_names("q0", {"eq0", "t0", "eq3", "b0"});
    g.set_rotation_by_names("q1", {"eq1", "t1", "eq0", "b1"});
    g.set_rotation_by_names("q2", {"eq2", "t2", "eq1", "b2"});
    g.set_rotation_by_names("q3", {"eq3", "t3", "eq2", "b3"});
    REQUIRE(g.topological_connectivity() >= 3);
    CHECK(!is_facial_cycle(g, {"eq0", "eq1", "eq2", "eq3"}));
}

TEST_CASE("theta4 geometric presentation abelianization is consistent") {
    SpanningTree t = fixture_tree("theta4");
    MorseComplex mc(t, 3, 2);
    GeometricPresentation gp = geometric_presentation(mc);
    MorsePresentation mp = morse_presentation(mc);
    Presentation raw;
    raw.gens = mp.generator_names;
    for (const auto& r : mp.relators) raw.relators.push_back(Word(std::vector<int>(r)));
    CHECK(abelianization(gp.p) == abelianization(raw));
}
