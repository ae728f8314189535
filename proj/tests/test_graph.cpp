#include "doctest.h"

#include "gbg/graph.hpp"
#include "gbg/json_io.hpp"

using namespace gbg;

namespace {

Graph line(int n) {
    Graph g;
    for (int i = 0; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        g.add_edge("v" + std::to_string(i), "v" + std::to_string(i + 1), "e" + std::to_string(i));
    return g;
}

} // namespace

TEST_CASE("subdivision splits an edge with fresh bivalent vertices") {
    Graph g = line(1);
    Graph s = g.subdivide("e0", 1);
    CHECK(s.vertex_count() == 3);
    CHECK(s.edge_count() == 2);
    int mid = -1;
    for (int v = 0; v < s.vertex_count(); ++v)
        if (s.degree(v) == 2) mid = v;
    REQUIRE(mid >= 0);
    // smoothing the fresh vertex restores a single edge between the endpoints
    Graph back = s.smooth(s.vertex_name(mid));
    CHECK(back.vertex_count() == 2);
    CHECK(back.edge_count() == 1);
}

TEST_CASE("loop subdivided twice forms a triangle") {
    Graph g;
    g.add_vertex("v");
    g.add_edge("v", "v", "loop");
    Graph s = g.subdivide("loop", 2);
    CHECK(s.vertex_count() == 3);
    CHECK(s.edge_count() == 3);
    for (int v = 0; v < s.vertex_count(); ++v) CHECK(s.degree(v) == 2);
    for (int e = 0; e < s.edge_count(); ++e) CHECK(!s.edge(e).is_loop());
    CHECK(s.is_connected());
}

TEST_CASE("minimal simplicial representative") {
    SUBCASE("circle with bivalent vertices becomes a triangle") {
        GraphBundle c5 = fixture("c5");
        Graph m = c5.g.minimal_simplicial_representative();
        CHECK(m.vertex_count() == 3);
        CHECK(m.edge_count() == 3);
    }
    SUBCASE("doubled edge becomes one edge plus a length-2 path") {
        Graph g;
        g.add_vertex("a");
        g.add_vertex("b");
        g.add_edge("a", "b", "e1");
        g.add_edge("a", "b", "e2");
        Graph m = g.minimal_simplicial_representative();
        CHECK(m.vertex_count() == 3);
        CHECK(m.edge_count() == 3);
    }
    SUBCASE("already simple graph is a fixed point") {
        GraphBundle k4 = fixture("k4");
        Graph m = k4.g.minimal_simplicial_representative();
        Graph mm = m.minimal_simplicial_representative();
        CHECK(m.vertex_count() == mm.vertex_count());
        CHECK(m.edge_count() == mm.edge_count());
    }
}

TEST_CASE("topological connectivity of the named families") {
    CHECK(fixture("s4").g.topological_connectivity() == 1);
    CHECK(fixture("s3").g.topological_connectivity() == 1);
    CHECK(fixture("theta3").g.topological_connectivity() == 2);
    CHECK(fixture("theta4").g.topological_connectivity() == 2);
    CHECK(fixture("c5").g.topological_connectivity() == 2);
    CHECK(fixture("w4").g.topological_connectivity() == 3);
    CHECK(fixture("k4").g.topological_connectivity() == 3);
    CHECK(fixture("prism").g.topological_connectivity() == 3);
}

TEST_CASE("connectivity is invariant under subdivision") {
    Graph g = fixture("k4").g;
    Graph s = g.subdivide("Bp", 3);
    CHECK(s.topological_connectivity() == g.topological_connectivity());
}

TEST_CASE("first Betti numbers") {
    Graph tree = line(4);
    CHECK(tree.first_betti() == 0);
    CHECK(fixture("c5").g.first_betti() == 1);
    CHECK(fixture("theta4").g.first_betti() == 3);
    Graph s = fixture("theta4").g.subdivide("t7", 2);
    CHECK(s.first_betti() == 3);
}

TEST_CASE("face decompositions satisfy Euler counts") {
    SUBCASE("triangle has two faces") {
        Graph g;
        g.add_vertex("a");
        g.add_vertex("b");
        g.add_vertex("c");
        g.add_edge("a", "b", "ab");
        g.add_edge("b", "c", "bc");
        g.add_edge("c", "a", "ca");
        FaceDecomposition fd = faces(g);
        CHECK(fd.count() == 2);
    }
    for (const auto& name : fixture_names()) {
        GraphBundle b = fixture(name);
        FaceDecomposition fd = faces(b.g);
        CHECK(fd.count() == b.g.first_betti() + 1);
        // every half-edge in exactly one face walk
        int darts = 0;
        for (const auto& f : fd.faces) darts += static_cast<int>(f.size());
        CHECK(darts == 2 * b.g.edge_count());
    }
}

TEST_CASE("graph JSON round trip") {
    GraphBundle b = fixture("theta4");
    std::string text = graph_to_json(b.g, b.deleted_hints);
    GraphBundle b2 = graph_from_json(text);
    CHECK(b2.g.vertex_count() == b.g.vertex_count());
    CHECK(b2.g.edge_count() == b.g.edge_count());
    CHECK(b2.deleted_hints == b.deleted_hints);
    CHECK(b2.g.root() == b.g.root());
}

TEST_CASE("malformed graph JSON is rejected") {
    CHECK_THROWS_AS(graph_from_json("{"), input_error);
    CHECK_THROWS_AS(graph_from_json("{\"vertices\": [\"a\"]}"), input_error);
    CHECK_THROWS_AS(
        graph_from_json(
            "{\"vertices\": [\"a\"], \"edges\": [[\"a\", \"zz\", \"e\"]]}"),
        input_error);
}
