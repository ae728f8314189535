#include "doctest.h"

#include "gbg/json_io.hpp"
#include "gbg/tree.hpp"

using namespace gbg;

TEST_CASE("theta4 appendix tree reproduces the published labeling") {
    GraphBundle b = fixture("theta4");
    SpanningTree t = build_spanning_tree(b.g, *b.g.root(), b.deleted_hints);
    // The fixture names its vertices by the expected ribbon labels 0..14.
    for (int l = 0; l < t.labels(); ++l)
        CHECK(t.host.vertex_name(t.vertex_at[l]) == std::to_string(l));
    REQUIRE(t.deleted_edges.size() == 3);
    CHECK(t.has_e0);
    CHECK(t.host.edge(t.deleted_edges[0]).name == "e0");
    CHECK(t.host.edge(t.deleted_edges[1]).name == "e1");
    CHECK(t.host.edge(t.deleted_edges[2]).name == "e2");
    CHECK(t.tau[t.deleted_edges[0]] == 0);
    CHECK(t.iota[t.deleted_edges[0]] == 14);
    CHECK(t.tau[t.deleted_edges[1]] == 6);
    CHECK(t.iota[t.deleted_edges[1]] == 10);
    CHECK(t.tau[t.deleted_edges[2]] == 4);
    CHECK(t.iota[t.deleted_edges[2]] == 12);
}

TEST_CASE("a tree graph is its own spanning tree with no deleted edges") {
    Graph g;
    for (int i = 0; i < 5; ++i) g.add_vertex("v" + std::to_string(i));
    g.add_edge("v0", "v1", "a");
    g.add_edge("v1", "v2", "b");
    g.add_edge("v1", "v3", "c");
    g.add_edge("v3", "v4", "d");
    SpanningTree t = build_spanning_tree(g, "v0");
    CHECK(t.deleted_edges.empty());
    CHECK(!t.has_e0);
    for (int e = 0; e < t.host.edge_count(); ++e) CHECK(t.in_tree[e]);
}

TEST_CASE("path graph labels increase along the path") {
    Graph g;
    for (int i = 0; i < 4; ++i) g.add_vertex("p" + std::to_string(i));
    for (int i = 0; i < 3; ++i)
        g.add_edge("p" + std::to_string(i), "p" + std::to_string(i + 1), "e" + std::to_string(i));
    SpanningTree t = build_spanning_tree(g, "p0");
    for (int i = 0; i < 4; ++i) CHECK(t.label_of[g.require_vertex("p" + std::to_string(i))] == i);
}

TEST_CASE("star rooted at a leaf labels the arms clockwise") {
    GraphBundle b = fixture("s3");
    SpanningTree t = build_spanning_tree(b.g, "a0", b.deleted_hints);
    CHECK(t.label_of[b.g.require_vertex("a0")] == 0);
    CHECK(t.label_of[b.g.require_vertex("c")] == 1);
    CHECK(t.label_of[b.g.require_vertex("a1")] == 2);
    CHECK(t.label_of[b.g.require_vertex("a2")] == 3);
}

TEST_CASE("orientation invariants: tau below iota, parents first") {
    for (const auto& name : {"theta4", "k4", "w4", "prism", "theta3", "vartheta3"}) {
        GraphBundle b = fixture(name);
        SpanningTree t = build_spanning_tree(b.g, *b.g.root(), b.deleted_hints);
        for (int e = 0; e < t.host.edge_count(); ++e) CHECK(t.iota[e] > t.tau[e]);
        for (int l = 1; l < t.labels(); ++l) {
            CHECK(t.parent_label[l] < l);
            CHECK(t.iota[t.parent_edge[l]] == l);
        }
        for (int e : t.deleted_edges) {
            CHECK(t.host.degree(t.host.edge(e).u) == 2);
            CHECK(t.host.degree(t.host.edge(e).v) == 2);
        }
    }
}

TEST_CASE("ribbon labeling is deterministic") {
    GraphBundle b = fixture("w4");
    SpanningTree t1 = build_spanning_tree(b.g, *b.g.root(), b.deleted_hints);
    SpanningTree t2 = build_spanning_tree(b.g, *b.g.root(), b.deleted_hints);
    CHECK(t1.label_of == t2.label_of);
    CHECK(tree_to_json(t1) == tree_to_json(t2));
}

TEST_CASE("tree paths") {
    GraphBundle b = fixture("theta4");
    SpanningTree t = build_spanning_tree(b.g, *b.g.root(), b.deleted_hints);
    CHECK(t.tree_path(5, 5) == std::vector<int>{5});
    CHECK(t.tree_path(0, 2) == std::vector<int>{0, 1, 2});
    CHECK(t.tree_path(4, 6) == std::vector<int>{4, 3, 2, 5, 6});
}

TEST_CASE("default builder keeps deleted endpoints bivalent") {
    // Theta_3 in minimal form: two vertices, three parallel edges; the default
    // builder must subdivide to expose bivalent deleted endpoints.
    Graph g;
    g.add_vertex("x");
    g.add_vertex("y");
    g.add_edge("x", "y", "p1");
    g.add_edge("x", "y", "p2");
    g.add_edge("x", "y", "p3");
    Graph s = g.subdivide("p1", 2); // give the root a bivalent seat
    std::string mid = "p1.1";
    SpanningTree t = build_spanning_tree(s, mid);
    CHECK(t.deleted_edges.size() == 2);
    t.check_invariants();
}
