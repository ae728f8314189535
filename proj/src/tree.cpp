#include "gbg/tree.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "json.hpp"

namespace gbg {

namespace {

// Ribbon labeling: depth-first from the root, taking tree edges clockwise
// after the incoming half-edge. First-visit order gives the labels.
void ribbon_label(SpanningTree& t) {
    const Graph& g = t.host;
    int n = g.vertex_count();
    t.label_of.assign(n, -1);
    t.vertex_at.clear();
    int root = g.require_vertex(*g.root());

    struct Frame {
        int vertex;
        int arrived_index; // index of incoming half-edge in rotation, -1 at root
        int step = 0;      // how many rotation slots have been tried
    };
    std::vector<Frame> stack;
    auto visit = [&](int v) {
        t.label_of[v] = static_cast<int>(t.vertex_at.size());
        t.vertex_at.push_back(v);
    };
    visit(root);
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& rot = g.rotation(f.vertex);
        int deg = static_cast<int>(rot.size());
        if (f.step >= deg) {
            stack.pop_back();
            continue;
        }
        int idx;
        if (f.arrived_index < 0) {
            idx = f.step; // root: scan rotation from slot 0
        } else {
            idx = (f.arrived_index + 1 + f.step) % deg;
        }
        f.step++;
        const HalfEdge& h = rot[idx];
        if (!t.in_tree[h.edge]) continue;
        if (f.arrived_index >= 0 && idx == f.arrived_index) continue;
        int w = g.other_end(h.edge, f.vertex);
        if (t.label_of[w] >= 0) continue;
        visit(w);
        // Incoming half-edge at w is the opposite side of h.
        const Edge& ed = g.edge(h.edge);
        int wside = (ed.u == w && ed.v == f.vertex) ? 0 : 1;
        // For non-loops side is determined by which endpoint w is.
        if (!ed.is_loop()) wside = (ed.u == w) ? 0 : 1;
        int arrived = -1;
        const auto& wrot = g.rotation(w);
        for (int i = 0; i < static_cast<int>(wrot.size()); ++i)
            if (wrot[i].edge == h.edge && wrot[i].side == wside) arrived = i;
        check(arrived >= 0, "ribbon labeling: incoming half-edge not found");
        stack.push_back({w, arrived, 0});
    }
}

void finish_tree(SpanningTree& t) {
    const Graph& g = t.host;
    ribbon_label(t);
    for (int v = 0; v < g.vertex_count(); ++v)
        check(t.label_of[v] >= 0, "spanning tree does not reach vertex " + g.vertex_name(v));

    int E = g.edge_count();
    t.iota.assign(E, -1);
    t.tau.assign(E, -1);
    for (int e = 0; e < E; ++e) {
        int lu = t.label_of[g.edge(e).u];
        int lv = t.label_of[g.edge(e).v];
        require(lu != lv, "loop edges are not supported once a tree is fixed; subdivide first");
        t.iota[e] = std::max(lu, lv);
        t.tau[e] = std::min(lu, lv);
    }

    int L = g.vertex_count();
    t.parent_label.assign(L, -1);
    t.parent_edge.assign(L, -1);
    t.children.assign(L, {});
    for (int e = 0; e < E; ++e) {
        if (!t.in_tree[e]) continue;
        int child = t.iota[e], par = t.tau[e];
        check(t.parent_edge[child] == -1, "two tree edges with the same iota label");
        t.parent_edge[child] = e;
        t.parent_label[child] = par;
        t.children[par].push_back(child);
    }
    for (auto& c : t.children) std::sort(c.begin(), c.end());

    // Deleted edges: e0 first when present, then ascending by iota label.
    std::vector<int> dels;
    for (int e = 0; e < E; ++e)
        if (!t.in_tree[e]) dels.push_back(e);
    std::sort(dels.begin(), dels.end(), [&](int a, int b) { return t.iota[a] < t.iota[b]; });
    t.deleted_edges.clear();
    t.has_e0 = false;
    for (int e : dels)
        if (t.tau[e] == 0) {
            check(!t.has_e0, "two deleted edges at the root");
            t.deleted_edges.push_back(e);
            t.has_e0 = true;
        }
    for (int e : dels)
        if (t.tau[e] != 0) t.deleted_edges.push_back(e);

    t.check_invariants();
}

} // namespace

void SpanningTree::check_invariants() const {
    const Graph& g = host;
    int tree_edges = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if (in_tree[e]) ++tree_edges;
    require(tree_edges == g.vertex_count() - 1, "tree edge count must be |V|-1");
    // Root univalent within the tree.
    int root = g.require_vertex(*g.root());
    int deg_in_tree = 0;
    for (const HalfEdge& h : g.rotation(root))
        if (in_tree[h.edge]) ++deg_in_tree;
    require(deg_in_tree == 1, "root must be univalent in the spanning tree");
    require(label_of[root] == 0, "root must carry label 0");
    // Deleted edges have bivalent endpoints.
    for (int e : deleted_edges) {
        require(g.degree(g.edge(e).u) == 2 && g.degree(g.edge(e).v) == 2,
                "deleted edge " + g.edge(e).name + " must have bivalent endpoints");
    }
    // Orientation convention: parents precede children.
    for (int l = 1; l < labels(); ++l) {
        check(parent_edge[l] >= 0, "non-root label without parent edge");
        check(parent_label[l] < l, "ribbon labels must increase away from the root");
    }
}

std::vector<int> SpanningTree::tree_path(int a, int b) const {
    std::vector<int> up_a{a}, up_b{b};
    int x = a, y = b;
    while (x != y) {
        if (x > y) {
            x = parent_label[x];
            up_a.push_back(x);
        } else {
            y = parent_label[y];
            up_b.push_back(y);
        }
    }
    // up_a ends at the meet; append reversed up_b without repeating it.
    for (int i = static_cast<int>(up_b.size()) - 2; i >= 0; --i) up_a.push_back(up_b[i]);
    return up_a;
}

int SpanningTree::edge_between(int a, int b) const {
    int child = std::max(a, b), par = std::min(a, b);
    int e = parent_edge[child];
    check(e >= 0 && tau[e] == par, "edge_between: labels are not tree-adjacent");
    return e;
}

int SpanningTree::deleted_position(int edge_id) const {
    for (int i = 0; i < static_cast<int>(deleted_edges.size()); ++i)
        if (deleted_edges[i] == edge_id) return i;
    return -1;
}

SpanningTree build_spanning_tree(const Graph& g_in, const std::string& root,
                                 const std::vector<std::string>& deleted_hints) {
    Graph g = g_in;
    g.validate();
    require(g.is_connected(), "spanning tree requires a connected graph");
    g.require_vertex(root);
    g.set_root(root);

    if (!deleted_hints.empty()) {
        SpanningTree t;
        t.host = g;
        t.in_tree.assign(g.edge_count(), 1);
        for (const auto& name : deleted_hints) {
            int e = g.require_edge(name);
            require(t.in_tree[e], "deleted edge hinted twice: " + name);
            t.in_tree[e] = 0;
        }
        finish_tree(t);
        return t;
    }

    // Default: BFS in rotation order; re-subdivide until deleted-edge
    // endpoints are bivalent and the root is univalent in the tree.
    for (int attempt = 0; attempt < 4 * g.edge_count() + 8; ++attempt) {
        int rootv = g.require_vertex(root);
        if (g.degree(rootv) > 2) {
            // Root at a fresh bivalent vertex on the first rotation edge.
            int e = g.rotation(rootv)[0].edge;
            Graph g2 = g.subdivide_edge_id(e, 1);
            std::string mid = g2.vertex_name(g2.vertex_count() - 1);
            g2.set_root(mid);
            g = g2;
            return build_spanning_tree(g, mid, {});
        }
        std::vector<char> in_tree(g.edge_count(), 0);
        std::vector<char> seen(g.vertex_count(), 0);
        std::queue<int> q;
        seen[rootv] = 1;
        q.push(rootv);
        bool first_at_root = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const HalfEdge& h : g.rotation(v)) {
                int w = g.other_end(h.edge, v);
                if (seen[w]) continue;
                if (v == rootv && !first_at_root) continue; // keep root univalent in T
                if (v == rootv) first_at_root = false;
                seen[w] = 1;
                in_tree[h.edge] = 1;
                q.push(w);
            }
        }
        bool all_seen = true;
        for (char c : seen) all_seen &= (c != 0);
        if (!all_seen) {
            // Root-univalence starved the BFS (root was a cut of its own
            // edges); subdivide the second root edge and retry.
            int e = g.rotation(rootv)[1].edge;
            g = g.subdivide_edge_id(e, 1);
            continue;
        }
        // Deleted-edge endpoints must be bivalent.
        int bad = -1;
        for (int e = 0; e < g.edge_count() && bad < 0; ++e) {
            if (in_tree[e]) continue;
            if (g.degree(g.edge(e).u) != 2 || g.degree(g.edge(e).v) != 2) bad = e;
        }
        if (bad >= 0) {
            int times = (g.degree(g.edge(bad).u) != 2 ? 1 : 0) + (g.degree(g.edge(bad).v) != 2 ? 1 : 0);
            g = g.subdivide_edge_id(bad, times);
            continue;
        }
        SpanningTree t;
        t.host = g;
        t.in_tree = in_tree;
        finish_tree(t);
        return t;
    }
    throw input_error("could not build a spanning tree with bivalent deleted-edge endpoints");
}

std::string tree_to_json(const SpanningTree& t) {
    nlohmann::ordered_json j;
    std::vector<std::string> tree_edges, dels;
    for (int e = 0; e < t.host.edge_count(); ++e)
        if (t.in_tree[e]) tree_edges.push_back(t.host.edge(e).name);
    for (int e : t.deleted_edges) dels.push_back(t.host.edge(e).name);
    nlohmann::ordered_json labels = nlohmann::ordered_json::object();
    for (int l = 0; l < t.labels(); ++l)
        labels[t.host.vertex_name(t.vertex_at[l])] = l;
    j["tree_edges"] = tree_edges;
    j["labels"] = labels;
    j["deleted_edges"] = dels;
    return j.dump(2);
}

} // namespace gbg
