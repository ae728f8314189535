#include "gbg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace gbg {

Budgets Budgets::from_env() {
    Budgets b;
    auto read = [](const char* var, long long& slot) {
        if (const char* s = std::getenv(var)) {
            try {
                slot = std::stoll(s);
            } catch (...) {
                throw input_error(std::string("bad value for ") + var);
            }
            if (slot <= 0) throw input_error(std::string(var) + " must be positive");
        }
    };
    read("GBG_BUDGET_F", b.f_applications);
    read("GBG_BUDGET_HANDLE", b.handle_steps);
    read("GBG_BUDGET_TIETZE", b.tietze_steps);
    read("GBG_BUDGET_EMBED", b.embed_states);
    return b;
}

int Graph::add_vertex(const std::string& name) {
    require(!name.empty(), "vertex name must be nonempty");
    require(vertex_index_.find(name) == vertex_index_.end(), "duplicate vertex name: " + name);
    vertex_index_[name] = vertex_count();
    vertex_names_.push_back(name);
    rotation_.emplace_back();
    return vertex_count() - 1;
}

int Graph::add_edge(const std::string& u, const std::string& v, const std::string& name) {
    require(!name.empty(), "edge name must be nonempty");
    require(edge_index_.find(name) == edge_index_.end(), "duplicate edge name: " + name);
    int ui = require_vertex(u);
    int vi = require_vertex(v);
    int e = edge_count();
    edge_index_[name] = e;
    edges_.push_back(Edge{ui, vi, name});
    rotation_[ui].push_back(HalfEdge{e, 0});
    rotation_[vi].push_back(HalfEdge{e, 1});
    return e;
}

int Graph::vertex_index(const std::string& name) const {
    auto it = vertex_index_.find(name);
    return it == vertex_index_.end() ? -1 : it->second;
}

int Graph::edge_index(const std::string& name) const {
    auto it = edge_index_.find(name);
    return it == edge_index_.end() ? -1 : it->second;
}

int Graph::require_vertex(const std::string& name) const {
    int i = vertex_index(name);
    require(i >= 0, "unknown vertex: " + name);
    return i;
}

int Graph::require_edge(const std::string& name) const {
    int i = edge_index(name);
    require(i >= 0, "unknown edge: " + name);
    return i;
}

int Graph::other_end(int e, int v) const {
    const Edge& ed = edges_[e];
    check(ed.u == v || ed.v == v, "other_end: vertex not on edge");
    return ed.u == v ? ed.v : ed.u;
}

int Graph::half_edge_vertex(const HalfEdge& h) const {
    return h.side == 0 ? edges_[h.edge].u : edges_[h.edge].v;
}

void Graph::set_rotation(const std::string& v, const std::vector<HalfEdge>& halves) {
    int vi = require_vertex(v);
    std::vector<HalfEdge> expected = rotation_[vi];
    std::vector<HalfEdge> given = halves;
    auto key = [](const HalfEdge& h) { return std::pair<int, int>(h.edge, h.side); };
    auto cmp = [&](const HalfEdge& a, const HalfEdge& b) { return key(a) < key(b); };
    std::sort(expected.begin(), expected.end(), cmp);
    std::sort(given.begin(), given.end(), cmp);
    require(std::equal(expected.begin(), expected.end(), given.begin(), given.end(),
                       [&](const HalfEdge& a, const HalfEdge& b) { return key(a) == key(b); }) &&
                expected.size() == given.size(),
            "rotation at " + v + " must list each incident half-edge exactly once");
    rotation_[vi] = halves;
}

void Graph::set_rotation_by_names(const std::string& v, const std::vector<std::string>& edge_names) {
    int vi = require_vertex(v);
    // A loop's name appears twice: first occurrence is side 0, second side 1.
    std::map<int, int> seen;
    std::vector<HalfEdge> halves;
    for (const auto& en : edge_names) {
        int e = require_edge(en);
        int occurrence = seen[e]++;
        const Edge& ed = edges_[e];
        if (ed.is_loop()) {
            require(occurrence < 2, "loop edge " + en + " listed more than twice at " + v);
            halves.push_back(HalfEdge{e, occurrence});
        } else {
            require(occurrence < 1, "edge " + en + " listed more than once at " + v);
            halves.push_back(HalfEdge{e, ed.u == vi ? 0 : 1});
        }
    }
    set_rotation(v, halves);
}

std::vector<int> Graph::essential_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (is_essential(v)) out.push_back(v);
    return out;
}

void Graph::validate() const {
    for (const Edge& e : edges_) {
        check(e.u >= 0 && e.u < vertex_count() && e.v >= 0 && e.v < vertex_count(),
              "edge endpoint out of range");
    }
    std::vector<int> half_count(edge_count() * 2, 0);
    for (int v = 0; v < vertex_count(); ++v) {
        for (const HalfEdge& h : rotation_[v]) {
            require(h.edge >= 0 && h.edge < edge_count() && (h.side == 0 || h.side == 1),
                    "bad half-edge in rotation");
            require(half_edge_vertex(h) == v,
                    "rotation at " + vertex_names_[v] + " lists a non-incident half-edge");
            half_count[h.edge * 2 + h.side]++;
        }
    }
    for (int c : half_count) require(c == 1, "rotation must list each half-edge exactly once");
    if (root_) require_vertex(*root_);
}

bool Graph::is_connected() const {
    if (vertex_count() == 0) return false;
    std::vector<char> seen(vertex_count(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const HalfEdge& h : rotation_[v]) {
            int w = other_end(h.edge, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == vertex_count();
}

int Graph::first_betti() const {
    require(is_connected(), "first_betti requires a connected graph");
    return edge_count() - vertex_count() + 1;
}

std::string Graph::fresh_vertex_name(const std::string& base) const {
    if (vertex_index(base) < 0) return base;
    for (int k = 1;; ++k) {
        std::string cand = base + "_" + std::to_string(k);
        if (vertex_index(cand) < 0) return cand;
    }
}

std::string Graph::fresh_edge_name(const std::string& base) const {
    if (edge_index(base) < 0) return base;
    for (int k = 1;; ++k) {
        std::string cand = base + "_" + std::to_string(k);
        if (edge_index(cand) < 0) return cand;
    }
}

namespace {

// Rebuild helper: copy a graph while replacing one edge by a chain or a pair
// of edges, keeping rotations aligned.
struct Builder {
    std::vector<std::string> vnames;
    std::vector<std::tuple<std::string, std::string, std::string>> edges; // u,v,name
    std::map<std::string, std::vector<std::string>> rot;                  // edge names per vertex (loops twice)
    std::optional<std::string> root;

    Graph build() const {
        Graph g;
        for (const auto& v : vnames) g.add_vertex(v);
        for (const auto& [u, v, n] : edges) g.add_edge(u, v, n);
        for (const auto& [v, names] : rot) g.set_rotation_by_names(v, names);
        if (root) g.set_root(*root);
        g.validate();
        return g;
    }
};

Builder to_builder(const Graph& g) {
    Builder b;
    for (int v = 0; v < g.vertex_count(); ++v) b.vnames.push_back(g.vertex_name(v));
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        b.edges.emplace_back(g.vertex_name(ed.u), g.vertex_name(ed.v), ed.name);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::string> names;
        for (const HalfEdge& h : g.rotation(v)) names.push_back(g.edge(h.edge).name);
        b.rot[g.vertex_name(v)] = names;
    }
    b.root = g.root();
    return b;
}

} // namespace

Graph Graph::subdivide_edge_id(int e, int times) const {
    require(e >= 0 && e < edge_count(), "subdivide: edge id out of range");
    require(times >= 1, "subdivide: times must be positive");
    const Edge& ed = edges_[e];
    const std::string base = ed.name;

    // Fresh names for chain vertices and pieces.
    std::vector<std::string> vmids;
    {
        Graph scratch = *this; // name reservation only
        for (int i = 1; i <= times; ++i) {
            std::string nm = scratch.fresh_vertex_name(base + "." + std::to_string(i));
            scratch.add_vertex(nm);
            vmids.push_back(nm);
        }
    }
    std::vector<std::string> pieces;
    {
        Graph scratch = *this;
        for (int i = 0; i <= times; ++i) {
            std::string nm = scratch.fresh_edge_name(base + "/" + std::to_string(i));
            // reserve by adding a parallel placeholder edge between existing endpoints
            scratch.add_edge(vertex_name(ed.u), vertex_name(ed.v), nm);
            pieces.push_back(nm);
        }
    }

    Builder b = to_builder(*this);
    for (const auto& nm : vmids) b.vnames.push_back(nm);
    // chain endpoints: u - m1 - m2 - ... - mt - v
    std::vector<std::string> chain;
    chain.push_back(vertex_name(ed.u));
    for (const auto& nm : vmids) chain.push_back(nm);
    chain.push_back(vertex_name(ed.v));

    // Replace the edge entry.
    std::vector<std::tuple<std::string, std::string, std::string>> new_edges;
    for (const auto& t : b.edges) {
        if (std::get<2>(t) == base) {
            for (int i = 0; i <= times; ++i)
                new_edges.emplace_back(chain[i], chain[i + 1], pieces[i]);
        } else {
            new_edges.push_back(t);
        }
    }
    b.edges = new_edges;

    // Rotations: at u replace the side-0 occurrence with pieces[0]; at v the
    // side-1 occurrence with pieces[times]. For a loop both occurrences at the
    // same vertex are replaced in order (side 0 first).
    auto& rot_u = b.rot[vertex_name(ed.u)];
    auto& rot_v = b.rot[vertex_name(ed.v)];
    if (!ed.is_loop()) {
        for (auto& nm : rot_u)
            if (nm == base) nm = pieces[0];
        for (auto& nm : rot_v)
            if (nm == base) nm = pieces[times];
    } else {
        // Rotation stored first occurrence = side 0.
        int occ = 0;
        for (auto& nm : rot_u) {
            if (nm == base) {
                nm = (occ == 0) ? pieces[0] : pieces[times];
                ++occ;
            }
        }
    }
    // Bivalent chain vertices: rotation follows the chain.
    for (int i = 0; i < times; ++i)
        b.rot[vmids[i]] = {pieces[i], pieces[i + 1]};

    return b.build();
}

Graph Graph::subdivide(const std::string& edge_name, int times) const {
    return subdivide_edge_id(require_edge(edge_name), times);
}

Graph Graph::smooth(const std::string& vertex_name_) const {
    int x = require_vertex(vertex_name_);
    require(degree(x) == 2, "smooth requires a bivalent vertex");
    const HalfEdge h0 = rotation_[x][0];
    const HalfEdge h1 = rotation_[x][1];
    require(h0.edge != h1.edge, "smooth cannot remove the vertex of a loop");
    int a = other_end(h0.edge, x);
    int bvx = other_end(h1.edge, x);

    std::string e0n = edges_[h0.edge].name;
    std::string e1n = edges_[h1.edge].name;
    std::string merged = fresh_edge_name(e0n + "+" + e1n);

    Builder b = to_builder(*this);
    b.vnames.erase(std::remove(b.vnames.begin(), b.vnames.end(), vertex_name_), b.vnames.end());
    b.rot.erase(vertex_name_);

    std::vector<std::tuple<std::string, std::string, std::string>> new_edges;
    bool placed = false;
    for (const auto& t : b.edges) {
        const std::string& nm = std::get<2>(t);
        if (nm == e0n) {
            if (!placed) {
                new_edges.emplace_back(vertex_name(a), vertex_name(bvx), merged);
                placed = true;
            }
        } else if (nm == e1n) {
            if (!placed) {
                new_edges.emplace_back(vertex_name(a), vertex_name(bvx), merged);
                placed = true;
            }
        } else {
            new_edges.push_back(t);
        }
    }
    b.edges = new_edges;
    for (auto& [v, names] : b.rot) {
        for (auto& nm : names)
            if (nm == e0n || nm == e1n) nm = merged;
    }
    if (b.root && *b.root == vertex_name_) b.root.reset();
    return b.build();
}

Graph Graph::minimal_simplicial_representative() const {
    require(is_connected(), "minimal representative requires a connected graph");
    Graph g = *this;
    // Smooth every bivalent vertex whose two half-edges belong to distinct edges.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) == 2 && g.rotation(v)[0].edge != g.rotation(v)[1].edge) {
                g = g.smooth(g.vertex_name(v));
                changed = true;
                break;
            }
        }
    }
    // Loops become triangles.
    for (bool again = true; again;) {
        again = false;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).is_loop()) {
                g = g.subdivide_edge_id(e, 2);
                again = true;
                break;
            }
        }
    }
    // All but one of each parallel bundle gets one midpoint.
    for (bool again = true; again;) {
        again = false;
        std::set<std::pair<int, int>> seen;
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            auto key = std::minmax(ed.u, ed.v);
            if (!seen.insert(std::pair<int, int>(key.first, key.second)).second) {
                g = g.subdivide_edge_id(e, 1);
                again = true;
                break;
            }
        }
    }
    return g;
}

namespace {

// Max-flow with unit vertex capacities between s and t on a simple graph:
// the count of internally-disjoint s-t paths (Menger).
int disjoint_paths(const Graph& g, int s, int t) {
    int n = g.vertex_count();
    // Node split: node 2v = in, 2v+1 = out. Arc capacities in an adjacency map.
    int N = 2 * n;
    std::vector<std::map<int, int>> cap(N);
    for (int v = 0; v < n; ++v) {
        int c = (v == s || v == t) ? g.edge_count() + 1 : 1;
        cap[2 * v][2 * v + 1] = c;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        int u = g.edge(e).u, v = g.edge(e).v;
        if (u == v) continue;
        cap[2 * u + 1][2 * v] += 1;
        cap[2 * v + 1][2 * u] += 1;
    }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<int> prev(N, -1);
        std::queue<int> q;
        q.push(source);
        prev[source] = source;
        while (!q.empty() && prev[sink] < 0) {
            int x = q.front();
            q.pop();
            for (const auto& [y, c] : cap[x]) {
                if (c > 0 && prev[y] < 0) {
                    prev[y] = x;
                    q.push(y);
                }
            }
        }
        if (prev[sink] < 0) break;
        for (int y = sink; y != source; y = prev[y]) {
            int x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
        }
        ++flow;
    }
    return flow;
}

} // namespace

int Graph::topological_connectivity() const {
    if (!is_connected()) return 0;
    Graph m = minimal_simplicial_representative();
    int n = m.vertex_count();
    if (n == 1) return 1; // singleton convention
    int k = n - 1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) k = std::min(k, disjoint_paths(m, a, b));
    return k;
}

FaceDecomposition trace_faces(const Graph& g) {
    // Dart (e, dir): dir 0 runs u->v. The dart after (e, dir) turns at the head
    // vertex: take the rotation successor of the arriving half-edge and leave
    // along it.
    int E = g.edge_count();
    std::vector<char> used(2 * E, 0);
    // Position of each half-edge within its vertex rotation.
    std::vector<std::pair<int, int>> pos(2 * E); // (vertex, index)
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = g.rotation(v);
        for (int i = 0; i < static_cast<int>(rot.size()); ++i)
            pos[rot[i].edge * 2 + rot[i].side] = {v, i};
    }
    FaceDecomposition out;
    for (int start = 0; start < 2 * E; ++start) {
        if (used[start]) continue;
        std::vector<FaceDecomposition::Dart> walk;
        int cur = start;
        while (!used[cur]) {
            used[cur] = 1;
            int e = cur / 2, dir = cur % 2;
            walk.push_back({e, dir});
            int head_side = 1 - dir; // arriving half-edge side
            auto [v, i] = pos[e * 2 + head_side];
            const auto& rot = g.rotation(v);
            const HalfEdge& nxt = rot[(i + 1) % rot.size()];
            cur = nxt.edge * 2 + nxt.side; // leave along the successor; its tail side is nxt.side
        }
        out.faces.push_back(std::move(walk));
    }
    // Unbounded face designation is a display convention: the longest walk,
    // ties broken by traversal order.
    int best = 0;
    for (int i = 1; i < out.count(); ++i)
        if (out.faces[i].size() > out.faces[best].size()) best = i;
    out.unbounded_face = best;
    return out;
}

FaceDecomposition faces(const Graph& g) {
    require(g.is_connected(), "faces requires a connected graph");
    FaceDecomposition fd = trace_faces(g);
    int expected = g.edge_count() - g.vertex_count() + 2;
    require(fd.count() == expected,
            "rotation system is not planar: traced " + std::to_string(fd.count()) +
                " faces, Euler expects " + std::to_string(expected));
    return fd;
}

std::vector<std::vector<int>> FaceDecomposition::face_edge_sets() const {
    std::vector<std::vector<int>> out;
    for (const auto& f : faces) {
        std::vector<int> ids;
        for (const auto& d : f) ids.push_back(d.edge);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        out.push_back(ids);
    }
    return out;
}

} // namespace gbg
