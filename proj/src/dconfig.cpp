#include "gbg/dconfig.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace gbg {

namespace {

std::pair<int, int> edge_key(const SpanningTree& t, int e) {
    return {t.tau[e], t.iota[e]};
}

} // namespace

Cell make_cell(const SpanningTree& t, std::vector<int> verts, std::vector<int> edges) {
    std::sort(verts.begin(), verts.end());
    std::sort(edges.begin(), edges.end(),
              [&](int a, int b) { return edge_key(t, a) < edge_key(t, b); });
    return Cell{std::move(verts), std::move(edges)};
}

bool cell_less(const SpanningTree& t, const Cell& a, const Cell& b) {
    if (a.verts != b.verts) return a.verts < b.verts;
    auto ka = [&](int e) { return edge_key(t, e); };
    return std::lexicographical_compare(a.edges.begin(), a.edges.end(), b.edges.begin(),
                                        b.edges.end(),
                                        [&](int x, int y) { return ka(x) < ka(y); });
}

std::string cell_to_string(const SpanningTree& t, const Cell& c) {
    std::string out;
    bool first = true;
    for (int v : c.verts) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    for (int e : c.edges) {
        if (!first) out += ",";
        out += std::to_string(t.iota[e]) + "-" + std::to_string(t.tau[e]);
        first = false;
    }
    return out;
}

Cell one_cell_top(const SpanningTree& t, const Cell& c) {
    check(c.dim() == 1, "one_cell_top expects a 1-cell");
    std::vector<int> vs = c.verts;
    vs.push_back(t.iota[c.edges[0]]);
    return make_cell(t, std::move(vs), {});
}

Cell one_cell_bottom(const SpanningTree& t, const Cell& c) {
    check(c.dim() == 1, "one_cell_bottom expects a 1-cell");
    std::vector<int> vs = c.verts;
    vs.push_back(t.tau[c.edges[0]]);
    return make_cell(t, std::move(vs), {});
}

namespace {

// Maximal chains whose interior vertices are bivalent; endpoints are vertices
// of degree != 2 (or the chain is a cycle of bivalent vertices, excluded by
// the essential-vertex requirement upstream). Returns (endpoints, edge list).
struct Chain {
    int a, b;
    std::vector<int> edges;
};

std::vector<Chain> essential_chains(const Graph& g) {
    std::vector<Chain> out;
    std::set<int> used;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 2) continue;
        for (const HalfEdge& h : g.rotation(v)) {
            if (used.count(h.edge)) continue;
            Chain c;
            c.a = v;
            int prev = v;
            int e = h.edge;
            while (true) {
                c.edges.push_back(e);
                used.insert(e);
                int w = g.other_end(e, prev);
                if (g.degree(w) != 2) {
                    c.b = w;
                    break;
                }
                const auto& rot = g.rotation(w);
                int nxt = (rot[0].edge == e) ? rot[1].edge : rot[0].edge;
                prev = w;
                e = nxt;
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

// Length of a shortest cycle; -1 when acyclic. Handles parallel edges and
// loops.
int girth(const Graph& g) {
    int best = -1;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).is_loop()) best = (best < 0) ? 1 : std::min(best, 1);
    // Parallel pairs give 2-cycles.
    std::map<std::pair<int, int>, int> bundle;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        auto key = std::minmax(ed.u, ed.v);
        if (++bundle[{key.first, key.second}] >= 2) best = (best < 0) ? 2 : std::min(best, 2);
    }
    // BFS from every vertex, avoiding immediate edge reuse.
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> dist(g.vertex_count(), -1), via(g.vertex_count(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const HalfEdge& h : g.rotation(v)) {
                if (g.edge(h.edge).is_loop()) continue;
                if (h.edge == via[v]) continue;
                int w = g.other_end(h.edge, v);
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    via[w] = h.edge;
                    q.push(w);
                } else if (dist[w] >= dist[v]) {
                    int cyc = dist[v] + dist[w] + 1;
                    best = (best < 0) ? cyc : std::min(best, cyc);
                }
            }
        }
    }
    return best;
}

} // namespace

bool is_sufficiently_subdivided(const Graph& g, int n, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!g.is_connected()) return fail("graph is disconnected");
    if (g.essential_vertices().empty()) return fail("graph has no essential vertex");
    if (n < 1) return fail("particle count must be positive");
    if (g.vertex_count() < n) return fail("fewer vertices than particles");
    // Chains run between vertices of degree != 2 (essential vertices and
    // leaves alike); the discrete model needs every such chain >= n-1.
    for (const Chain& c : essential_chains(g)) {
        if (static_cast<int>(c.edges.size()) < n - 1)
            return fail("chain between non-bivalent vertices shorter than n-1");
    }
    int gr = girth(g);
    if (gr >= 0 && gr < n + 1) return fail("cycle shorter than n+1");
    return true;
}

Graph ensure_sufficient_subdivision(const Graph& g_in, int n) {
    Graph g = g_in;
    require(g.is_connected(), "sufficient subdivision requires a connected graph");
    require(!g.essential_vertices().empty(),
            "the discrete model requires at least one essential vertex");
    require(n >= 1, "particle count must be positive");

    for (int guard = 0; guard < 64 * (g.edge_count() + n + 2); ++guard) {
        // Cycle deficits first, largest deficit first; ties by smallest edge id
        // within a shortest cycle.
        int gr = girth(g);
        if (gr >= 0 && gr < n + 1) {
            // Find one shortest cycle and split its smallest edge.
            // Loops and parallel bundles handled directly.
            int target = -1;
            for (int e = 0; e < g.edge_count() && target < 0; ++e)
                if (g.edge(e).is_loop() && gr == 1) target = e;
            if (target < 0 && gr == 2) {
                std::map<std::pair<int, int>, int> first_of;
                for (int e = 0; e < g.edge_count() && target < 0; ++e) {
                    const Edge& ed = g.edge(e);
                    if (ed.is_loop()) continue;
                    auto key = std::minmax(ed.u, ed.v);
                    auto it = first_of.find({key.first, key.second});
                    if (it == first_of.end())
                        first_of[{key.first, key.second}] = e;
                    else
                        target = e;
                }
            }
            if (target < 0) {
                // General shortest cycle via BFS; subdivide its smallest edge.
                int bestLen = -1;
                std::vector<int> best_cycle_edges;
                for (int s = 0; s < g.vertex_count(); ++s) {
                    std::vector<int> dist(g.vertex_count(), -1), via(g.vertex_count(), -1),
                        par(g.vertex_count(), -1);
                    std::queue<int> q;
                    dist[s] = 0;
                    q.push(s);
                    while (!q.empty()) {
                        int v = q.front();
                        q.pop();
                        for (const HalfEdge& h : g.rotation(v)) {
                            if (h.edge == via[v]) continue;
                            int w = g.other_end(h.edge, v);
                            if (dist[w] < 0) {
                                dist[w] = dist[v] + 1;
                                via[w] = h.edge;
                                par[w] = v;
                                q.push(w);
                            } else if (dist[w] >= dist[v]) {
                                int len = dist[v] + dist[w] + 1;
                                if (bestLen < 0 || len < bestLen) {
                                    bestLen = len;
                                    best_cycle_edges.clear();
                                    best_cycle_edges.push_back(h.edge);
                                    for (int x = v; x != s; x = par[x]) best_cycle_edges.push_back(via[x]);
                                    for (int x = w; x != s; x = par[x]) best_cycle_edges.push_back(via[x]);
                                }
                            }
                        }
                    }
                }
                check(bestLen == gr, "girth recomputation mismatch");
                target = *std::min_element(best_cycle_edges.begin(), best_cycle_edges.end());
            }
            g = g.subdivide_edge_id(target, n + 1 - gr);
            continue;
        }
        // Chain deficits, largest deficit first.
        int worst_deficit = 0;
        int worst_edge = -1;
        for (const Chain& c : essential_chains(g)) {
            int deficit = (n - 1) - static_cast<int>(c.edges.size());
            if (deficit > worst_deficit) {
                worst_deficit = deficit;
                worst_edge = *std::min_element(c.edges.begin(), c.edges.end());
            }
        }
        if (worst_edge >= 0) {
            g = g.subdivide_edge_id(worst_edge, worst_deficit);
            continue;
        }
        if (g.vertex_count() < n) {
            g = g.subdivide_edge_id(0, n - g.vertex_count());
            continue;
        }
        std::string why;
        check(is_sufficiently_subdivided(g, n, &why), "subdivision loop ended insufficient: " + why);
        return g;
    }
    throw internal_error("sufficient subdivision did not converge");
}

namespace {

struct Member {
    bool is_edge;
    int id; // label for vertices, edge id for edges
};

// Universe of members in canonical order: vertices by label, then edges by
// (tau, iota).
std::vector<Member> member_universe(const SpanningTree& t) {
    std::vector<Member> u;
    for (int l = 0; l < t.labels(); ++l) u.push_back({false, l});
    std::vector<int> es(t.host.edge_count());
    for (int e = 0; e < t.host.edge_count(); ++e) es[e] = e;
    std::sort(es.begin(), es.end(), [&](int a, int b) { return edge_key(t, a) < edge_key(t, b); });
    for (int e : es) u.push_back({true, e});
    return u;
}

} // namespace

std::vector<Cell> enumerate_cells(const SpanningTree& t, int n, int dim_filter) {
    std::string why;
    require(is_sufficiently_subdivided(t.host, n, &why),
            "host is not sufficiently subdivided for n=" + std::to_string(n) + " (" + why +
                "); call ensure_sufficient_subdivision first");
    std::vector<Member> uni = member_universe(t);
    int M = static_cast<int>(uni.size());
    std::vector<Cell> out;
    std::vector<int> chosen;
    // occupancy of vertex labels (closures)
    std::vector<char> occupied(t.labels(), 0);

    auto closure = [&](const Member& m, std::array<int, 2>& buf) -> int {
        if (!m.is_edge) {
            buf[0] = m.id;
            return 1;
        }
        buf[0] = t.tau[m.id];
        buf[1] = t.iota[m.id];
        return 2;
    };

    std::function<void(int, int, int)> rec = [&](int start, int picked, int edges_picked) {
        if (picked == n) {
            if (dim_filter >= 0 && edges_picked != dim_filter) return;
            std::vector<int> vs, es;
            for (int idx : chosen) {
                if (uni[idx].is_edge)
                    es.push_back(uni[idx].id);
                else
                    vs.push_back(uni[idx].id);
            }
            out.push_back(make_cell(t, std::move(vs), std::move(es)));
            return;
        }
        if (M - start < n - picked) return;
        for (int i = start; i < M; ++i) {
            if (dim_filter >= 0 && uni[i].is_edge && edges_picked >= dim_filter)
                break; // members beyond this point are all edges
            std::array<int, 2> buf;
            int k = closure(uni[i], buf);
            bool free = true;
            for (int j = 0; j < k; ++j) free &= !occupied[buf[j]];
            if (!free) continue;
            for (int j = 0; j < k; ++j) occupied[buf[j]] = 1;
            chosen.push_back(i);
            rec(i + 1, picked + 1, edges_picked + (uni[i].is_edge ? 1 : 0));
            chosen.pop_back();
            for (int j = 0; j < k; ++j) occupied[buf[j]] = 0;
        }
    };
    rec(0, 0, 0);
    return out;
}

std::array<SignedCell, 4> boundary_cycle(const SpanningTree& t, const Cell& c) {
    check(c.dim() == 2, "boundary_cycle expects a 2-cell");
    int p = c.edges[0], q = c.edges[1]; // canonical order (tau, iota)
    auto face = [&](int keep_edge, int vertex_label) {
        std::vector<int> vs = c.verts;
        vs.push_back(vertex_label);
        return make_cell(t, std::move(vs), {keep_edge});
    };
    Cell P_iota = face(p, t.iota[q]);
    Cell Q_tau = face(q, t.tau[p]);
    Cell P_tau = face(p, t.tau[q]);
    Cell Q_iota = face(q, t.iota[p]);
    return {SignedCell{P_iota, +1}, SignedCell{Q_tau, +1}, SignedCell{P_tau, -1},
            SignedCell{Q_iota, -1}};
}

std::vector<SignedCell> boundary_word(const SpanningTree& t, const Cell& c) {
    auto cyc = boundary_cycle(t, c);
    // Corners of the square, aligned with the cycle's starting points:
    // position i of the cycle starts at corner i.
    int p = c.edges[0], q = c.edges[1];
    auto corner = [&](int lp, int lq) {
        std::vector<int> vs = c.verts;
        vs.push_back(lp);
        vs.push_back(lq);
        return make_cell(t, std::move(vs), {});
    };
    std::array<Cell, 4> corners = {corner(t.iota[p], t.iota[q]), corner(t.tau[p], t.iota[q]),
                                   corner(t.tau[p], t.tau[q]), corner(t.iota[p], t.tau[q])};
    int lowest = 0;
    for (int i = 1; i < 4; ++i)
        if (cell_less(t, corners[i], corners[lowest])) lowest = i;
    // Two traversals start at the lowest corner: forward (cycle order) and
    // backward (reversed with inverted signs). Choose the one whose first
    // letter moves the lower-labeled edge (p).
    auto forward_at = [&](int s) {
        std::vector<SignedCell> w;
        for (int i = 0; i < 4; ++i) w.push_back(cyc[(s + i) % 4]);
        return w;
    };
    auto backward_at = [&](int s) {
        std::vector<SignedCell> w;
        for (int i = 0; i < 4; ++i) {
            const SignedCell& x = cyc[(s + 3 - i) % 4];
            w.push_back(SignedCell{x.cell, -x.sign});
        }
        return w;
    };
    std::vector<SignedCell> fwd = forward_at(lowest);
    std::vector<SignedCell> bwd = backward_at(lowest);
    return (fwd[0].cell.edges[0] == p) ? fwd : bwd;
}

} // namespace gbg
