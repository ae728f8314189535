#include "gbg/theta.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "gbg/braid.hpp"
#include "json.hpp"

namespace gbg {

std::string triple_name(const SpanningTree& t, const Triple& tr) {
    std::ostringstream os;
    os << "(" << t.host.vertex_name(t.vertex_at[tr.vertex]) << ";" << tr.a << "," << tr.b << ")";
    return os.str();
}

std::vector<Triple> all_triples(const SpanningTree& t) {
    std::vector<Triple> out;
    for (int v = 0; v < t.labels(); ++v) {
        if (!t.essential_label(v) || v == 0) continue;
        int k = t.degree_label(v);
        for (int a = 1; a < k; ++a)
            for (int b = a + 1; b < k; ++b) out.push_back(Triple{v, a, b});
    }
    return out;
}

namespace {

int leaf_of(const SpanningTree& t, int v, int next_label) {
    const auto& ch = t.children[v];
    for (int i = 0; i < static_cast<int>(ch.size()); ++i)
        if (ch[i] == next_label) return i + 1;
    return -1;
}

int leaf_child(const SpanningTree& t, int v, int leaf) {
    const auto& ch = t.children[v];
    check(leaf >= 1 && leaf <= static_cast<int>(ch.size()), "leaf index out of range");
    return ch[leaf - 1];
}

// Tree path from v to target whose first step leaves through `leaf`.
std::optional<std::vector<int>> path_from_leaf(const SpanningTree& t, int v, int leaf,
                                               int target) {
    if (v == target) return std::nullopt;
    std::vector<int> p = t.tree_path(v, target);
    if (p[1] != leaf_child(t, v, leaf)) return std::nullopt;
    return p;
}

struct PieceSet {
    // label paths with designated junction multiplicities
    std::vector<std::vector<int>> pieces;
    std::map<int, int> junction_mult; // expected occurrence count of junctions

    bool internally_disjoint() const {
        std::map<int, int> cnt;
        for (const auto& p : pieces)
            for (int x : p) cnt[x]++;
        for (const auto& [x, c] : cnt) {
            auto it = junction_mult.find(x);
            int allowed = (it == junction_mult.end()) ? 1 : it->second;
            if (c != allowed && c > allowed) return false;
        }
        // every edge at most once
        std::set<std::pair<int, int>> edges;
        for (const auto& p : pieces)
            for (size_t i = 0; i + 1 < p.size(); ++i) {
                auto key = std::minmax(p[i], p[i + 1]);
                if (!edges.insert({key.first, key.second}).second) return false;
            }
        return true;
    }
};

std::optional<ThetaWitness> try_theta3(const SpanningTree& t, const Triple& P, const Triple& Q,
                                       bool mirror_p, bool mirror_q) {
    if (!t.has_e0) return std::nullopt;
    int p = P.vertex, q = Q.vertex;
    if (p == q) return std::nullopt;
    int top_p = mirror_p ? P.b : P.a;
    int diam_p = mirror_p ? P.a : P.b;
    int c_leaf = mirror_q ? Q.b : Q.a; // top arrival at q
    int d_leaf = mirror_q ? Q.a : Q.b; // bottom departure at q

    std::vector<int> axis_q = t.tree_path(0, q);
    if (std::find(axis_q.begin(), axis_q.end(), p) == axis_q.end()) return std::nullopt;
    std::vector<int> axis_sp = t.tree_path(0, p);
    std::vector<int> axis_pq = t.tree_path(p, q);
    if (axis_pq.size() < 2 || axis_pq[1] != leaf_child(t, p, diam_p)) return std::nullopt;

    int e0 = t.e0();
    auto bt = path_from_leaf(t, q, d_leaf, t.iota[e0]);
    if (!bt) return std::nullopt;
    std::vector<int> bottom = *bt;
    bottom.push_back(0); // cross e0 into the root

    for (int f : t.deleted_edges) {
        if (f == e0) continue;
        for (int orient = 0; orient < 2; ++orient) {
            int x = orient ? t.iota[f] : t.tau[f];
            int y = orient ? t.tau[f] : t.iota[f];
            auto t1 = (p == x) ? std::optional<std::vector<int>>(std::vector<int>{p})
                               : path_from_leaf(t, p, top_p, x);
            if (!t1) continue;
            auto t2 = (q == y) ? std::optional<std::vector<int>>(std::vector<int>{q})
                               : path_from_leaf(t, q, c_leaf, y);
            if (!t2) continue;
            std::vector<int> top = *t1;
            for (auto it = t2->rbegin(); it != t2->rend(); ++it) top.push_back(*it);

            PieceSet ps;
            ps.pieces = {axis_sp, axis_pq, top, bottom};
            ps.junction_mult[0] = 2;
            ps.junction_mult[p] = 3;
            ps.junction_mult[q] = 3;
            if (!ps.internally_disjoint()) continue;

            ThetaWitness w;
            w.shape = "theta3";
            w.mirror_p = mirror_p;
            w.mirror_q = mirror_q;
            w.f_top = f;
            w.axis_sp = axis_sp;
            w.axis_pq = axis_pq;
            w.top = top;
            w.bottom = bottom;
            return w;
        }
    }
    return std::nullopt;
}

std::optional<ThetaWitness> try_vartheta3(const SpanningTree& t, const Triple& P,
                                          const Triple& Q, bool mirror_p, bool mirror_q) {
    int p = P.vertex, q = Q.vertex;
    if (p == q) return std::nullopt;
    int left_p = mirror_p ? P.b : P.a;   // e1^v image leaf at p
    int diam_p = mirror_p ? P.a : P.b;   // e2^v
    int left_q = mirror_q ? Q.b : Q.a;   // e1^w
    int right_q = mirror_q ? Q.a : Q.b;  // e2^w

    std::vector<int> axis_q = t.tree_path(0, q);
    if (std::find(axis_q.begin(), axis_q.end(), p) == axis_q.end()) return std::nullopt;
    std::vector<int> axis_sp_full = t.tree_path(0, p);
    std::vector<int> axis_pq = t.tree_path(p, q);
    if (axis_pq.size() < 2 || axis_pq[1] != leaf_child(t, p, diam_p)) return std::nullopt;

    // candidate z vertices: essential, strictly between the root and p
    for (size_t zi = 1; zi + 1 < axis_sp_full.size(); ++zi) {
        int r = axis_sp_full[zi];
        if (!t.essential_label(r)) continue;
        std::vector<int> axis_sr(axis_sp_full.begin(), axis_sp_full.begin() + zi + 1);
        std::vector<int> axis_rp(axis_sp_full.begin() + zi, axis_sp_full.end());

        for (int f1 : t.deleted_edges) {
            if (t.tau[f1] == 0) continue;
            for (int o1 = 0; o1 < 2; ++o1) {
                int x1 = o1 ? t.iota[f1] : t.tau[f1];
                int y1 = o1 ? t.tau[f1] : t.iota[f1];
                auto l1 = (p == x1) ? std::optional<std::vector<int>>(std::vector<int>{p})
                                    : path_from_leaf(t, p, left_p, x1);
                if (!l1) continue;
                auto l2 = (q == y1) ? std::optional<std::vector<int>>(std::vector<int>{q})
                                    : path_from_leaf(t, q, left_q, y1);
                if (!l2) continue;
                std::vector<int> left = *l1;
                for (auto it = l2->rbegin(); it != l2->rend(); ++it) left.push_back(*it);

                for (int f2 : t.deleted_edges) {
                    if (f2 == f1 || t.tau[f2] == 0) continue;
                    for (int o2 = 0; o2 < 2; ++o2) {
                        int x2 = o2 ? t.iota[f2] : t.tau[f2];
                        int y2 = o2 ? t.tau[f2] : t.iota[f2];
                        auto r1 = (q == x2) ? std::optional<std::vector<int>>(std::vector<int>{q})
                                            : path_from_leaf(t, q, right_q, x2);
                        if (!r1) continue;
                        // arrival at r along any branch; the tree path r..y2 must
                        // leave r away from the root
                        std::vector<int> r2 = t.tree_path(r, y2);
                        if (r2.size() >= 2 && r2[1] == t.parent_label[r]) continue;
                        std::vector<int> right = *r1;
                        for (auto it = r2.rbegin(); it != r2.rend(); ++it) right.push_back(*it);

                        PieceSet ps;
                        ps.pieces = {axis_sr, axis_rp, axis_pq, left, right};
                        ps.junction_mult[r] = 3;
                        ps.junction_mult[p] = 3;
                        ps.junction_mult[q] = 3;
                        if (!ps.internally_disjoint()) continue;

                        ThetaWitness w;
                        w.shape = "vartheta3";
                        w.mirror_p = mirror_p;
                        w.mirror_q = mirror_q;
                        w.f_top = f1;
                        w.f_right = f2;
                        w.z_vertex = r;
                        w.axis_sp = axis_rp; // [r, p] segment
                        w.axis_pq = axis_pq;
                        w.top = left;
                        w.bottom = right;
                        return w;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<ThetaWitness> theta_related(const SpanningTree& t, const Triple& p,
                                          const Triple& q) {
    for (int swap = 0; swap < 2; ++swap) {
        const Triple& P = swap ? q : p;
        const Triple& Q = swap ? p : q;
        for (int mp = 0; mp < 2; ++mp) {
            for (int mq = 0; mq < 2; ++mq) {
                if (auto w = try_theta3(t, P, Q, mp, mq)) {
                    w->swapped_roles = swap;
                    return w;
                }
                if (auto w = try_vartheta3(t, P, Q, mp, mq)) {
                    w->swapped_roles = swap;
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

ThetaClasses theta_classes(const SpanningTree& t) {
    std::vector<Triple> ts = all_triples(t);
    int m = static_cast<int>(ts.size());
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    ThetaClasses out;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (find(i) == find(j)) continue;
            if (theta_related(t, ts[i], ts[j])) {
                parent[find(j)] = find(i);
                out.related_pairs.emplace_back(ts[i], ts[j]);
            }
        }
    }
    std::map<int, std::vector<Triple>> groups;
    for (int i = 0; i < m; ++i) groups[find(i)].push_back(ts[i]);
    for (auto& [root, v] : groups) {
        (void)root;
        out.classes.push_back(v);
    }
    return out;
}

bool is_facial_cycle(const Graph& g, const std::vector<std::string>& cycle_edges) {
    require(g.topological_connectivity() >= 3,
            "facial-cycle criterion requires a 3-connected host");
    FaceDecomposition fd = faces(g); // validates planarity of the rotation data
    require(!cycle_edges.empty(), "cycle must be nonempty");
    // Validate the edge list forms a simple cycle; collect its vertices.
    std::map<int, std::vector<int>> at; // vertex -> incident cycle edges
    std::set<int> eset;
    for (const auto& name : cycle_edges) {
        int e = g.require_edge(name);
        require(eset.insert(e).second, "cycle reuses an edge");
        at[g.edge(e).u].push_back(e);
        at[g.edge(e).v].push_back(e);
    }
    for (const auto& [v, es] : at)
        require(es.size() == 2, "cycle is not simple at " + g.vertex_name(v));
    // connectivity: one closed walk
    {
        std::set<int> seen_e;
        int start = g.edge(*eset.begin()).u;
        int cur = start, via = -1;
        do {
            const auto& es = at[cur];
            int nxt = (es[0] != via) ? es[0] : es[1];
            seen_e.insert(nxt);
            cur = g.other_end(nxt, cur);
            via = nxt;
        } while (cur != start);
        require(seen_e.size() == eset.size(), "edge list is not a single cycle");
    }
    // Nonseparating test: delete cycle vertices, check the rest is connected.
    std::set<int> cyc_verts;
    for (const auto& [v, es] : at) {
        (void)es;
        cyc_verts.insert(v);
    }
    std::vector<int> rest;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!cyc_verts.count(v)) rest.push_back(v);
    bool nonseparating = true;
    if (!rest.empty()) {
        std::set<int> seen;
        std::vector<int> stack{rest[0]};
        seen.insert(rest[0]);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const HalfEdge& h : g.rotation(v)) {
                int w = g.other_end(h.edge, v);
                if (cyc_verts.count(w) || seen.count(w)) continue;
                seen.insert(w);
                stack.push_back(w);
            }
        }
        nonseparating = (seen.size() == rest.size());
    }
    // Cross-check against face membership (the theorem's other side).
    std::vector<int> sorted_cycle(eset.begin(), eset.end());
    bool facial = false;
    for (const auto& fes : fd.face_edge_sets())
        if (fes == sorted_cycle) facial = true;
    check(facial == nonseparating,
          "facial/nonseparating cross-check failed (theorem violation indicates a bug)");
    return nonseparating;
}

std::vector<SignedCell> replay_theta_relation(const MorseComplex& mc, const ThetaWitness& w,
                                              const Triple& p_in, const Triple& q_in) {
    const SpanningTree& t = mc.tree();
    Realizer rz(t, mc.particles());
    const Triple& P = w.swapped_roles ? q_in : p_in;
    const Triple& Q = w.swapped_roles ? p_in : q_in;
    int p = P.vertex, q = Q.vertex;

    auto seq2 = [](int a, int b) { return std::vector<int>{a, b}; };
    auto inv = [](const std::vector<SignedCell>& x) {
        std::vector<SignedCell> out;
        for (auto it = x.rbegin(); it != x.rend(); ++it)
            out.push_back(SignedCell{it->cell, -it->sign});
        return out;
    };
    auto cat = [](std::vector<SignedCell>& into, const std::vector<SignedCell>& x) {
        for (const auto& sc : x) {
            if (!into.empty() && into.back().cell == sc.cell && into.back().sign == -sc.sign)
                into.pop_back();
            else
                into.push_back(sc);
        }
    };

    if (w.shape == "theta3") {
        int top_p = w.mirror_p ? P.b : P.a;
        int diam_p = w.mirror_p ? P.a : P.b;
        int top_q = w.mirror_q ? Q.b : Q.a;
        int bot_q = w.mirror_q ? Q.a : Q.b;
        // gamma-hat: around diameter then back through the top path
        std::vector<int> loop = w.axis_pq;
        for (size_t i = w.top.size() - 1; i > 0; --i) loop.push_back(w.top[i - 1]);
        std::vector<SignedCell> gam = rz.one_particle_loop_word(loop);
        // delta-hat: [*,p] + [p,q] + bottom + e0
        std::vector<int> big = w.axis_sp;
        big.insert(big.end(), w.axis_pq.begin() + 1, w.axis_pq.end());
        big.insert(big.end(), w.bottom.begin() + 1, w.bottom.end());
        std::vector<SignedCell> del = rz.circular_loop_word(big);
        std::vector<SignedCell> Yp = rz.sigma_word(SigmaRef{p, seq2(top_p, diam_p)});
        std::vector<SignedCell> Yq = rz.sigma_word(SigmaRef{q, seq2(bot_q, top_q)});
        // relator: delta gamma delta^-1 (Y^q gamma Y^p)^-1
        std::vector<SignedCell> R;
        cat(R, del);
        cat(R, gam);
        cat(R, inv(del));
        cat(R, inv(Yp));
        cat(R, inv(gam));
        cat(R, inv(Yq));
        return R;
    }
    // vartheta3
    int left_p = w.mirror_p ? P.b : P.a;
    int diam_p = w.mirror_p ? P.a : P.b;
    int left_q = w.mirror_q ? Q.b : Q.a;
    int right_q = w.mirror_q ? Q.a : Q.b;
    (void)left_q;
    (void)right_q;
    int r = w.z_vertex;
    // gamma-hat (right region): [p,q] + right piece (q..r) + [r,p]
    std::vector<int> right_loop = w.axis_pq;
    right_loop.insert(right_loop.end(), w.bottom.begin() + 1, w.bottom.end());
    {
        std::vector<int> rp = t.tree_path(r, p);
        right_loop.insert(right_loop.end(), rp.begin() + 1, rp.end());
    }
    // gamma'-hat (left region): [p,q] + reversed left piece
    std::vector<int> left_loop = w.axis_pq;
    for (size_t i = w.top.size() - 1; i > 0; --i) left_loop.push_back(w.top[i - 1]);
    std::vector<SignedCell> gam = rz.one_particle_loop_word(right_loop);
    std::vector<SignedCell> gamp = rz.one_particle_loop_word(left_loop);
    // exchanges at z: leaf toward p and leaf of the right-piece arrival
    int z1 = leaf_of(t, r, w.axis_sp[1]); // axis_sp stores [r, p]
    int z2 = leaf_of(t, r, w.bottom[w.bottom.size() - 2]);
    check(z1 >= 1 && z2 >= 1 && z1 != z2, "vartheta witness has degenerate z leaves");
    std::vector<SignedCell> Yp = rz.sigma_word(SigmaRef{p, seq2(left_p, diam_p)});
    std::vector<SignedCell> Yq = rz.sigma_word(SigmaRef{q, seq2(left_q, right_q)});
    std::vector<SignedCell> Yz12 = rz.sigma_word(SigmaRef{r, seq2(z1, z2)});
    std::vector<SignedCell> Yz21 = rz.sigma_word(SigmaRef{r, seq2(z2, z1)});
    // relator: Y^q (gamma' Y^p gamma Y^{z;21} gamma'^-1 Y^{z;12} gamma)^-1
    std::vector<SignedCell> R;
    cat(R, Yq);
    cat(R, inv(gam));
    cat(R, inv(Yz12));
    cat(R, gamp);
    cat(R, inv(Yz21));
    cat(R, inv(gam));
    cat(R, inv(Yp));
    cat(R, inv(gamp));
    return R;
}

GeometricPresentation geometric_presentation(const MorseComplex& mc) {
    const SpanningTree& t = mc.tree();
    Realizer rz(t, mc.particles());
    MorsePresentation mp = morse_presentation(mc);
    GeometricPresentation gp;

    // Names for the Morse generators; loop cells get geometric names.
    std::vector<std::vector<GeomToken>> dict(mp.generators.size());
    for (size_t i = 0; i < mp.generators.size(); ++i) {
        dict[i] = critical_to_geometric(mc, mp.generators[i]);
        const Cell& c = mp.generators[i];
        std::string nm;
        if (!t.in_tree[c.edges[0]]) {
            nm = token_name(t, dict[i][0]);
        } else {
            nm = "c{" + cell_to_string(t, c) + "}";
        }
        gp.morse_names.push_back(nm);
    }
    gp.delta_name = t.has_e0 ? "delta" : "";
    for (size_t j = 1; j < t.deleted_edges.size(); ++j) gp.gamma_names.push_back(gamma_name(j));

    // Sigma letters: dictionary tokens plus every Y-exchange (for the
    // identification step).
    std::map<std::string, SigmaRef> sigma_set;
    for (const auto& word : dict)
        for (const GeomToken& tok : word)
            if (tok.kind == GeomToken::Sigma)
                sigma_set.emplace(sigma_name(t, tok.sigma), tok.sigma);
    for (const Triple& tr : all_triples(t)) {
        SigmaRef sr{tr.vertex, {tr.a, tr.b}};
        sigma_set.emplace(sigma_name(t, sr), sr);
    }

    Presentation& p = gp.p;
    p.gens = gp.morse_names;
    std::map<std::string, int> gen_index;
    for (size_t i = 0; i < p.gens.size(); ++i) gen_index[p.gens[i]] = static_cast<int>(i);
    for (const auto& [nm, sr] : sigma_set) {
        gp.sigmas.push_back(sr);
        gen_index[nm] = static_cast<int>(p.gens.size());
        p.gens.push_back(nm);
    }

    // Morse relators.
    for (const auto& rel : mp.relators) {
        std::vector<int> ls;
        for (int l : rel) ls.push_back(l); // generator numbering coincides
        p.relators.push_back(free_reduce(std::move(ls)));
    }
    // Dictionary relators: cell^-1 . (token word).
    for (size_t i = 0; i < mp.generators.size(); ++i) {
        const Cell& c = mp.generators[i];
        if (!t.in_tree[c.edges[0]]) continue; // loop cells already carry their names
        std::vector<int> ls;
        ls.push_back(-(static_cast<int>(i) + 1));
        for (const GeomToken& tok : dict[i]) {
            int gi = gen_index.at(token_name(t, GeomToken::make_sigma(tok.sigma)));
            ls.push_back(tok.sign > 0 ? gi + 1 : -(gi + 1));
        }
        p.relators.push_back(free_reduce(std::move(ls)));
    }
    // Definition relators: sigma^-1 . F^inf(realization) over Morse letters.
    std::vector<int> gen_of_cell = mc.generator_of_one_cell();
    for (const auto& [nm, sr] : sigma_set) {
        std::vector<int> red = mc.reduce_signed(rz.sigma_word(sr));
        std::vector<int> ls;
        ls.push_back(-(gen_index.at(nm) + 1));
        for (int l : red) {
            int g = gen_of_cell[std::abs(l) - 1];
            check(g >= 0, "reduction produced a non-critical letter");
            ls.push_back(l > 0 ? g + 1 : -(g + 1));
        }
        p.relators.push_back(free_reduce(std::move(ls)));
    }
    // gamma_0 relator (the e0 one-particle move is trivialized in quotients
    // that kill one-particle moves); emitted only when realizable.
    if (t.has_e0) {
        try {
            std::vector<int> red = mc.reduce_signed(rz.realize(GeomToken::make_gamma0()));
            std::vector<int> ls;
            for (int l : red) {
                int g = gen_of_cell[std::abs(l) - 1];
                check(g >= 0, "reduction produced a non-critical letter");
                ls.push_back(l > 0 ? g + 1 : -(g + 1));
            }
            gp.gamma0_relator_available = "gamma0";
            p.relators.push_back(free_reduce(std::move(ls)));
        } catch (const input_error&) {
            // host without a usable lollipop vertex: no gamma_0 relator
        }
    }
    return gp;
}

PlanarQuotientReport verify_planar_quotient(const MorseComplex& mc) {
    const SpanningTree& t = mc.tree();
    PlanarQuotientReport rep;
    ThetaClasses classes = theta_classes(t);
    rep.triple_count = static_cast<int>(all_triples(t).size());
    rep.class_count = static_cast<int>(classes.classes.size());

    GeometricPresentation gp = geometric_presentation(mc);

    // gamma_0 relator must be present for the full one-particle quotient.
    // Identify Y-exchanges classwise.
    std::vector<std::pair<std::string, std::string>> ident;
    std::string rep_name;
    for (const auto& cls : classes.classes) {
        SigmaRef first{cls[0].vertex, {cls[0].a, cls[0].b}};
        std::string fn = sigma_name(t, first);
        if (rep_name.empty()) rep_name = fn;
        for (size_t i = 1; i < cls.size(); ++i) {
            SigmaRef si{cls[i].vertex, {cls[i].a, cls[i].b}};
            ident.emplace_back(fn, sigma_name(t, si));
        }
    }
    std::vector<std::string> kill = gp.gamma_names;
    std::set<std::string> keep;
    if (!rep_name.empty()) keep.insert(rep_name);
    if (!gp.delta_name.empty()) keep.insert(gp.delta_name);

    TietzeResult tz = quotient_and_identify(gp.p, kill, ident, -1, keep);
    rep.quotient = tz.p;
    rep.surviving_generators = tz.p.gens;

    // Braid images: representative Y -> sigma_1, delta -> sigma_1...sigma_{n-1}.
    int n = mc.particles();
    bool mapped = true;
    std::map<std::string, int> role; // 1 = Y, 2 = delta
    for (const auto& g : tz.p.gens) {
        if (g == rep_name)
            role[g] = 1;
        else if (g == gp.delta_name)
            role[g] = 2;
        else
            mapped = false;
    }
    rep.fully_reduced = mapped;
    rep.all_relators_trivial = true;
    for (size_t ri = 0; ri < tz.p.relators.size(); ++ri) {
        bool trivial = false;
        if (mapped) {
            std::vector<int> braid;
            for (int l : tz.p.relators[ri].ls) {
                int which = role[tz.p.gens[std::abs(l) - 1]];
                if (which == 1) {
                    braid.push_back(l > 0 ? 1 : -1);
                } else {
                    if (l > 0)
                        for (int i = 1; i <= n - 1; ++i) braid.push_back(i);
                    else
                        for (int i = n - 1; i >= 1; --i) braid.push_back(-i);
                }
            }
            trivial = is_trivial_braid(BraidWord(n, braid));
        }
        rep.all_relators_trivial &= trivial;
        std::ostringstream nm;
        nm << "relator" << ri;
        rep.relator_braid_trivial.emplace_back(nm.str(), trivial);
    }
    if (tz.p.relators.empty()) rep.all_relators_trivial = true;
    rep.ab = abelianization(tz.p);
    rep.abelianization_is_Z = (rep.ab.free_rank == 1 && rep.ab.torsion.empty());
    return rep;
}

std::string PlanarQuotientReport::to_json(const SpanningTree& t) const {
    (void)t;
    nlohmann::ordered_json j;
    j["triples"] = triple_count;
    j["classes"] = class_count;
    j["surviving_generators"] = surviving_generators;
    nlohmann::ordered_json rels = nlohmann::ordered_json::array();
    for (const auto& [nm, ok] : relator_braid_trivial) {
        nlohmann::ordered_json r;
        r["name"] = nm;
        r["trivial"] = ok;
        rels.push_back(r);
    }
    j["relators"] = rels;
    j["abelianization"] = ab.to_string();
    j["all_relators_trivial"] = all_relators_trivial;
    j["abelianization_is_Z"] = abelianization_is_Z;
    return j.dump(2);
}

TietzeResult quotient_by_gammas(const MorseComplex& mc, bool kill_gamma0,
                                const std::set<std::string>& keep) {
    GeometricPresentation gp = geometric_presentation(mc);
    std::vector<std::string> kill = gp.gamma_names;
    std::set<std::string> protect = keep;
    if (!gp.delta_name.empty()) protect.insert(gp.delta_name);
    if (!kill_gamma0) {
        // Remove the gamma_0 relator (it was appended last when available).
        if (!gp.gamma0_relator_available.empty()) gp.p.relators.pop_back();
    }
    return quotient_and_identify(gp.p, kill, {}, -1, protect);
}

} // namespace gbg
