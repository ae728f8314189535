#include "gbg/geom.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace gbg {

std::string sigma_name(const SpanningTree& t, const SigmaRef& s) {
    std::ostringstream os;
    os << "sigma" << s.i() << "[" << t.host.vertex_name(t.vertex_at[s.vertex]) << ";";
    for (size_t j = 0; j < s.seq.size(); ++j) {
        if (j) os << ",";
        os << s.seq[j];
    }
    os << "]";
    return os.str();
}

std::string gamma_name(int j) { return "gamma" + std::to_string(j); }

std::string token_name(const SpanningTree& t, const GeomToken& tok) {
    std::string base;
    switch (tok.kind) {
        case GeomToken::Sigma: base = sigma_name(t, tok.sigma); break;
        case GeomToken::Gamma: base = gamma_name(tok.gamma_index); break;
        case GeomToken::Delta: base = "delta"; break;
        case GeomToken::Gamma0: base = "gamma0"; break;
    }
    if (tok.sign < 0) base += "^-1";
    return base;
}

namespace {

std::vector<SignedCell> invert_word(const std::vector<SignedCell>& w) {
    std::vector<SignedCell> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(SignedCell{it->cell, -it->sign});
    return out;
}

void append_word(std::vector<SignedCell>& into, const std::vector<SignedCell>& w) {
    for (const SignedCell& sc : w) {
        if (!into.empty() && into.back().cell == sc.cell && into.back().sign == -sc.sign)
            into.pop_back();
        else
            into.push_back(sc);
    }
}

// Emits 1-cell letters while tracking the configuration.
class MoveMachine {
  public:
    MoveMachine(const SpanningTree& t, int n) : t_(t) {
        for (int i = 0; i < n; ++i) occ_.insert(i);
    }

    const std::set<int>& occupied() const { return occ_; }

    int connecting_edge(int a, int b) const {
        int child = std::max(a, b), par = std::min(a, b);
        int e = t_.parent_edge[child];
        if (e >= 0 && t_.in_tree[e] && t_.tau[e] == par) return e;
        for (int d : t_.deleted_edges)
            if (t_.tau[d] == par && t_.iota[d] == child) return d;
        throw internal_error("no edge between labels " + std::to_string(a) + " and " +
                             std::to_string(b));
    }

    void step(int from, int to) {
        check(occ_.count(from) == 1, "mover is not at its expected position");
        check(occ_.count(to) == 0, "target vertex occupied");
        int e = connecting_edge(from, to);
        std::vector<int> vs;
        for (int v : occ_)
            if (v != from) vs.push_back(v);
        Cell c = make_cell(t_, std::move(vs), {e});
        int sign = (from == t_.iota[e]) ? +1 : -1;
        letter(SignedCell{std::move(c), sign});
        occ_.erase(from);
        occ_.insert(to);
    }

    void walk(const std::vector<int>& labels) {
        for (size_t i = 0; i + 1 < labels.size(); ++i) step(labels[i], labels[i + 1]);
    }

    std::vector<SignedCell> take() { return std::move(out_); }

  private:
    void letter(SignedCell sc) {
        if (!out_.empty() && out_.back().cell == sc.cell && out_.back().sign == -sc.sign)
            out_.pop_back();
        else
            out_.push_back(std::move(sc));
    }
    const SpanningTree& t_;
    std::set<int> occ_;
    std::vector<SignedCell> out_;
};

} // namespace

Realizer::Realizer(const SpanningTree& t, int n) : t_(&t), n_(n) {
    require(n >= 1, "particle count must be positive");
    // Root segment must host the base stack: labels 0..n-1 form a chain.
    for (int j = 1; j <= n - 1; ++j) {
        require(j < t.labels() && t.parent_label[j] == j - 1,
                "root segment too short for the base configuration; "
                "subdivide the root edge so labels 0.." +
                    std::to_string(n - 1) + " form a chain");
    }
    for (int j = 0; j <= n - 2; ++j) {
        require(t.children[j].size() == 1 && t.children[j][0] == j + 1,
                "vertex " + std::to_string(j) +
                    " must be an interior stack vertex; subdivide the root edge");
    }
}

StarView Realizer::star(int v) const {
    const SpanningTree& t = tree();
    require(t.essential_label(v), "star view requires an essential vertex");
    StarView sv;
    sv.vertex = v;
    sv.branch_child.assign(1, -1); // leaf 0 unused slot
    for (int c : t.children[v]) sv.branch_child.push_back(c);
    sv.valence = t.degree_label(v);
    // Children of an essential vertex are tree children only; any deleted edge
    // at v would violate the bivalent-endpoint invariant.
    check(static_cast<int>(t.children[v].size()) == sv.valence - (v == 0 ? 0 : 1),
          "essential vertex has non-tree incidences");
    return sv;
}

std::vector<int> Realizer::root_stack_path(int v) const {
    std::vector<int> rp;
    for (int x = v;; x = tree().parent_label[x]) {
        rp.push_back(x);
        if (x == 0) break;
    }
    // The base stack occupies the deep end of this path.
    int sz = static_cast<int>(rp.size());
    for (int j = 0; j < n_ && j < sz; ++j)
        require(rp[sz - 1 - j] == j, "base stack does not sit under vertex " +
                                         std::to_string(v) + "; subdivide the root edge");
    require(sz >= n_, "tree path from the root to vertex " + std::to_string(v) +
                          " is shorter than the particle count; subdivide the root edge");
    return rp;
}

std::vector<int> Realizer::arm(int v, int leaf, int depth) const {
    const SpanningTree& t = tree();
    StarView sv = star(v);
    require(leaf >= 1 && leaf < static_cast<int>(sv.branch_child.size()),
            "leaf index out of range at vertex " + std::to_string(v));
    std::vector<int> a;
    int cur = sv.branch_child[leaf];
    a.push_back(cur);
    while (static_cast<int>(a.size()) < depth) {
        const auto& ch = t.children[cur];
        require(!ch.empty(), "branch arm at vertex " + std::to_string(v) + ", leaf " +
                                 std::to_string(leaf) +
                                 " is too short; subdivide that branch");
        cur = ch[0];
        a.push_back(cur);
    }
    return a;
}

std::vector<SignedCell> Realizer::sigma_word(const SigmaRef& s) const {
    const SpanningTree& t = tree();
    StarView sv = star(s.vertex);
    int k = sv.valence;
    require(static_cast<int>(s.seq.size()) >= 2, "sigma needs a sequence of length >= 2");
    require(s.i() <= n_ - 1, "sigma index exceeds n-1");
    for (int a : s.seq) require(a >= 1 && a < k, "leaf index out of range in sigma");

    // Parking plan: branch a hosts at most (count of a in seq) particles.
    std::map<int, int> plan;
    for (int a : s.seq) plan[a]++;
    std::map<int, std::vector<int>> arms;
    for (auto& [a, m] : plan) arms[a] = arm(s.vertex, a, m);

    std::vector<int> rp = root_stack_path(s.vertex);
    int rsz = static_cast<int>(rp.size());
    int root_count = n_;
    std::map<int, int> on_branch;

    MoveMachine mm(t, n_);
    auto beta = [&](int a) {
        check(root_count >= 1, "beta with an empty root stack");
        int m = on_branch[a];
        int pos = plan[a] - m; // park position, 1-based from the vertex
        check(pos >= 1, "branch over capacity");
        std::vector<int> path;
        for (int idx = rsz - root_count; idx >= 0; --idx) path.push_back(rp[idx]);
        for (int q = 0; q < pos; ++q) path.push_back(arms[a][q]);
        mm.walk(path);
        --root_count;
        ++on_branch[a];
    };
    auto beta_inv = [&](int a) {
        int m = on_branch[a];
        check(m >= 1, "beta^-1 from an empty branch");
        check(root_count < rsz, "root stack full");
        int idx = plan[a] - m; // arm index of the innermost particle
        std::vector<int> path;
        for (int q = idx; q >= 0; --q) path.push_back(arms[a][q]);
        for (int j = 0; j <= rsz - root_count - 2; ++j) path.push_back(rp[j]);
        mm.walk(path);
        ++root_count;
        --on_branch[a];
    };

    int i = s.i();
    for (int j = 0; j < i - 1; ++j) beta(s.seq[j]);
    int ai = s.seq[i - 1 + 0 + 0 + 0], aj = s.seq[i];
    // Y^{ai aj} = beta^{ai} beta^{aj} beta^{-ai} beta^{-aj}
    beta(ai);
    beta(aj);
    beta_inv(ai);
    beta_inv(aj);
    for (int j = i - 2; j >= 0; --j) beta_inv(s.seq[j]);
    check(root_count == n_, "sigma word did not return to base");
    return mm.take();
}

std::vector<SignedCell> Realizer::gamma_word(int e) const {
    const SpanningTree& t = tree();
    require(!t.in_tree[e], "gamma requires a deleted edge");
    require(t.tau[e] != 0, "the root deleted edge realizes the circular move, not gamma");
    MoveMachine mm(t, n_);
    int mover = n_ - 1;
    std::vector<int> up = t.tree_path(mover, t.iota[e]);
    for (size_t q = 1; q < up.size(); ++q)
        check(up[q] >= n_ - 1, "one-particle path dips into the stack");
    mm.walk(up);
    mm.step(t.iota[e], t.tau[e]);
    std::vector<int> back = t.tree_path(t.tau[e], mover);
    mm.walk(back);
    return mm.take();
}

std::vector<SignedCell> Realizer::delta_word() const {
    const SpanningTree& t = tree();
    require(t.has_e0, "no deleted edge at the root; the circular move is undefined");
    int e0 = t.e0();
    MoveMachine mm(t, n_);
    int mover = n_ - 1;
    std::vector<int> up = t.tree_path(mover, t.iota[e0]);
    for (size_t q = 1; q < up.size(); ++q)
        check(up[q] >= n_ - 1, "circular path dips into the stack");
    mm.walk(up);
    for (int j = n_ - 2; j >= 0; --j) mm.step(j, j + 1); // stack shifts up
    mm.step(t.iota[e0], 0);
    return mm.take();
}

std::vector<SignedCell> Realizer::gamma0_word(int v, int stick_leaf) const {
    const SpanningTree& t = tree();
    require(t.has_e0, "gamma_0 needs the root deleted edge");
    int e0 = t.e0();
    std::vector<int> loop_path = t.tree_path(0, t.iota[e0]);
    require(std::find(loop_path.begin(), loop_path.end(), v) != loop_path.end(),
            "vertex is not on the e0 loop");
    StarView sv = star(v);
    require(stick_leaf >= 1 && stick_leaf < static_cast<int>(sv.branch_child.size()),
            "stick leaf out of range");
    // The stick must leave the loop.
    {
        auto it = std::find(loop_path.begin(), loop_path.end(), v);
        size_t pos = it - loop_path.begin();
        check(pos + 1 < loop_path.size(), "essential vertex cannot be the iota endpoint of e0");
        require(sv.branch_child[stick_leaf] != loop_path[pos + 1],
                "stick leaf lies on the loop");
    }

    std::vector<int> rp = root_stack_path(v);
    int rsz = static_cast<int>(rp.size());
    std::vector<int> armv = arm(v, stick_leaf, n_ - 1);
    MoveMachine mm(t, n_);
    // Park the top n-1 particles on the stick, outside-in.
    for (int j = 0; j < n_ - 1; ++j) {
        int root_count = n_ - j;
        std::vector<int> path;
        for (int idx = rsz - root_count; idx >= 0; --idx) path.push_back(rp[idx]);
        int pos = (n_ - 1) - j; // park depth
        for (int q = 0; q < pos; ++q) path.push_back(armv[q]);
        mm.walk(path);
    }
    // Bottom particle runs the loop.
    std::vector<int> around = t.tree_path(0, t.iota[e0]);
    mm.walk(around);
    mm.step(t.iota[e0], 0);
    // Unpark.
    for (int j = n_ - 2; j >= 0; --j) {
        int pos = (n_ - 1) - j; // innermost occupied depth
        std::vector<int> path;
        for (int q = pos - 1; q >= 0; --q) path.push_back(armv[q]);
        for (int idx = 0; idx <= rsz - (n_ - j) - 0 - 1; ++idx) path.push_back(rp[idx]);
        mm.walk(path);
    }
    return mm.take();
}

std::vector<SignedCell> Realizer::circular_loop_word(const std::vector<int>& loop) const {
    const SpanningTree& t = tree();
    require(t.has_e0, "a circular word needs the root deleted edge");
    require(loop.size() >= 3 && loop.front() == 0 && loop.back() == 0,
            "circular loop must start and end at the root");
    for (int j = 0; j < n_; ++j)
        require(loop[j] == j, "circular loop must ascend the root stack");
    MoveMachine mm(t, n_);
    int m = static_cast<int>(loop.size());
    // Mover from its base spot along the loop up to iota(e0).
    std::vector<int> path(loop.begin() + (n_ - 1), loop.end() - 1);
    for (size_t q = 1; q < path.size(); ++q)
        check(path[q] >= n_ - 1, "circular loop dips into the stack");
    check(mm.connecting_edge(loop[m - 2], 0) == t.e0(), "circular loop must close through e0");
    check(loop[m - 2] == t.iota[t.e0()], "circular loop must close through e0");
    mm.walk(path);
    for (int j = n_ - 2; j >= 0; --j) mm.step(j, j + 1);
    mm.step(t.iota[t.e0()], 0);
    return mm.take();
}

std::vector<SignedCell> Realizer::one_particle_loop_word(const std::vector<int>& loop) const {
    const SpanningTree& t = tree();
    require(loop.size() >= 3 && loop.front() == loop.back(), "loop must be closed");
    for (int x : loop)
        require(x >= n_ - 1, "one-particle loop intersects the stack");
    MoveMachine mm(t, n_);
    int mover = n_ - 1;
    std::vector<int> up = t.tree_path(mover, loop.front());
    for (size_t q = 1; q < up.size(); ++q)
        check(up[q] >= n_ - 1, "approach path dips into the stack");
    mm.walk(up);
    mm.walk(loop);
    std::vector<int> back = t.tree_path(loop.front(), mover);
    mm.walk(back);
    return mm.take();
}

std::vector<SignedCell> Realizer::realize(const GeomToken& tok) const {
    std::vector<SignedCell> w;
    switch (tok.kind) {
        case GeomToken::Sigma: w = sigma_word(tok.sigma); break;
        case GeomToken::Gamma: {
            const auto& dels = tree().deleted_edges;
            require(tok.gamma_index >= 1 && tok.gamma_index < static_cast<int>(dels.size()),
                    "gamma index out of range");
            w = gamma_word(dels[tok.gamma_index]);
            break;
        }
        case GeomToken::Delta: w = delta_word(); break;
        case GeomToken::Gamma0: {
            // Canonical choice: first essential vertex on the e0 loop, smallest
            // off-loop leaf as the stick.
            const SpanningTree& t = tree();
            require(t.has_e0, "gamma_0 needs the root deleted edge");
            std::vector<int> lp = t.tree_path(0, t.iota[t.e0()]);
            int v = -1, next_on_loop = -1;
            for (size_t q = 0; q < lp.size(); ++q) {
                if (t.essential_label(lp[q])) {
                    v = lp[q];
                    next_on_loop = lp[q + 1];
                    break;
                }
            }
            require(v >= 0, "e0 loop carries no essential vertex");
            StarView sv = star(v);
            int stick = -1;
            for (int a = 1; a < static_cast<int>(sv.branch_child.size()); ++a) {
                if (sv.branch_child[a] != next_on_loop) {
                    stick = a;
                    break;
                }
            }
            require(stick >= 1, "no off-loop leaf at the lollipop vertex");
            w = gamma0_word(v, stick);
            break;
        }
    }
    return tok.sign > 0 ? w : invert_word(w);
}

std::vector<SignedCell> Realizer::realize(const std::vector<GeomToken>& word) const {
    std::vector<SignedCell> out;
    for (const GeomToken& tok : word) append_word(out, realize(tok));
    return out;
}

LoopGenerators loop_and_circular_words(const MorseComplex& mc) {
    const SpanningTree& t = mc.tree();
    Realizer rz(t, mc.particles());
    LoopGenerators lg;
    for (size_t j = 0; j < t.deleted_edges.size(); ++j) {
        int e = t.deleted_edges[j];
        GeomToken tok = (t.tau[e] == 0) ? GeomToken::make_delta()
                                        : GeomToken::make_gamma(static_cast<int>(j));
        std::vector<int> vs;
        if (t.tau[e] == 0) {
            for (int x = 1; x <= mc.particles() - 1; ++x) vs.push_back(x);
        } else {
            for (int x = 0; x <= mc.particles() - 2; ++x) vs.push_back(x);
        }
        Cell expect = make_cell(t, std::move(vs), {e});
        lg.tokens.push_back(tok);
        lg.words.push_back(rz.realize(tok));
        lg.expected_cell.push_back(mc.one_cell_id(expect));
    }
    return lg;
}

long long n1_rank(int n, int k) {
    auto binom = [](long long a, long long b) {
        if (b < 0 || b > a) return 0LL;
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    return (k - 2) * binom(n + k - 2, n - 1) - binom(n + k - 2, n) + 1;
}

long long star_generator_count(int n, int k) {
    long long total = 0, pw = 1;
    long long pairs = static_cast<long long>(k - 1) * (k - 2) / 2;
    for (int i = 1; i <= n - 1; ++i) {
        total += pw * pairs;
        pw *= (k - 1);
    }
    return total;
}

namespace {

std::string abstract_sigma_name(int i, const std::vector<int>& seq) {
    std::ostringstream os;
    os << "s" << i << "(";
    for (size_t j = 0; j < seq.size(); ++j) {
        if (j) os << ",";
        os << seq[j];
    }
    os << ")";
    return os.str();
}

} // namespace

Presentation star_relations(int n, int k) {
    require(n >= 2 && k >= 3, "star relations need n >= 2, k >= 3");
    Presentation p;
    std::map<std::vector<int>, int> gen_of; // seq with marker i at front
    auto seq_key = [](int i, const std::vector<int>& seq) {
        std::vector<int> key{i};
        key.insert(key.end(), seq.begin(), seq.end());
        return key;
    };
    // enumerate sequences by length
    std::function<void(int, std::vector<int>&)> enum_gens = [&](int len, std::vector<int>& cur) {
        if (static_cast<int>(cur.size()) == len) {
            int i = len - 1;
            if (cur[i - 1] < cur[i]) {
                gen_of[seq_key(i, cur)] = static_cast<int>(p.gens.size());
                p.gens.push_back(abstract_sigma_name(i, cur));
            }
            return;
        }
        for (int a = 1; a <= k - 1; ++a) {
            cur.push_back(a);
            enum_gens(len, cur);
            cur.pop_back();
        }
    };
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<int> cur;
        enum_gens(i + 1, cur);
    }

    // letters for sigma_i^{seq} (canonicalized through inverses)
    auto letter = [&](int i, std::vector<int> seq) -> std::vector<int> {
        int ai = seq[i - 1], aj = seq[i];
        if (ai == aj) return {};
        if (ai < aj) return {gen_of.at(seq_key(i, seq)) + 1};
        std::swap(seq[i - 1], seq[i]);
        return {-(gen_of.at(seq_key(i, seq)) + 1)};
    };
    auto push_word = [&](std::vector<int>& w, const std::vector<int>& ls, bool inv) {
        if (!inv) {
            w.insert(w.end(), ls.begin(), ls.end());
        } else {
            for (auto it = ls.rbegin(); it != ls.rend(); ++it) w.push_back(-*it);
        }
    };

    std::set<std::vector<int>> seen;
    auto add_relator = [&](const std::vector<int>& letters) {
        Word w = free_reduce(letters);
        if (w.empty()) return;
        auto canon = canonical_cyclic(w);
        if (seen.insert(canon).second) p.relators.push_back(std::move(w));
    };

    // pseudo-commutative: j - i >= 2
    for (int j = 3; j <= n - 1; ++j) {
        for (int i = 1; i + 2 <= j; ++i) {
            std::vector<int> seq(j + 1, 1);
            std::function<void(int)> rec = [&](int pos) {
                if (pos == j + 1) {
                    if (seq[i - 1] == seq[i]) return;
                    if (seq[j - 1] == seq[j]) return;
                    std::vector<int> sub_i(seq.begin(), seq.begin() + i + 1);
                    std::vector<int> swapped = seq;
                    std::swap(swapped[i - 1], swapped[i]);
                    std::vector<int> w;
                    push_word(w, letter(j, seq), false);
                    push_word(w, letter(i, sub_i), false);
                    push_word(w, letter(j, swapped), true);
                    push_word(w, letter(i, sub_i), true);
                    add_relator(w);
                    return;
                }
                for (int a = 1; a <= k - 1; ++a) {
                    seq[pos] = a;
                    rec(pos + 1);
                }
            };
            rec(0);
        }
    }
    // pseudo-braid: 1 <= i <= n-2
    for (int i = 1; i <= n - 2; ++i) {
        std::vector<int> seq(i + 2, 1);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == i + 2) {
                int a = seq[i - 1], b = seq[i], c = seq[i + 1];
                if (a == b || b == c || a == c) return;
                std::vector<int> pre(seq.begin(), seq.begin() + (i - 1));
                auto mk = [&](std::initializer_list<int> tail) {
                    std::vector<int> s = pre;
                    s.insert(s.end(), tail.begin(), tail.end());
                    return s;
                };
                std::vector<int> w;
                push_word(w, letter(i + 1, mk({a, b, c})), false);
                push_word(w, letter(i, mk({a, c})), false);
                push_word(w, letter(i + 1, mk({c, a, b})), false);
                push_word(w, letter(i, mk({b, c})), true);
                push_word(w, letter(i + 1, mk({b, a, c})), true);
                push_word(w, letter(i, mk({a, b})), true);
                add_relator(w);
                return;
            }
            for (int a = 1; a <= k - 1; ++a) {
                seq[pos] = a;
                rec(pos + 1);
            }
        };
        rec(0);
    }
    return p;
}

std::vector<GeomToken> critical_to_geometric(const MorseComplex& mc, const Cell& c) {
    const SpanningTree& t = mc.tree();
    require(c.dim() == 1, "expected a critical 1-cell");
    require(mc.kind_of(c) == CellKind::Critical, "cell is not critical");
    int e = c.edges[0];
    int n = mc.particles();
    if (!t.in_tree[e]) {
        int pos = t.deleted_position(e);
        check(pos >= 0, "deleted edge missing from the ordered list");
        if (t.tau[e] == 0) {
            return {GeomToken::make_delta()};
        }
        return {GeomToken::make_gamma(pos)};
    }
    int v = t.tau[e];
    check(t.essential_label(v), "critical tree edge must sit at an essential vertex");
    Realizer rz(t, n);
    StarView sv = rz.star(v);
    int k = sv.valence;
    int leaf_i = -1;
    for (int a = 1; a < static_cast<int>(sv.branch_child.size()); ++a)
        if (sv.branch_child[a] == t.iota[e]) leaf_i = a;
    check(leaf_i >= 1, "critical edge is not a child edge of its vertex");

    // Distribute blocked vertices over branches / the root side.
    std::vector<int> b(k, 0); // b[a], a = 1..k-1
    int root_side = 0;
    std::vector<std::vector<int>> branch_members(k);
    for (int u : c.verts) {
        int x = u, prev = -1;
        while (x > v) {
            prev = x;
            x = t.parent_label[x];
        }
        if (x == v) {
            int a = -1;
            for (int q = 1; q < static_cast<int>(sv.branch_child.size()); ++q)
                if (sv.branch_child[q] == prev) a = q;
            // `prev` is the position-1 vertex of u's branch only if the walk
            // passed through it; recover the branch by walking down the arm.
            check(a >= 1, "member does not hang off a branch of the vertex");
            b[a]++;
            branch_members[a].push_back(u);
        } else {
            ++root_side;
        }
    }
    // Validate stacking (criticality implies it; asserted for safety).
    for (int a = 1; a <= k - 1; ++a) {
        if (branch_members[a].empty()) continue;
        std::sort(branch_members[a].begin(), branch_members[a].end());
        int depth = b[a] + (a == leaf_i ? 1 : 0);
        std::vector<int> armv = rz.arm(v, a, depth);
        for (int q = 0; q < b[a]; ++q) {
            int expect = armv[(a == leaf_i ? q + 1 : q)];
            check(branch_members[a][q] == expect, "critical cell members are not stacked");
        }
    }

    // bar(b1): leaves >= i descending; s = bar(b2): leaves < i descending.
    std::vector<int> bar_b1, sseq;
    for (int a = k - 1; a >= leaf_i; --a)
        for (int q = 0; q < b[a]; ++q) bar_b1.push_back(a);
    for (int a = leaf_i - 1; a >= 1; --a)
        for (int q = 0; q < b[a]; ++q) sseq.push_back(a);
    check(!sseq.empty(), "critical star cell without a lower-branch witness");

    int r = static_cast<int>(bar_b1.size());
    std::vector<GeomToken> word;
    for (int tdx = 1; tdx <= static_cast<int>(sseq.size()); ++tdx) {
        SigmaRef sr;
        sr.vertex = v;
        sr.seq = bar_b1;
        sr.seq.insert(sr.seq.end(), sseq.begin(), sseq.begin() + (tdx - 1));
        sr.seq.push_back(leaf_i);
        sr.seq.push_back(sseq[tdx - 1]);
        check(sr.i() == r + tdx, "sigma index bookkeeping failed");
        word.push_back(GeomToken::make_sigma(std::move(sr)));
    }
    return word;
}

namespace {

// Case-1 path for prefix leaf `a` at v: from the position-1 vertex of branch a
// to the root, inside the host minus st(v), avoiding the tree path [*, v]
// except at the root. Returns the label path (child ... 0) or empty.
std::vector<int> case1_path(const SpanningTree& t, int v, int child) {
    std::set<int> forbidden;
    std::vector<int> down = t.tree_path(0, v);
    for (size_t q = 1; q < down.size(); ++q) forbidden.insert(down[q]); // excludes 0
    forbidden.insert(v);
    // BFS over labels; edges = tree + deleted, not incident to v.
    int L = t.labels();
    std::vector<int> prev(L, -2);
    std::queue<int> q;
    prev[child] = -1;
    q.push(child);
    auto neighbors = [&](int x) {
        std::vector<std::pair<int, int>> out; // (label, edge)
        const Graph& g = t.host;
        int gv = t.vertex_at[x];
        for (const HalfEdge& h : g.rotation(gv)) {
            int w = g.other_end(h.edge, gv);
            out.emplace_back(t.label_of[w], h.edge);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == 0) break;
        for (auto [y, e] : neighbors(x)) {
            (void)e;
            if (y == v || forbidden.count(y)) continue;
            if (prev[y] != -2) continue;
            prev[y] = x;
            q.push(y);
        }
    }
    if (prev[0] == -2) return {};
    std::vector<int> path;
    for (int x = 0; x != -1; x = prev[x]) path.push_back(x);
    std::reverse(path.begin(), path.end()); // child ... 0
    return path;
}

// Unrestricted path from `child` to the root avoiding only st(v).
std::vector<int> case2_path(const SpanningTree& t, int v, int child) {
    int L = t.labels();
    std::vector<int> prev(L, -2);
    std::queue<int> q;
    prev[child] = -1;
    q.push(child);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == 0) break;
        const Graph& g = t.host;
        int gv = t.vertex_at[x];
        std::vector<int> ns;
        for (const HalfEdge& h : g.rotation(gv)) ns.push_back(t.label_of[g.other_end(h.edge, gv)]);
        std::sort(ns.begin(), ns.end());
        for (int y : ns) {
            if (y == v) continue;
            if (prev[y] != -2) continue;
            prev[y] = x;
            q.push(y);
        }
    }
    require(prev[0] != -2, "host is not 2-connected at vertex " + std::to_string(v));
    std::vector<int> path;
    for (int x = 0; x != -1; x = prev[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

// Crossing tokens along a label path: each deleted edge crossed contributes a
// gamma (or delta for e0 entering the root positively).
std::vector<GeomToken> crossing_tokens(const SpanningTree& t, const std::vector<int>& path) {
    std::vector<GeomToken> out;
    for (size_t q = 0; q + 1 < path.size(); ++q) {
        int a = path[q], bq = path[q + 1];
        int child = std::max(a, bq), par = std::min(a, bq);
        int e = t.parent_edge[child];
        if (e >= 0 && t.in_tree[e] && t.tau[e] == par) continue; // tree edge
        int found = -1;
        for (int d : t.deleted_edges)
            if (t.tau[d] == par && t.iota[d] == child) found = d;
        check(found >= 0, "path step is not an edge");
        int sign = (a == t.iota[found]) ? +1 : -1;
        if (t.tau[found] == 0) {
            check(q + 2 == path.size() && sign > 0, "e0 must be the final, positive crossing");
            out.push_back(GeomToken::make_delta());
        } else {
            out.push_back(GeomToken::make_gamma(t.deleted_position(found), sign));
        }
    }
    return out;
}

std::vector<GeomToken> invert_tokens(const std::vector<GeomToken>& w) {
    std::vector<GeomToken> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        GeomToken tk = *it;
        tk.sign = -tk.sign;
        out.push_back(tk);
    }
    return out;
}

} // namespace

std::vector<GeomToken> rewrite_sigma_2connected(const MorseComplex& mc, const SigmaRef& s) {
    const SpanningTree& t = mc.tree();
    Realizer rz(t, mc.particles());
    std::function<std::vector<GeomToken>(const SigmaRef&)> rec =
        [&](const SigmaRef& sr) -> std::vector<GeomToken> {
        if (sr.i() == 1) return {GeomToken::make_sigma(sr)};
        StarView sv = rz.star(sr.vertex);
        int a1 = sr.seq[0];
        int child = sv.branch_child[a1];
        SigmaRef tail{sr.vertex, std::vector<int>(sr.seq.begin() + 1, sr.seq.end())};
        std::vector<int> p1 = case1_path(t, sr.vertex, child);
        if (!p1.empty()) {
            std::vector<GeomToken> bar = crossing_tokens(t, p1);
            std::vector<GeomToken> out = bar;
            auto mid = rec(tail);
            out.insert(out.end(), mid.begin(), mid.end());
            auto inv = invert_tokens(bar);
            out.insert(out.end(), inv.begin(), inv.end());
            return out;
        }
        std::vector<int> p2 = case2_path(t, sr.vertex, child);
        // First meeting with [*, v] other than the root.
        std::set<int> on_axis;
        for (int x : t.tree_path(0, sr.vertex)) on_axis.insert(x);
        int w = -1;
        size_t wpos = 0;
        for (size_t q = 1; q < p2.size(); ++q) {
            if (p2[q] != 0 && on_axis.count(p2[q])) {
                w = p2[q];
                wpos = q;
                break;
            }
        }
        require(w > 0, "2-connected rewrite: no usable meeting vertex");
        require(t.essential_label(w), "2-connected rewrite met the root path at a bivalent vertex");
        std::vector<int> gamma_prime(p2.begin(), p2.begin() + wpos + 1);
        std::vector<GeomToken> barw = crossing_tokens(t, gamma_prime);
        // Leaves at w: a = toward v, b = arrival of gamma'.
        StarView svw = rz.star(w);
        std::vector<int> wv = t.tree_path(w, sr.vertex);
        int toward_v = wv[1];
        int arrive = gamma_prime[gamma_prime.size() - 2];
        int leaf_a = -1, leaf_b = -1;
        for (int q = 1; q < static_cast<int>(svw.branch_child.size()); ++q) {
            if (svw.branch_child[q] == toward_v) leaf_a = q;
            if (svw.branch_child[q] == arrive) leaf_b = q;
        }
        require(leaf_a >= 1 && leaf_b >= 1 && leaf_a != leaf_b,
                "2-connected rewrite: could not identify leaves at the meeting vertex");
        std::vector<GeomToken> ladder;
        for (int j = 1; j <= sr.i(); ++j) {
            SigmaRef lj;
            lj.vertex = w;
            for (int q = 0; q < j - 1; ++q) lj.seq.push_back(leaf_a);
            lj.seq.push_back(leaf_b);
            lj.seq.push_back(leaf_a);
            auto sub = rec(lj);
            ladder.insert(ladder.end(), sub.begin(), sub.end());
        }
        std::vector<GeomToken> out = barw;
        out.insert(out.end(), ladder.begin(), ladder.end());
        auto mid = rec(tail);
        out.insert(out.end(), mid.begin(), mid.end());
        auto ladder_inv = invert_tokens(ladder);
        out.insert(out.end(), ladder_inv.begin(), ladder_inv.end());
        auto barw_inv = invert_tokens(barw);
        out.insert(out.end(), barw_inv.begin(), barw_inv.end());
        return out;
    };
    return rec(s);
}

std::vector<RewriteEntry> reduce_generators_2connected(const MorseComplex& mc) {
    const SpanningTree& t = mc.tree();
    require(t.host.topological_connectivity() >= 2, "host is not topologically 2-connected");
    Realizer rz(t, mc.particles());
    std::vector<RewriteEntry> table;
    int n = mc.particles();
    for (int v = 0; v < t.labels(); ++v) {
        if (!t.essential_label(v)) continue;
        int k = t.degree_label(v);
        for (int i = 2; i <= n - 1; ++i) {
            std::vector<int> seq(i + 1, 1);
            std::function<void(int)> loop = [&](int pos) {
                if (pos == i + 1) {
                    SigmaRef sr{v, seq};
                    RewriteEntry ent;
                    ent.lhs = sr;
                    ent.rhs = rewrite_sigma_2connected(mc, sr);
                    std::vector<int> lhs_red = mc.reduce_signed(rz.sigma_word(sr));
                    std::vector<int> rhs_red = mc.reduce_signed(rz.realize(ent.rhs));
                    ent.validated = (lhs_red == rhs_red);
                    check(ent.validated, "2-connected rewrite failed validation for " +
                                             sigma_name(t, sr));
                    table.push_back(std::move(ent));
                    return;
                }
                for (int a = 1; a <= k - 1; ++a) {
                    seq[pos] = a;
                    loop(pos + 1);
                }
            };
            loop(0);
        }
    }
    return table;
}

std::vector<GeomRelator> lollipop_relations(const MorseComplex& mc, int v) {
    const SpanningTree& t = mc.tree();
    int n = mc.particles();
    require(t.has_e0, "lollipop relations need the root deleted edge");
    Realizer rz(t, n);
    std::vector<int> lp = t.tree_path(0, t.iota[t.e0()]);
    auto it = std::find(lp.begin(), lp.end(), v);
    require(it != lp.end(), "vertex is not on the e0 loop");
    require(t.essential_label(v), "lollipop vertex must be essential");
    StarView sv = rz.star(v);
    int next_on_loop = *(it + 1);
    int loop_leaf = -1;
    for (int a = 1; a < static_cast<int>(sv.branch_child.size()); ++a)
        if (sv.branch_child[a] == next_on_loop) loop_leaf = a;
    require(loop_leaf >= 1, "e0 loop does not continue through a branch of the vertex");
    int stick_leaf = -1;
    for (int a = 1; a < static_cast<int>(sv.branch_child.size()); ++a)
        if (a != loop_leaf) {
            stick_leaf = a;
            break;
        }
    require(stick_leaf >= 1, "no off-loop leaf at the lollipop vertex");

    std::vector<GeomRelator> rels;
    // (delta-rel): gamma_0 = sigma_{n-1}^{v;s..s,l} ... sigma_1^{v;s,l} delta
    {
        GeomRelator r;
        r.name = "delta-rel";
        r.lhs = {GeomToken::make_gamma0()};
        for (int i = n - 1; i >= 1; --i) {
            SigmaRef sr;
            sr.vertex = v;
            for (int q = 0; q < i; ++q) sr.seq.push_back(stick_leaf);
            sr.seq.push_back(loop_leaf);
            r.rhs.push_back(GeomToken::make_sigma(std::move(sr)));
        }
        r.rhs.push_back(GeomToken::make_delta());
        rels.push_back(std::move(r));
    }
    // (lollipop-braid): sigma_{i+1}^{v;(prefix,a)} = bar(prefix) sigma_i^{v;a}
    // bar(prefix)^-1, with bar(loop_leaf) = delta and gamma-corrected versions
    // for other prefixes where a case-1 loop exists.
    int k = sv.valence;
    for (int i = 1; i <= n - 2; ++i) {
        std::vector<int> seq(i + 1, 1);
        std::function<void(int)> loop = [&](int pos) {
            if (pos == i + 1) {
                for (int prefix = 1; prefix <= k - 1; ++prefix) {
                    std::vector<GeomToken> bar;
                    if (prefix == loop_leaf) {
                        bar = {GeomToken::make_delta()};
                    } else {
                        std::vector<int> p1 = case1_path(t, v, sv.branch_child[prefix]);
                        if (p1.empty()) continue;
                        bar = crossing_tokens(t, p1);
                    }
                    GeomRelator r;
                    std::ostringstream nm;
                    nm << "lollipop-braid[i=" << i << ";prefix=" << prefix << ";a=";
                    for (size_t q = 0; q < seq.size(); ++q) nm << (q ? "," : "") << seq[q];
                    nm << "]";
                    r.name = nm.str();
                    SigmaRef big;
                    big.vertex = v;
                    big.seq.push_back(prefix);
                    big.seq.insert(big.seq.end(), seq.begin(), seq.end());
                    r.lhs = {GeomToken::make_sigma(std::move(big))};
                    r.rhs = bar;
                    SigmaRef small{v, seq};
                    r.rhs.push_back(GeomToken::make_sigma(std::move(small)));
                    auto inv = invert_tokens(bar);
                    r.rhs.insert(r.rhs.end(), inv.begin(), inv.end());
                    rels.push_back(std::move(r));
                }
                return;
            }
            for (int a = 1; a <= k - 1; ++a) {
                seq[pos] = a;
                loop(pos + 1);
            }
        };
        loop(0);
    }
    return rels;
}

} // namespace gbg
