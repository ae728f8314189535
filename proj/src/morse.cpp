#include "gbg/morse.hpp"

#include <algorithm>

namespace gbg {

std::string MorseComplex::key(const Cell& c) const {
    std::string k;
    for (int v : c.verts) {
        k += 'v';
        k += std::to_string(v);
    }
    for (int e : c.edges) {
        k += 'e';
        k += std::to_string(tree().tau[e]);
        k += '.';
        k += std::to_string(tree().iota[e]);
    }
    return k;
}

MorseComplex::MorseComplex(const SpanningTree& t, int n, int max_dim)
    : t_(&t), n_(n), max_dim_(std::min(max_dim, n)) {
    std::vector<Cell> all = enumerate_cells(t, n);
    cells_.assign(max_dim_ + 1, {});
    for (Cell& c : all) {
        if (c.dim() <= max_dim_) cells_[c.dim()].push_back(std::move(c));
    }
    index_.assign(max_dim_ + 1, {});
    for (int d = 0; d <= max_dim_; ++d) {
        std::sort(cells_[d].begin(), cells_[d].end(),
                  [&](const Cell& a, const Cell& b) { return cell_less(t, a, b); });
        for (int i = 0; i < cell_count(d); ++i) index_[d][key(cells_[d][i])] = i;
    }
    classify();
    f_memo_.assign(cell_count(1), {});
    finf_memo_.assign(cell_count(1), {});
    finf_state_.assign(cell_count(1), 0);
}

int MorseComplex::find_cell(const Cell& c) const {
    if (c.dim() > max_dim_) return -1;
    auto it = index_[c.dim()].find(key(c));
    return it == index_[c.dim()].end() ? -1 : it->second;
}

CellKind MorseComplex::kind_of(const Cell& c) const {
    int idx = find_cell(c);
    check(idx >= 0, "kind_of: cell not in complex");
    return kinds_[c.dim()][idx];
}

bool MorseComplex::blocked(int v, const Cell& c) const {
    if (v == 0) return true; // the root has no parent edge
    int p = tree().parent_label[v];
    for (int u : c.verts)
        if (u == p) return true;
    for (int e : c.edges)
        if (tree().tau[e] == p || tree().iota[e] == p) return true;
    return false;
}

bool MorseComplex::order_respecting(int e, const Cell& c) const {
    if (!tree().in_tree[e]) return false;
    for (int u : c.verts) {
        if (u == 0) continue;
        if (tree().parent_label[u] == tree().tau[e] && u < tree().iota[e]) return false;
    }
    return true;
}

bool MorseComplex::is_critical(const Cell& c) const {
    for (int v : c.verts)
        if (!blocked(v, c)) return false;
    for (int e : c.edges)
        if (order_respecting(e, c)) return false;
    return true;
}

void MorseComplex::classify() {
    kinds_.assign(max_dim_ + 1, {});
    match_up_.assign(max_dim_ + 1, {});
    match_down_.assign(max_dim_ + 1, {});
    critical_.assign(max_dim_ + 1, {});
    std::vector<std::vector<char>> collapsible_mark(max_dim_ + 1);
    for (int d = 0; d <= max_dim_; ++d) {
        kinds_[d].assign(cell_count(d), CellKind::Critical);
        match_up_[d].assign(cell_count(d), -1);
        match_down_[d].assign(cell_count(d), -1);
        collapsible_mark[d].assign(cell_count(d), 0);
    }
    for (int d = 0; d <= max_dim_; ++d) {
        for (int i = 0; i < cell_count(d); ++i) {
            const Cell& c = cells_[d][i];
            if (collapsible_mark[d][i]) {
                kinds_[d][i] = CellKind::Collapsible;
                continue;
            }
            if (is_critical(c)) {
                kinds_[d][i] = CellKind::Critical;
                critical_[d].push_back(i);
                continue;
            }
            kinds_[d][i] = CellKind::Redundant;
            int v0 = -1;
            for (int v : c.verts) {
                if (!blocked(v, c)) {
                    v0 = v;
                    break;
                }
            }
            check(v0 >= 0, "redundant cell without an unblocked vertex (matching bug)");
            if (d + 1 > max_dim_) continue; // partner outside the truncated range
            std::vector<int> vs;
            for (int v : c.verts)
                if (v != v0) vs.push_back(v);
            std::vector<int> es = c.edges;
            es.push_back(tree().parent_edge[v0]);
            Cell up = make_cell(tree(), std::move(vs), std::move(es));
            int j = find_cell(up);
            check(j >= 0, "matched cell missing from the complex");
            check(!collapsible_mark[d + 1][j], "matching is not injective");
            check(!is_critical(up), "matching hit a critical cell");
            collapsible_mark[d + 1][j] = 1;
            match_up_[d][i] = j;
            match_down_[d + 1][j] = i;
        }
    }
    gen_of_.assign(cell_count(1), -1);
    for (int k = 0; k < static_cast<int>(critical_[1].size()); ++k)
        gen_of_[critical_[1][k]] = k;
}

const std::vector<int>& MorseComplex::f_step(int idx) const {
    check(kinds_[1][idx] == CellKind::Redundant, "f_step expects a redundant 1-cell");
    if (!f_memo_[idx].empty()) return f_memo_[idx];
    const Cell& c = cells_[1][idx];
    int up = match_up_[1][idx];
    check(up >= 0, "redundant 1-cell lacks a 2-cell partner; raise max_dim");
    auto cyc = boundary_cycle(tree(), cells_[2][up]);
    int pos = -1, sgn = 0;
    for (int i = 0; i < 4; ++i) {
        if (cyc[i].cell == c) {
            pos = i;
            sgn = cyc[i].sign;
            break;
        }
    }
    check(pos >= 0, "redundant cell not on its partner's boundary");
    auto letter = [&](const SignedCell& sc) {
        int j = index_[1].at(key(sc.cell));
        return sc.sign * (j + 1);
    };
    std::vector<int> w;
    if (sgn > 0) {
        // cycle = c . x1 x2 x3; F(c) = (x1 x2 x3)^-1
        for (int i = 3; i >= 1; --i) {
            SignedCell x = cyc[(pos + i) % 4];
            w.push_back(-letter(x));
        }
    } else {
        // c appears inverted; F(c) = x_{s-3} x_{s-2} x_{s-1}
        for (int i = 3; i >= 1; --i) {
            SignedCell x = cyc[(pos + 4 - i) % 4];
            w.push_back(letter(x));
        }
    }
    f_memo_[idx] = std::move(w);
    return f_memo_[idx];
}

const std::vector<int>& MorseComplex::f_infinity(int idx) const {
    if (finf_state_[idx] == 2) return finf_memo_[idx];
    check(finf_state_[idx] != 1, "principal reduction cycled (matching bug)");
    finf_state_[idx] = 1;
    static Budgets budgets = Budgets::from_env();
    std::vector<int> out;
    auto push = [&](int letter) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    };
    CellKind k = kinds_[1][idx];
    if (k == CellKind::Critical) {
        out.push_back(idx + 1);
    } else if (k == CellKind::Collapsible) {
        // empty
    } else {
        for (int letter : f_step(idx)) {
            ++f_budget_used_;
            if (f_budget_used_ > budgets.f_applications)
                throw budget_error("principal reduction exceeded GBG_BUDGET_F");
            int j = std::abs(letter) - 1;
            const std::vector<int>& sub = f_infinity(j);
            if (letter > 0) {
                for (int x : sub) push(x);
            } else {
                for (auto it = sub.rbegin(); it != sub.rend(); ++it) push(-*it);
            }
        }
    }
    finf_memo_[idx] = std::move(out);
    finf_state_[idx] = 2;
    return finf_memo_[idx];
}

std::vector<int> MorseComplex::reduce(const std::vector<int>& word) const {
    std::vector<int> out;
    auto push = [&](int letter) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    };
    for (int letter : word) {
        int j = std::abs(letter) - 1;
        check(j >= 0 && j < cell_count(1), "reduce: letter out of range");
        const std::vector<int>& sub = f_infinity(j);
        if (letter > 0) {
            for (int x : sub) push(x);
        } else {
            for (auto it = sub.rbegin(); it != sub.rend(); ++it) push(-*it);
        }
    }
    return out;
}

std::vector<int> MorseComplex::to_letters(const std::vector<SignedCell>& word) const {
    std::vector<int> letters;
    for (const SignedCell& sc : word) {
        auto it = index_[1].find(key(sc.cell));
        check(it != index_[1].end(), "1-cell missing from complex");
        letters.push_back(sc.sign * (it->second + 1));
    }
    return letters;
}

std::vector<int> MorseComplex::reduce_signed(const std::vector<SignedCell>& word) const {
    return reduce(to_letters(word));
}

Cell MorseComplex::basepoint() const {
    std::vector<int> vs(n_);
    for (int i = 0; i < n_; ++i) vs[i] = i;
    return make_cell(tree(), std::move(vs), {});
}

void MorseComplex::validate_closed_loop(const std::vector<SignedCell>& word) const {
    Cell cur = basepoint();
    for (const SignedCell& sc : word) {
        Cell top = one_cell_top(tree(), sc.cell);
        Cell bot = one_cell_bottom(tree(), sc.cell);
        const Cell& expect = (sc.sign > 0) ? top : bot;
        require(cur == expect, "word does not chain through 0-cells");
        cur = (sc.sign > 0) ? bot : top;
    }
    require(cur == basepoint(), "word is not a closed loop at the basepoint");
}

int MorseComplex::one_cell_id(const Cell& c) const {
    auto it = index_[1].find(key(c));
    check(it != index_[1].end(), "unknown 1-cell");
    return it->second;
}

MorsePresentation morse_presentation(const MorseComplex& mc) {
    MorsePresentation p;
    const auto& crit1 = mc.critical(1);
    std::vector<int> gen_of(mc.cell_count(1), -1);
    for (int k = 0; k < static_cast<int>(crit1.size()); ++k) {
        gen_of[crit1[k]] = k;
        p.generators.push_back(mc.cell(1, crit1[k]));
        p.generator_names.push_back(cell_to_string(mc.tree(), mc.cell(1, crit1[k])));
    }
    for (int idx : mc.critical(2)) {
        const Cell& c2 = mc.cell(2, idx);
        std::vector<int> letters = mc.reduce_signed(boundary_word(mc.tree(), c2));
        std::vector<int> rel;
        for (int l : letters) {
            int g = gen_of[std::abs(l) - 1];
            check(g >= 0, "reduced relator contains a non-critical letter");
            rel.push_back(l > 0 ? g + 1 : -(g + 1));
        }
        p.relator_cells.push_back(c2);
        p.relators.push_back(std::move(rel));
    }
    return p;
}

} // namespace gbg
