#include "gbg/presentation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace gbg {

void Word::assign(std::vector<int> letters) {
    ls.clear();
    for (int x : letters) {
        check(x != 0, "zero letter in word");
        if (!ls.empty() && ls.back() == -x)
            ls.pop_back();
        else
            ls.push_back(x);
    }
}

Word Word::inverse() const {
    std::vector<int> out;
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back(-*it);
    Word w;
    w.ls = std::move(out); // inverse of reduced word is reduced
    return w;
}

Word Word::concat(const Word& o) const {
    std::vector<int> out = ls;
    out.insert(out.end(), o.ls.begin(), o.ls.end());
    return free_reduce(std::move(out));
}

Word free_reduce(std::vector<int> letters) {
    Word w;
    w.assign(std::move(letters));
    return w;
}

Word cyclic_reduce(const Word& w) {
    std::vector<int> v = w.ls;
    size_t i = 0;
    while (v.size() >= 2 && v.front() == -v.back()) {
        v.erase(v.begin());
        v.pop_back();
        ++i;
    }
    (void)i;
    return free_reduce(std::move(v));
}

std::vector<int> canonical_cyclic(const Word& w_in) {
    Word w = cyclic_reduce(w_in);
    if (w.empty()) return {};
    auto best_rotation = [](const std::vector<int>& v) {
        std::vector<int> best = v;
        std::vector<int> cur = v;
        for (size_t k = 1; k < v.size(); ++k) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        return best;
    };
    std::vector<int> a = best_rotation(w.ls);
    std::vector<int> b = best_rotation(w.inverse().ls);
    return std::min(a, b);
}

bool cyclically_equal(const Word& a, const Word& b, bool allow_inversion) {
    Word ra = cyclic_reduce(a), rb = cyclic_reduce(b);
    if (ra.length() != rb.length()) return false;
    if (ra.empty()) return true;
    std::vector<int> doubled = ra.ls;
    doubled.insert(doubled.end(), ra.ls.begin(), ra.ls.end());
    auto contains = [&](const std::vector<int>& pat) {
        return std::search(doubled.begin(), doubled.end(), pat.begin(), pat.end()) !=
               doubled.end();
    };
    if (contains(rb.ls)) return true;
    return allow_inversion && contains(rb.inverse().ls);
}

int Presentation::find_gen(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(gens.size()); ++i)
        if (gens[i] == name) return i;
    return -1;
}

std::string Presentation::to_text() const {
    std::ostringstream os;
    os << "generators (" << gens.size() << "):";
    for (const auto& g : gens) os << " " << g;
    os << "\nrelators (" << relators.size() << "):\n";
    for (const Word& r : relators) {
        bool first = true;
        for (int l : r.ls) {
            if (!first) os << " ";
            os << gens[std::abs(l) - 1];
            if (l < 0) os << "^-1";
            first = false;
        }
        if (r.empty()) os << "1";
        os << "\n";
    }
    return os.str();
}

std::string Presentation::to_json() const {
    nlohmann::ordered_json j;
    j["generators"] = gens;
    std::vector<std::vector<int>> rels;
    for (const Word& r : relators) rels.push_back(r.ls);
    j["relators"] = rels;
    return j.dump(2);
}

namespace {

// Substitute generator g (1-based letter value) by word `by` inside `w`.
Word substitute(const Word& w, int g, const Word& by) {
    std::vector<int> out;
    Word byinv = by.inverse();
    for (int l : w.ls) {
        if (l == g) {
            out.insert(out.end(), by.ls.begin(), by.ls.end());
        } else if (l == -g) {
            out.insert(out.end(), byinv.ls.begin(), byinv.ls.end());
        } else {
            out.push_back(l);
        }
    }
    return free_reduce(std::move(out));
}

struct Occurrence {
    int total = 0;
    int best_rel = -1; // shortest relator where the generator occurs exactly once
};

// Try to shorten r using s (|s| <= |r|): if a cyclic segment of s^+- longer
// than half of s matches a segment of r, replace it by the complementary
// shorter piece.
bool shorten_with(Word& r, const Word& s) {
    if (s.empty() || r.empty() || s.length() > r.length()) return false;
    int L = s.length();
    int half = L / 2 + 1; // strictly more than half
    std::vector<int> rr = r.ls;
    for (int inv = 0; inv < 2; ++inv) {
        Word su = inv ? s.inverse() : s;
        std::vector<int> doubled = su.ls;
        doubled.insert(doubled.end(), su.ls.begin(), su.ls.end());
        // longest overlap first
        for (int len = L; len >= half; --len) {
            for (int off = 0; off < L; ++off) {
                auto beg = doubled.begin() + off;
                auto it = std::search(rr.begin(), rr.end(), beg, beg + len);
                if (it == rr.end()) continue;
                // Replace segment by inverse of the complement: if s = uv with
                // u the matched piece, then u = v^-1 in the group, shorter.
                std::vector<int> complement(doubled.begin() + off + len,
                                            doubled.begin() + off + L);
                Word repl = Word(std::move(complement)).inverse();
                std::vector<int> out(rr.begin(), it);
                out.insert(out.end(), repl.ls.begin(), repl.ls.end());
                out.insert(out.end(), it + len, rr.end());
                Word cand = free_reduce(std::move(out));
                if (cand.length() < r.length()) {
                    r = cand;
                    return true;
                }
            }
        }
    }
    return false;
}

} // namespace

TietzeResult tietze_simplify(const Presentation& p_in, long long budget,
                             const std::set<std::string>& keep) {
    static Budgets budgets = Budgets::from_env();
    if (budget < 0) budget = budgets.tietze_steps;
    TietzeResult res;
    res.p = p_in;
    Presentation& p = res.p;
    long long steps = 0;
    auto spend = [&](long long k) {
        steps += k;
        return steps <= budget;
    };

    std::vector<char> alive(p.gens.size(), 1);

    auto rebuild = [&]() {
        // compact generators, renumber letters
        std::vector<int> remap(p.gens.size(), -1);
        std::vector<std::string> gens;
        for (int i = 0; i < static_cast<int>(p.gens.size()); ++i) {
            if (alive[i]) {
                remap[i] = static_cast<int>(gens.size());
                gens.push_back(p.gens[i]);
            }
        }
        for (Word& r : p.relators) {
            std::vector<int> out;
            for (int l : r.ls) {
                int g = remap[std::abs(l) - 1];
                check(g >= 0, "live relator references dead generator");
                out.push_back(l > 0 ? g + 1 : -(g + 1));
            }
            r = free_reduce(std::move(out));
        }
        p.gens = gens;
        alive.assign(p.gens.size(), 1);
    };

    bool progress = true;
    while (progress) {
        progress = false;

        // (a) cyclic reduction, empty/duplicate removal
        for (Word& r : p.relators) r = cyclic_reduce(r);
        {
            std::vector<Word> kept;
            std::set<std::vector<int>> seen;
            for (Word& r : p.relators) {
                if (r.empty()) continue;
                auto canon = canonical_cyclic(r);
                if (seen.insert(canon).second) kept.push_back(std::move(r));
            }
            if (kept.size() != p.relators.size()) progress = true;
            p.relators = std::move(kept);
        }

        // (b) one elimination pass: generator with fewest total occurrences
        // that occurs exactly once in some relator.
        int R = static_cast<int>(p.relators.size());
        int G = static_cast<int>(p.gens.size());
        std::vector<Occurrence> occ(G);
        std::vector<std::vector<int>> count_in(R, std::vector<int>(G, 0));
        for (int ri = 0; ri < R; ++ri)
            for (int l : p.relators[ri].ls) count_in[ri][std::abs(l) - 1]++;
        for (int g = 0; g < G; ++g) {
            for (int ri = 0; ri < R; ++ri) {
                occ[g].total += count_in[ri][g];
                if (count_in[ri][g] == 1) {
                    if (occ[g].best_rel < 0 ||
                        p.relators[ri].length() < p.relators[occ[g].best_rel].length())
                        occ[g].best_rel = ri;
                }
            }
        }
        std::vector<int> candidates;
        for (int g = 0; g < G; ++g) {
            if (keep.count(p.gens[g])) continue;
            if (occ[g].best_rel < 0) continue;
            candidates.push_back(g);
        }
        std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            if (occ[a].total != occ[b].total) return occ[a].total < occ[b].total;
            int la = p.relators[occ[a].best_rel].length();
            int lb = p.relators[occ[b].best_rel].length();
            if (la != lb) return la < lb;
            return a < b;
        });
        bool eliminated = false;
        for (int pick : candidates) {
            int ri = occ[pick].best_rel;
            // Solve relator for the generator: rotate so the +-pick letter is
            // first; r = g^s . w = 1  =>  g^s = w^-1.
            std::vector<int> rot = p.relators[ri].ls;
            int at = -1;
            for (int i = 0; i < static_cast<int>(rot.size()); ++i)
                if (std::abs(rot[i]) == pick + 1) at = i;
            std::rotate(rot.begin(), rot.begin() + at, rot.end());
            int sign = rot[0] > 0 ? 1 : -1;
            Word rest(std::vector<int>(rot.begin() + 1, rot.end()));
            Word by = rest.inverse(); // g^sign = by
            if (sign < 0) by = by.inverse();

            long long max_len = 1;
            for (const Word& r : p.relators) max_len = std::max<long long>(max_len, r.length());
            bool ok = true;
            std::vector<Word> next;
            for (int rj = 0; rj < R; ++rj) {
                if (rj == ri) continue;
                Word s = substitute(p.relators[rj], pick + 1, by);
                if (s.length() > 64 * max_len) {
                    ok = false;
                    break;
                }
                if (!spend(s.length() + 1)) {
                    res.budget_exhausted = true;
                    ok = false;
                    break;
                }
                next.push_back(std::move(s));
            }
            if (ok) {
                res.trace.push_back("eliminate " + p.gens[pick]);
                p.relators = std::move(next);
                alive[pick] = 0;
                rebuild();
                progress = true;
                eliminated = true;
                break;
            }
            if (res.budget_exhausted) break;
        }
        if (res.budget_exhausted) break;
        if (eliminated) continue;

        // (c) overlap shortening
        std::sort(p.relators.begin(), p.relators.end(),
                  [](const Word& a, const Word& b) { return a.length() < b.length(); });
        for (size_t i = 0; i + 1 < p.relators.size() && !progress; ++i) {
            for (size_t j = i + 1; j < p.relators.size() && !progress; ++j) {
                if (!spend(p.relators[j].length())) {
                    res.budget_exhausted = true;
                    break;
                }
                if (shorten_with(p.relators[j], p.relators[i])) progress = true;
            }
        }
        if (res.budget_exhausted) break;
    }
    for (Word& r : res.p.relators) r = cyclic_reduce(r);
    return res;
}

TietzeResult quotient_and_identify(const Presentation& p_in, const std::vector<std::string>& kill,
                                   const std::vector<std::pair<std::string, std::string>>& identify,
                                   long long budget, const std::set<std::string>& keep) {
    Presentation p = p_in;
    // union-find over generator indices
    std::vector<int> parent(p.gens.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : identify) {
        int ia = p.find_gen(a), ib = p.find_gen(b);
        require(ia >= 0, "unknown generator: " + a);
        require(ib >= 0, "unknown generator: " + b);
        int ra = find(ia), rb = find(ib);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb); // lowest index wins
    }
    std::vector<char> killed(p.gens.size(), 0);
    for (const auto& k : kill) {
        int i = p.find_gen(k);
        require(i >= 0, "unknown generator: " + k);
        killed[find(i)] = 1; // killing propagates through identifications
    }
    for (size_t i = 0; i < p.gens.size(); ++i)
        if (killed[find(static_cast<int>(i))]) killed[i] = 1;

    std::vector<Word> rels;
    for (const Word& r : p.relators) {
        std::vector<int> out;
        for (int l : r.ls) {
            int g = find(std::abs(l) - 1);
            if (killed[g]) continue;
            out.push_back(l > 0 ? g + 1 : -(g + 1));
        }
        rels.push_back(free_reduce(std::move(out)));
    }
    // drop killed generators and non-representatives
    std::vector<int> remap(p.gens.size(), -1);
    std::vector<std::string> gens;
    for (size_t i = 0; i < p.gens.size(); ++i) {
        if (killed[i] || find(static_cast<int>(i)) != static_cast<int>(i)) continue;
        remap[i] = static_cast<int>(gens.size());
        gens.push_back(p.gens[i]);
    }
    for (Word& r : rels) {
        std::vector<int> out;
        for (int l : r.ls) {
            int g = remap[std::abs(l) - 1];
            check(g >= 0, "quotient remap failed");
            out.push_back(l > 0 ? g + 1 : -(g + 1));
        }
        r = free_reduce(std::move(out));
    }
    Presentation q;
    q.gens = std::move(gens);
    q.relators = std::move(rels);
    return tietze_simplify(q, budget, keep);
}

std::vector<mpz_class> smith_normal_form(std::vector<std::vector<mpz_class>> m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<mpz_class> diag;
    int r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // find the nonzero entry of least absolute value in the submatrix
        int pr = -1, pc = -1;
        mpz_class best;
        for (int i = r0; i < rows; ++i)
            for (int j = c0; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                mpz_class a = abs(m[i][j]);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        std::swap(m[r0], m[pr]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = r0 + 1; i < rows; ++i) {
                if (m[i][c0] == 0) continue;
                mpz_class q = m[i][c0] / m[r0][c0];
                for (int j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
                if (m[i][c0] != 0) {
                    std::swap(m[i], m[r0]);
                    clean = false;
                }
            }
            for (int j = c0 + 1; j < cols; ++j) {
                if (m[r0][j] == 0) continue;
                mpz_class q = m[r0][j] / m[r0][c0];
                for (int i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
                if (m[r0][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m[i][j], m[i][c0]);
                    clean = false;
                }
            }
        }
        diag.push_back(abs(m[r0][c0]));
        ++r0;
        ++c0;
    }
    // enforce the divisibility chain
    for (bool again = true; again;) {
        again = false;
        for (size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] % diag[i] != 0) {
                mpz_class g, l;
                mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[i + 1].get_mpz_t());
                l = diag[i] / g * diag[i + 1];
                diag[i] = g;
                diag[i + 1] = l;
                again = true;
            }
        }
    }
    return diag;
}

Abelianization abelianization(const Presentation& p) {
    int G = static_cast<int>(p.gens.size());
    std::vector<std::vector<mpz_class>> m;
    for (const Word& r : p.relators) {
        std::vector<mpz_class> row(G, 0);
        for (int l : r.ls) row[std::abs(l) - 1] += (l > 0 ? 1 : -1);
        m.push_back(std::move(row));
    }
    Abelianization ab;
    if (m.empty()) {
        ab.free_rank = G;
        return ab;
    }
    std::vector<mpz_class> diag = smith_normal_form(std::move(m));
    int rank = 0;
    for (const mpz_class& d : diag) {
        if (d != 0) {
            ++rank;
            if (d > 1) ab.torsion.push_back(d);
        }
    }
    ab.free_rank = G - rank;
    return ab;
}

std::string Abelianization::to_string() const {
    std::ostringstream os;
    os << "Z^" << free_rank;
    for (const auto& t : torsion) os << " + Z/" << t.get_str();
    return os.str();
}

} // namespace gbg
