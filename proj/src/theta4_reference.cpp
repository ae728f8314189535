#include "gbg/theta4_reference.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "gbg/geom.hpp"
#include "gbg/json_io.hpp"
#include "gbg/morse.hpp"

namespace gbg {
namespace theta4_ref {

const std::vector<OneCell>& one_cells() {
    static const std::vector<OneCell> cells = {
        {2, 7, {3, 8}},    {2, 5, {3, 7}},   {8, 11, {0, 9}},  {8, 13, {11, 12}},
        {8, 13, {9, 11}},  {2, 5, {3, 4}},   {4, 12, {0, 1}},  {8, 13, {9, 14}},
        {2, 5, {3, 6}},    {8, 13, {0, 11}}, {8, 11, {9, 13}}, {8, 11, {9, 12}},
        {8, 13, {9, 10}},  {8, 13, {11, 14}},{8, 11, {9, 10}}, {2, 7, {3, 5}},
        {2, 7, {5, 8}},    {8, 13, {0, 9}},  {2, 5, {0, 3}},   {0, 14, {1, 2}},
        {2, 7, {0, 3}},    {2, 7, {0, 5}},   {6, 10, {0, 1}},  {2, 7, {5, 6}},
        {2, 7, {3, 4}},
    };
    return cells;
}

const std::vector<TwoCell>& two_cells() {
    static const std::vector<TwoCell> cells = {
        {0, 14, 2, 7, 6, {20, -22, -20, 17}},
        {2, 7, 4, 12, 6, {16, 19, -7, -17, 7, -21, -2}},
        {6, 10, 8, 13, 10, {23, -22, -17, -18, 17, 22, -23, -18, 13}},
        {4, 12, 8, 13, 10, {7, -21, -1, -18, 1, 21, -7, -10, 5}},
        {0, 14, 6, 10, 2, {20, -23, -20, 18, 23, -22}},
        {0, 14, 8, 13, 10, {20, -18, -20, 8}},
        {4, 12, 8, 13, 12, {7, -21, -1, -10, 1, 21, -7, -10, 4}},
        {2, 7, 4, 12, 4, {25, -7, -1, 7, -21}},
        {2, 7, 6, 10, 6, {24, -23, -17, 23, -22}},
        {0, 14, 8, 11, 10, {20, -3, -20, 11}},
        {6, 10, 8, 13, 12, {3, 23, -22, -17, -10, 17, 22, -23, -18, -11, 5}},
        {2, 5, 4, 12, 4, {6, -7, -2, 7, -19}},
        {4, 12, 8, 11, 10, {7, -21, -1, -3, 1, 21, -7, 12}},
        {0, 14, 2, 7, 4, {20, -21, -20, 1}},
        {6, 10, 8, 11, 10, {23, -22, -17, -3, 17, 22, -23, -3, 15}},
        {4, 12, 6, 10, 1, {7, -19, -23, 21, -7, 3, 23, -22}},
        {0, 14, 8, 13, 12, {20, -10, -20, 14}},
        {2, 5, 6, 10, 4, {9, -23, -2, 23}},
        {0, 14, 2, 5, 4, {20, -19, -20, 2}},
        {2, 7, 6, 10, 4, {16, -23, -1, 23, -22}},
        {0, 14, 4, 12, 2, {20, -7, -20, 10, 7, -21}},
    };
    return cells;
}

const std::vector<int>& reduced_generators() {
    static const std::vector<int> g = {18, 20, 21, 22, 6, 19};
    return g;
}

const std::vector<int>& reduced_relator() {
    static const std::vector<int> w = {22, -23, 20, 21, -20, 23, 19, -7,
                                       20, -22, -20, 7,  -21, 20, -19, -20};
    return w;
}

const std::vector<DictEntry>& dictionary() {
    static const std::vector<DictEntry> d = {
        {18, "sigma1[2;2,1]"}, {20, "sigma1[2;3,1]"}, {21, "sigma1[2;3,2]"},
        {22, "gamma1"},        {6, "gamma2"},         {19, "delta"},
    };
    return d;
}

const std::vector<int>& pseudo_braid_relator() {
    // sigma12=1, sigma13=2, sigma23=3, delta=4
    static const std::vector<int> w = {1, 4, 2, -4, 3, 4, -1, -4, -2, 4, -3, -4};
    return w;
}

} // namespace theta4_ref

std::string Theta4ReferenceReport::summary() const {
    std::ostringstream os;
    os << "counts(25/21)=" << (counts_ok ? "ok" : "FAIL")
       << " cells=" << (cells_matched ? "ok" : "FAIL") << " boundary_words="
       << boundary_words_matched << "/21 reduced=" << (reduced_6_1 ? "6/1" : "FAIL")
       << " survivors=" << (survivors_match ? "ok" : "FAIL")
       << " relator=" << (relator_matches ? "ok" : "FAIL")
       << " dictionary=" << (dictionary_ok ? "ok" : "FAIL")
       << " quotient=" << (quotient_pseudo_braid ? "pseudo-braid" : "FAIL") << " ["
       << seconds << "s]";
    return os.str();
}

Theta4ReferenceReport run_theta4_reference_check() {
    auto t0 = std::chrono::steady_clock::now();
    Theta4ReferenceReport rep;

    GraphBundle b = fixture("theta4");
    SpanningTree t = build_spanning_tree(b.g, *b.g.root(), b.deleted_hints);
    MorseComplex mc(t, 3, 3);
    MorsePresentation mp = morse_presentation(mc);

    rep.counts_ok = (mp.generators.size() == 25 && mp.relators.size() == 21);

    auto find_edge = [&](int tau, int iota) {
        for (int e = 0; e < t.host.edge_count(); ++e)
            if (t.tau[e] == tau && t.iota[e] == iota) return e;
        return -1;
    };
    // match generators by content
    std::map<int, int> ours_to_g, g_to_ours;
    bool all_cells = true;
    for (int gi = 0; gi < static_cast<int>(theta4_ref::one_cells().size()); ++gi) {
        const auto& oc = theta4_ref::one_cells()[gi];
        int e = find_edge(oc.tau, oc.iota);
        if (e < 0) {
            all_cells = false;
            continue;
        }
        Cell c = make_cell(t, oc.verts, {e});
        int found = -1;
        for (size_t k = 0; k < mp.generators.size(); ++k)
            if (mp.generators[k] == c) found = static_cast<int>(k);
        if (found < 0) {
            all_cells = false;
            continue;
        }
        ours_to_g[found] = gi;
        g_to_ours[gi] = found;
    }
    rep.cells_matched = all_cells && ours_to_g.size() == 25;

    // boundary words up to rotation and inversion after renaming
    for (const auto& tc : theta4_ref::two_cells()) {
        int e1 = find_edge(tc.tau1, tc.iota1);
        int e2 = find_edge(tc.tau2, tc.iota2);
        if (e1 < 0 || e2 < 0) continue;
        Cell two = make_cell(t, {tc.vert}, {e1, e2});
        int which = -1;
        for (size_t k = 0; k < mp.relator_cells.size(); ++k)
            if (mp.relator_cells[k] == two) which = static_cast<int>(k);
        if (which < 0) continue;
        std::vector<int> ours;
        bool ok = true;
        for (int l : mp.relators[which]) {
            auto it = ours_to_g.find(std::abs(l) - 1);
            if (it == ours_to_g.end()) {
                ok = false;
                break;
            }
            ours.push_back(l > 0 ? it->second + 1 : -(it->second + 1));
        }
        if (!ok) continue;
        if (cyclically_equal(Word(std::move(ours)), Word(std::vector<int>(tc.word)), true))
            rep.boundary_words_matched++;
    }

    // Tietze reduction protecting the geometric generators.
    Presentation p;
    p.gens = mp.generator_names;
    for (const auto& r : mp.relators) p.relators.push_back(Word(std::vector<int>(r)));
    std::set<std::string> keep;
    std::map<std::string, int> protected_name_to_g;
    for (const auto& de : theta4_ref::dictionary()) {
        auto it = g_to_ours.find(de.g);
        if (it == g_to_ours.end()) continue;
        keep.insert(mp.generator_names[it->second]);
        protected_name_to_g[mp.generator_names[it->second]] = de.g;
    }
    TietzeResult tz = tietze_simplify(p, -1, keep);
    rep.reduced_6_1 = (tz.p.gens.size() == 6 && tz.p.relators.size() == 1);

    if (rep.reduced_6_1) {
        std::set<std::string> survivors(tz.p.gens.begin(), tz.p.gens.end());
        rep.survivors_match = true;
        for (const auto& [nm, g] : protected_name_to_g) {
            (void)g;
            if (!survivors.count(nm)) rep.survivors_match = false;
        }
        if (static_cast<int>(keep.size()) != 6) rep.survivors_match = false;
        // rename our relator into g-numbers and compare
        if (rep.survivors_match) {
            std::vector<int> ours;
            bool ok = true;
            // map presentation index -> g-number
            std::vector<int> to_g(tz.p.gens.size(), -1);
            for (size_t i = 0; i < tz.p.gens.size(); ++i) {
                auto it = protected_name_to_g.find(tz.p.gens[i]);
                if (it == protected_name_to_g.end())
                    ok = false;
                else
                    to_g[i] = it->second;
            }
            if (ok) {
                for (int l : tz.p.relators[0].ls)
                    ours.push_back(l > 0 ? to_g[l - 1] + 1 : -(to_g[std::abs(l) - 1] + 1));
                rep.relator_matches = cyclically_equal(
                    Word(std::move(ours)), Word(std::vector<int>(theta4_ref::reduced_relator())),
                    true);
            }
        }
    }

    // geometric dictionary of the survivors
    {
        Realizer rz(t, 3);
        rep.dictionary_ok = true;
        for (const auto& de : theta4_ref::dictionary()) {
            auto it = g_to_ours.find(de.g);
            if (it == g_to_ours.end()) {
                rep.dictionary_ok = false;
                continue;
            }
            auto word = critical_to_geometric(mc, mp.generators[it->second]);
            if (word.size() != 1 || token_name(t, word[0]) != de.name) rep.dictionary_ok = false;
        }
    }

    // quotient by the one-particle moves gamma1, gamma2: expect the mixed
    // pseudo-braid relator over sigma12, sigma13, sigma23, delta
    if (rep.reduced_6_1 && rep.survivors_match) {
        std::map<int, std::string> g_name;
        for (const auto& [nm, g] : protected_name_to_g) g_name[g] = nm;
        TietzeResult q = quotient_and_identify(
            tz.p, {g_name[22], g_name[6]}, {},
            -1, {g_name[18], g_name[20], g_name[21], g_name[19]});
        if (q.p.gens.size() == 4 && q.p.relators.size() == 1) {
            // rename: sigma1[2;2,1] = sigma12^-1, sigma1[2;3,1] = sigma13^-1,
            // sigma1[2;3,2] = sigma23^-1, delta = delta
            std::map<std::string, std::pair<int, int>> to_letter = {
                {g_name[18], {1, -1}}, {g_name[20], {2, -1}}, {g_name[21], {3, -1}},
                {g_name[19], {4, +1}},
            };
            std::vector<int> ours;
            bool ok = true;
            for (int l : q.p.relators[0].ls) {
                auto it = to_letter.find(q.p.gens[std::abs(l) - 1]);
                if (it == to_letter.end()) {
                    ok = false;
                    break;
                }
                int letter = it->second.first * ((l > 0 ? 1 : -1) * it->second.second);
                ours.push_back(letter);
            }
            if (ok)
                rep.quotient_pseudo_braid = cyclically_equal(
                    Word(std::move(ours)),
                    Word(std::vector<int>(theta4_ref::pseudo_braid_relator())), true);
        }
    }

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace gbg
