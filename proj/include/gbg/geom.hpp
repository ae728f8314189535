#ifndef GBG_GEOM_HPP
#define GBG_GEOM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbg/morse.hpp"
#include "gbg/presentation.hpp"

namespace gbg {

// Star coordinates at an essential vertex: leaf 0 is the tree direction
// toward the root, leaves 1..k-1 are the child branches in label order.
struct StarView {
    int vertex = -1;               // label of the essential vertex
    std::vector<int> branch_child; // leaf a (1-based) -> child label
    int valence = 0;
};

// Leaf sequences (a_1, ..., a_{i+1}) with 1 <= a_j <= k-1 parameterize the
// exchange sigma_i^{v; a}.
struct SigmaRef {
    int vertex;           // label
    std::vector<int> seq; // leaf sequence, length i+1
    int i() const { return static_cast<int>(seq.size()) - 1; }
};

std::string sigma_name(const SpanningTree& t, const SigmaRef& s);
std::string gamma_name(int j); // "gamma<j>"

// Token of a geometric word: an exchange, a loop generator (1-based position
// in the deleted-edge list), the circular move, or gamma_0.
struct GeomToken {
    enum Kind { Sigma, Gamma, Delta, Gamma0 } kind;
    SigmaRef sigma;  // for Sigma
    int gamma_index; // for Gamma: position in deleted_edges (>= 1)
    int sign = 1;
    static GeomToken make_sigma(SigmaRef s, int sign = 1) {
        return GeomToken{Sigma, std::move(s), 0, sign};
    }
    static GeomToken make_gamma(int j, int sign = 1) { return GeomToken{Gamma, {}, j, sign}; }
    static GeomToken make_delta(int sign = 1) { return GeomToken{Delta, {}, 0, sign}; }
    static GeomToken make_gamma0(int sign = 1) { return GeomToken{Gamma0, {}, 0, sign}; }
};

std::string token_name(const SpanningTree& t, const GeomToken& tok);

// Compiles geometric moves into words of signed 1-cells of D_n. All moves are
// based at {0, ..., n-1}. Construction fails with input_error when the host
// lacks room (root segment shorter than n-1, or a branch arm too short),
// naming the needed resubdivision.
class Realizer {
  public:
    Realizer(const SpanningTree& t, int n);

    const SpanningTree& tree() const { return *t_; }
    int particles() const { return n_; }

    StarView star(int vertex_label) const;

    // sigma_i^{v;a} = beta^{a_1} ... beta^{a_{i-1}} Y^{a_i a_{i+1}}
    // beta^{-a_{i-1}} ... beta^{-a_1}, parking depths planned per branch.
    std::vector<SignedCell> sigma_word(const SigmaRef& s) const;

    // One-particle move around the loop of a non-root deleted edge.
    std::vector<SignedCell> gamma_word(int deleted_edge_id) const;

    // Circular move: top particle around the e0 loop, stack shifts up.
    std::vector<SignedCell> delta_word() const;

    // gamma_0: top n-1 particles park on the stick branch at `v`, the bottom
    // particle runs the e0 loop. `stick_leaf` off the loop.
    std::vector<SignedCell> gamma0_word(int v_label, int stick_leaf) const;

    // Circular move along an arbitrary closed loop through the root that
    // crosses e0 into the root as its final edge. The loop is a vertex-label
    // sequence starting and ending at 0.
    std::vector<SignedCell> circular_loop_word(const std::vector<int>& loop) const;

    // One-particle move around a closed loop avoiding the root: the top
    // particle walks to `entry` (a vertex on the loop), around, and back.
    std::vector<SignedCell> one_particle_loop_word(const std::vector<int>& loop) const;

    std::vector<SignedCell> realize(const GeomToken& tok) const;
    std::vector<SignedCell> realize(const std::vector<GeomToken>& word) const;

    // Branch arm of `v` in direction of leaf a: vertex labels at positions
    // 1, 2, ... (smallest-label descent), extended on demand up to `depth`.
    std::vector<int> arm(int v, int leaf, int depth) const;

  private:
    const SpanningTree* t_;
    int n_;

    std::vector<int> root_stack_path(int v) const; // v, parent, ..., 0
};

// Loop generators: for e0 the circular move delta, for each other deleted
// edge a one-particle move. Returns tokens in deleted-edge order.
struct LoopGenerators {
    std::vector<GeomToken> tokens;              // delta first when e0 exists
    std::vector<std::vector<SignedCell>> words; // realized
    std::vector<int> expected_cell;             // dim-1 index of the critical cell
};
LoopGenerators loop_and_circular_words(const MorseComplex& mc);

// The abstract star presentation G_{n,k}: generators sigma_i^{a} with
// a_i < a_{i+1}; relators are the pseudo-commutative and pseudo-braid
// relations (trivial instances skipped).
Presentation star_relations(int n, int k);
long long star_generator_count(int n, int k); // sum (k-1)^{i-1} C(k-1,2)
long long n1_rank(int n, int k);              // (k-2)C(n+k-2,n-1) - C(n+k-2,n) + 1

// Expresses a critical 1-cell as a word of geometric tokens whose realization
// reduces back to the cell.
std::vector<GeomToken> critical_to_geometric(const MorseComplex& mc, const Cell& c);

// Lollipop relations at an essential vertex on the e0 loop. Each entry is a
// named relator with its realized 1-cell word (expected to reduce to the
// empty critical word).
struct GeomRelator {
    std::string name;
    std::vector<GeomToken> lhs, rhs; // relation lhs = rhs
};
std::vector<GeomRelator> lollipop_relations(const MorseComplex& mc, int v_label);

// 2-connected reduction: rewrites every sigma_i (i >= 2) over exchanges
// Y^{w;ab}, loop moves and delta, per the inductive construction.
struct RewriteEntry {
    SigmaRef lhs;
    std::vector<GeomToken> rhs;
    bool validated = false;
};
std::vector<RewriteEntry> reduce_generators_2connected(const MorseComplex& mc);

// Rewrites one sigma (used by the table builder and the quotient pipeline).
std::vector<GeomToken> rewrite_sigma_2connected(const MorseComplex& mc, const SigmaRef& s);

} // namespace gbg

#endif
