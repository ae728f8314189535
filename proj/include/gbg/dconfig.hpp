#ifndef GBG_DCONFIG_HPP
#define GBG_DCONFIG_HPP

#include <array>
#include <string>
#include <vector>

#include "gbg/tree.hpp"

namespace gbg {

// A cube of the discrete configuration space: n pairwise closure-disjoint
// cells of the host, stored canonically (vertex labels ascending, then edge
// ids sorted by (tau, iota)). Dimension = number of edge members.
struct Cell {
    std::vector<int> verts; // labels, ascending
    std::vector<int> edges; // host edge ids, sorted by (tau, iota) at build time

    int dim() const { return static_cast<int>(edges.size()); }
    int size() const { return static_cast<int>(verts.size() + edges.size()); }
    bool operator==(const Cell& o) const { return verts == o.verts && edges == o.edges; }
};

Cell make_cell(const SpanningTree& t, std::vector<int> verts, std::vector<int> edges);

// Canonical order: lexicographic over the member-id sequence, vertices before
// edges, edges keyed by (tau, iota).
bool cell_less(const SpanningTree& t, const Cell& a, const Cell& b);

// Display form per the dump format: vertices as labels, edges as "iota-tau".
std::string cell_to_string(const SpanningTree& t, const Cell& c);

// A signed 1-cell: the positive direction runs from the iota-side 0-cell to
// the tau-side 0-cell.
struct SignedCell {
    Cell cell;
    int sign = 1;
};

Cell one_cell_top(const SpanningTree& t, const Cell& c);    // {iota(e)} u verts
Cell one_cell_bottom(const SpanningTree& t, const Cell& c); // {tau(e)} u verts

// Sufficiency for n particles: every essential-to-essential chain has length
// >= n-1 and every cycle has length >= n+1; additionally |V| >= n.
bool is_sufficiently_subdivided(const Graph& g, int n, std::string* why = nullptr);

// Minimal deterministic subdivision achieving sufficiency. Rejects graphs
// without an essential vertex. Idempotent on sufficient inputs.
Graph ensure_sufficient_subdivision(const Graph& g, int n);

// Complete canonical enumeration of the cells of D_n. `dim_filter` < 0 means
// all dimensions. Refuses insufficiently subdivided hosts.
std::vector<Cell> enumerate_cells(const SpanningTree& t, int n, int dim_filter = -1);

// The 4-cycle boundary of a 2-cell as signed 1-cells, in cyclic order
// P_iota, Q_tau, P_tau^-1, Q_iota^-1 for the canonically sorted edge pair
// (p, q).
std::array<SignedCell, 4> boundary_cycle(const SpanningTree& t, const Cell& c);

// Boundary cut canonically: starts at the lowest corner 0-cell with the face
// moving the lower-labeled edge first.
std::vector<SignedCell> boundary_word(const SpanningTree& t, const Cell& c);

} // namespace gbg

#endif
