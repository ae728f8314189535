#ifndef GBG_TREE_HPP
#define GBG_TREE_HPP

#include <string>
#include <vector>

#include "gbg/graph.hpp"

namespace gbg {

// A rooted spanning tree with the ribbon vertex labeling. Vertices are
// referred to by label throughout the Morse machinery; edges by host edge id.
// For every edge, iota > tau in label order; e(v) is the unique tree edge with
// iota = v.
class SpanningTree {
  public:
    Graph host;

    std::vector<int> label_of;  // vertex index -> label
    std::vector<int> vertex_at; // label -> vertex index
    std::vector<char> in_tree;  // per edge id

    std::vector<int> iota; // per edge id, label of the larger endpoint
    std::vector<int> tau;  // per edge id, label of the smaller endpoint

    std::vector<int> parent_label; // per label; -1 for the root
    std::vector<int> parent_edge;  // per label, the tree edge e(v); -1 for root
    std::vector<std::vector<int>> children; // per label, child labels ascending

    std::vector<int> deleted_edges; // edge ids; e0 first when present, then by iota
    bool has_e0 = false;            // deleted edge adjacent to the root

    int root_label() const { return 0; }
    int labels() const { return static_cast<int>(vertex_at.size()); }
    int degree_label(int lbl) const { return host.degree(vertex_at[lbl]); }
    bool essential_label(int lbl) const { return host.is_essential(vertex_at[lbl]); }
    int e0() const { return has_e0 ? deleted_edges[0] : -1; }

    // Unique tree path between two labels, as a label sequence including both
    // endpoints.
    std::vector<int> tree_path(int a, int b) const;

    // Edge id of the tree edge between adjacent labels a (child) and parent.
    int edge_between(int a, int b) const;

    // Index (1-based) of a deleted edge within the gamma numbering:
    // gamma_j corresponds to deleted_edges[j] for j >= 1; 0 is e0/delta.
    int deleted_position(int edge_id) const;

    void check_invariants() const;
};

// Builds the spanning tree. When `deleted_hints` is nonempty it fixes the
// non-tree edges exactly (the names must describe a valid choice). Otherwise
// a deterministic BFS in rotation order is used, auto-subdividing the host so
// that every deleted edge has bivalent endpoints. The host stored in the
// result reflects any such subdivisions.
SpanningTree build_spanning_tree(const Graph& g, const std::string& root,
                                 const std::vector<std::string>& deleted_hints = {});

// JSON export with "tree_edges", "labels", "deleted_edges".
std::string tree_to_json(const SpanningTree& t);

} // namespace gbg

#endif
