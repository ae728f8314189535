#ifndef GBG_GRAPH_HPP
#define GBG_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbg/common.hpp"

namespace gbg {

// A half-edge: side 0 sits at edge endpoint u, side 1 at endpoint v.
struct HalfEdge {
    int edge = -1;
    int side = 0;
    bool operator==(const HalfEdge& o) const { return edge == o.edge && side == o.side; }
};

struct Edge {
    int u = -1;
    int v = -1;
    std::string name;
    bool is_loop() const { return u == v; }
};

// Topological graph with a per-vertex clockwise rotation system. Multi-edges
// and loops are allowed; a loop contributes both of its half-edges to the
// rotation of its vertex. Values are immutable once built: mutating helpers
// return fresh graphs.
class Graph {
  public:
    Graph() = default;

    int add_vertex(const std::string& name);
    int add_edge(const std::string& u, const std::string& v, const std::string& name);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& vertex_name(int v) const { return vertex_names_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<HalfEdge>& rotation(int v) const { return rotation_[v]; }

    int vertex_index(const std::string& name) const;     // -1 if absent
    int edge_index(const std::string& name) const;       // -1 if absent
    int require_vertex(const std::string& name) const;
    int require_edge(const std::string& name) const;

    // Replaces the stored rotation at `v`. `halves` must be a permutation of
    // the incident half-edges.
    void set_rotation(const std::string& v, const std::vector<HalfEdge>& halves);
    void set_rotation_by_names(const std::string& v, const std::vector<std::string>& edge_names);

    void set_root(const std::string& v) { root_ = v; }
    const std::optional<std::string>& root() const { return root_; }

    int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
    bool is_essential(int v) const { return degree(v) >= 3; }
    int other_end(int e, int v) const;
    int half_edge_vertex(const HalfEdge& h) const;

    std::vector<int> essential_vertices() const;

    void validate() const;
    bool is_connected() const;

    // |E| - |V| + 1 for connected graphs.
    int first_betti() const;

    Graph subdivide(const std::string& edge_name, int times) const;
    Graph subdivide_edge_id(int e, int times) const;

    // Removes a bivalent vertex, merging its two distinct incident edges.
    Graph smooth(const std::string& vertex_name) const;

    // Smooth all bivalent vertices, then subdivide loops twice and all but one
    // of each parallel bundle once; the result is a simple graph.
    Graph minimal_simplicial_representative() const;

    // Largest k such that the minimal simplicial representative is
    // combinatorially k-connected (internally-disjoint path counts, Menger).
    // A singleton reports 1, a disconnected graph 0.
    int topological_connectivity() const;

    std::string fresh_vertex_name(const std::string& base) const;
    std::string fresh_edge_name(const std::string& base) const;

  private:
    std::vector<std::string> vertex_names_;
    std::map<std::string, int> vertex_index_;
    std::vector<Edge> edges_;
    std::map<std::string, int> edge_index_;
    std::vector<std::vector<HalfEdge>> rotation_;
    std::optional<std::string> root_;
};

struct FaceDecomposition {
    // Each face is a closed walk of directed darts (edge id, direction);
    // direction 0 traverses u->v, 1 traverses v->u.
    struct Dart {
        int edge;
        int dir;
    };
    std::vector<std::vector<Dart>> faces;
    int unbounded_face = -1;

    int count() const { return static_cast<int>(faces.size()); }
    std::vector<std::vector<int>> face_edge_sets() const; // sorted edge ids per face
};

// Face walks of the rotation system. Throws input_error when the face count
// fails the Euler check E - V + 2 (non-planar rotation data).
FaceDecomposition faces(const Graph& g);

// As `faces` but without the Euler validation; used by the validator itself.
FaceDecomposition trace_faces(const Graph& g);

} // namespace gbg

#endif
