#ifndef GBG_THETA_HPP
#define GBG_THETA_HPP

#include <optional>
#include <string>
#include <vector>

#include "gbg/geom.hpp"
#include "gbg/morse.hpp"
#include "gbg/presentation.hpp"

namespace gbg {

// (vertex; a, b) with 1 <= a < b < val(vertex), vertex essential (by label).
struct Triple {
    int vertex;
    int a, b;
    bool operator==(const Triple& o) const {
        return vertex == o.vertex && a == o.a && b == o.b;
    }
    bool operator<(const Triple& o) const {
        if (vertex != o.vertex) return vertex < o.vertex;
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

std::string triple_name(const SpanningTree& t, const Triple& tr);

// Witness of Theta-relatedness: the embedded template pieces as label paths.
struct ThetaWitness {
    std::string shape;     // "theta3" or "vartheta3"
    bool swapped_roles;    // template v mapped to the second triple
    bool mirror_p, mirror_q;
    int f_top = -1;        // deleted edge on the top path
    int f_right = -1;      // vartheta only
    int z_vertex = -1;     // vartheta only
    std::vector<int> axis_sp;  // [*, p]
    std::vector<int> axis_pq;  // [p, q] in the tree
    std::vector<int> top;      // p .. q across f_top
    std::vector<int> bottom;   // theta3: q .. iota(e0); vartheta3: q .. z across f_right
};

std::optional<ThetaWitness> theta_related(const SpanningTree& t, const Triple& p,
                                          const Triple& q);

std::vector<Triple> all_triples(const SpanningTree& t);

struct ThetaClasses {
    std::vector<std::vector<Triple>> classes;
    std::vector<std::pair<Triple, Triple>> related_pairs; // witnesses found
};
ThetaClasses theta_classes(const SpanningTree& t);

// Nonseparating test for a simple cycle in a planar 3-connected host,
// cross-checked against face membership.
bool is_facial_cycle(const Graph& g, const std::vector<std::string>& cycle_edges);

// Replays the theta (or vartheta) relation through a witness; returns the
// realized relator word (expected to reduce to the empty critical word).
std::vector<SignedCell> replay_theta_relation(const MorseComplex& mc, const ThetaWitness& w,
                                              const Triple& p, const Triple& q);

struct PlanarQuotientReport {
    int triple_count = 0;
    int class_count = 0;
    Presentation quotient;
    std::vector<std::string> surviving_generators;
    std::vector<std::pair<std::string, bool>> relator_braid_trivial;
    Abelianization ab;
    bool all_relators_trivial = false;
    bool abelianization_is_Z = false;
    bool fully_reduced = false; // quotient generators are exactly {Y, delta}
    std::string to_json(const SpanningTree& t) const;
};

// Main-theorem pipeline: Morse presentation -> geometric dictionary ->
// quotient by one-particle moves with Y-identifications from theta classes ->
// Artin braid verification of every surviving relator.
PlanarQuotientReport verify_planar_quotient(const MorseComplex& mc);

// The B3(Theta4)-style contrast: quotient killing only the non-root
// one-particle moves, keeping delta and the exchanges at the first essential
// vertex; returns the simplified presentation.
TietzeResult quotient_by_gammas(const MorseComplex& mc, bool kill_gamma0,
                                const std::set<std::string>& keep = {});

// Extended presentation over Morse letters plus geometric sigma letters with
// dictionary and definition relators; shared by the quotient pipelines.
struct GeometricPresentation {
    Presentation p;
    std::vector<std::string> morse_names;        // per Morse generator
    std::vector<std::string> gamma_names;        // loop-generator names in p
    std::string delta_name;                      // empty if absent
    std::vector<SigmaRef> sigmas;                // sigma letters present
    std::string gamma0_relator_available;       // name of gamma0 if emitted
};
GeometricPresentation geometric_presentation(const MorseComplex& mc);

} // namespace gbg

#endif
