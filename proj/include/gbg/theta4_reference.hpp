#ifndef GBG_THETA4_REFERENCE_HPP
#define GBG_THETA4_REFERENCE_HPP

#include <string>
#include <vector>

#include "gbg/presentation.hpp"

namespace gbg {

// Reference data for the three-particle braid group of the bundled theta4
// fixture: the 25 critical 1-cells g0..g24, the 21 critical 2-cells with
// their reduced boundary words, the 6-generator 1-relator reduction and the
// geometric names of the surviving generators.
namespace theta4_ref {

struct OneCell {
    int tau, iota;
    std::vector<int> verts;
};
const std::vector<OneCell>& one_cells();

struct TwoCell {
    int tau1, iota1, tau2, iota2;
    int vert;
    std::vector<int> word; // letters +-(g-number + 1)
};
const std::vector<TwoCell>& two_cells();

const std::vector<int>& reduced_generators(); // g-numbers of the 6 survivors
const std::vector<int>& reduced_relator();    // letters +-(g-number + 1)

struct DictEntry {
    int g;
    std::string name;
};
const std::vector<DictEntry>& dictionary();

// The quotient of the reduced presentation by the one-particle moves, as a
// word over sigma12, sigma13, sigma23, delta (1..4): the mixed pseudo-braid
// relator sigma12 d sigma13 d^-1 sigma23 d sigma12^-1 d^-1 sigma13^-1 d
// sigma23^-1 d^-1.
const std::vector<int>& pseudo_braid_relator();

} // namespace theta4_ref

struct Theta4ReferenceReport {
    bool counts_ok = false;
    bool cells_matched = false;
    int boundary_words_matched = 0;
    bool reduced_6_1 = false;
    bool survivors_match = false;
    bool relator_matches = false;
    bool dictionary_ok = false;
    bool quotient_pseudo_braid = false;
    double seconds = 0.0;
    bool ok() const {
        return counts_ok && cells_matched && boundary_words_matched == 21 && reduced_6_1 &&
               survivors_match && relator_matches && dictionary_ok && quotient_pseudo_braid;
    }
    std::string summary() const;
};

// Runs the full reference check on the bundled fixture.
Theta4ReferenceReport run_theta4_reference_check();

} // namespace gbg

#endif
