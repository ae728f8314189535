#ifndef GBG_MORSE_HPP
#define GBG_MORSE_HPP

#include <map>
#include <string>
#include <vector>

#include "gbg/dconfig.hpp"

namespace gbg {

enum class CellKind { Critical, Redundant, Collapsible };

// Farley-Sabalka analysis of D_n over a fixed rooted spanning tree. Cells are
// interned per dimension in canonical order; the matching pairs redundant
// d-cells with collapsible (d+1)-cells.
class MorseComplex {
  public:
    MorseComplex(const SpanningTree& t, int n, int max_dim);

    const SpanningTree& tree() const { return *t_; }
    int particles() const { return n_; }
    int max_dim() const { return max_dim_; }

    int cell_count(int dim) const { return static_cast<int>(cells_[dim].size()); }
    const Cell& cell(int dim, int idx) const { return cells_[dim][idx]; }
    int find_cell(const Cell& c) const; // index within its dimension, -1 if absent
    CellKind kind(int dim, int idx) const { return kinds_[dim][idx]; }
    CellKind kind_of(const Cell& c) const;

    // Partner indices of the matching (-1 when not matched).
    int match_up(int dim, int idx) const { return match_up_[dim][idx]; }
    int match_down(int dim, int idx) const { return match_down_[dim][idx]; }

    bool blocked(int vertex_label, const Cell& c) const;
    bool order_respecting(int edge_id, const Cell& c) const;
    bool is_critical(const Cell& c) const;

    const std::vector<int>& critical(int dim) const { return critical_[dim]; }

    // Principal reduction of a word of signed 1-cells to a freely reduced word
    // of signed critical 1-cells. Letters are +-(index+1) into the dim-1 cell
    // table; `reduce_signed` accepts explicit cells.
    std::vector<int> reduce(const std::vector<int>& word) const;
    std::vector<int> reduce_signed(const std::vector<SignedCell>& word) const;

    // Single F-application image of a redundant 1-cell (three letters).
    const std::vector<int>& f_step(int one_cell_idx) const;

    int one_cell_id(const Cell& c) const; // index in dim 1, throws if absent
    std::vector<int> to_letters(const std::vector<SignedCell>& word) const;

    // Validates that a word of signed 1-cells chains through 0-cells starting
    // and ending at the basepoint {0..n-1}.
    void validate_closed_loop(const std::vector<SignedCell>& word) const;

    Cell basepoint() const;

    // Maps critical 1-cell indices (dim-1 table) to dense generator numbers.
    const std::vector<int>& generator_of_one_cell() const { return gen_of_; }

  private:
    const SpanningTree* t_;
    int n_;
    int max_dim_;
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::map<std::string, int>> index_;
    std::vector<std::vector<CellKind>> kinds_;
    std::vector<std::vector<int>> match_up_, match_down_;
    std::vector<std::vector<int>> critical_;
    std::vector<int> gen_of_;
    mutable std::vector<std::vector<int>> f_memo_;      // per 1-cell: F image
    mutable std::vector<std::vector<int>> finf_memo_;   // per 1-cell: F^inf image
    mutable std::vector<char> finf_state_;              // 0 new, 1 in progress, 2 done
    mutable long long f_budget_used_ = 0;

    void classify();
    const std::vector<int>& f_infinity(int idx) const;
    std::string key(const Cell& c) const;
};

// A Morse presentation: generators are the critical 1-cells, relators the
// reduced boundary words of the critical 2-cells.
struct MorsePresentation {
    std::vector<Cell> generators;
    std::vector<Cell> relator_cells;
    std::vector<std::vector<int>> relators; // letters +-(generator+1)
    std::vector<std::string> generator_names;
};

MorsePresentation morse_presentation(const MorseComplex& mc);

} // namespace gbg

#endif
