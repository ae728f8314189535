#ifndef GBG_PRESENTATION_HPP
#define GBG_PRESENTATION_HPP

#include <gmpxx.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gbg/common.hpp"

namespace gbg {

// A freely reduced word over abstract generators: letters are +-(index+1).
struct Word {
    std::vector<int> ls;

    Word() = default;
    explicit Word(std::vector<int> letters) { assign(std::move(letters)); }
    void assign(std::vector<int> letters);
    int length() const { return static_cast<int>(ls.size()); }
    bool empty() const { return ls.empty(); }
    Word inverse() const;
    Word concat(const Word& o) const;
    bool operator==(const Word& o) const { return ls == o.ls; }
};

Word free_reduce(std::vector<int> letters);
Word cyclic_reduce(const Word& w);
// Minimal word over all rotations of w and of w^-1 (lexicographic); the
// canonical form of a relator.
std::vector<int> canonical_cyclic(const Word& w);
bool cyclically_equal(const Word& a, const Word& b, bool allow_inversion = true);

struct Presentation {
    std::vector<std::string> gens;
    std::vector<Word> relators;

    int find_gen(const std::string& name) const;
    std::string to_text() const;
    std::string to_json() const;
};

struct TietzeResult {
    Presentation p;
    bool budget_exhausted = false;
    std::vector<std::string> trace;
};

// Deterministic simplification: deletes trivial relators, eliminates
// generators occurring exactly once in some relator (fewest total occurrences
// first), and shortens relators by overlap with shorter ones. Generators
// named in `keep` are never eliminated. Substitutions capping relator length
// at 64x the pre-substitution maximum are skipped and retried later.
TietzeResult tietze_simplify(const Presentation& p, long long budget = -1,
                             const std::set<std::string>& keep = {});

// Kills generators (replacing them by the empty word everywhere), merges
// identified pairs to a canonical representative, then simplifies.
TietzeResult quotient_and_identify(const Presentation& p, const std::vector<std::string>& kill,
                                   const std::vector<std::pair<std::string, std::string>>& identify,
                                   long long budget = -1, const std::set<std::string>& keep = {});

struct Abelianization {
    std::vector<mpz_class> torsion; // invariant factors > 1, divisibility order
    int free_rank = 0;
    bool operator==(const Abelianization& o) const {
        return torsion == o.torsion && free_rank == o.free_rank;
    }
    std::string to_string() const;
};

// Smith normal form of the relator exponent matrix, exact arithmetic.
Abelianization abelianization(const Presentation& p);

// Smith normal form over arbitrary-precision integers; returns the diagonal
// entries (non-negative, divisibility chain, zeros trailing).
std::vector<mpz_class> smith_normal_form(std::vector<std::vector<mpz_class>> m);

} // namespace gbg

#endif
