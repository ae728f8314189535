#ifndef GBG_BRAID_HPP
#define GBG_BRAID_HPP

#include <string>
#include <vector>

#include "gbg/presentation.hpp"

namespace gbg {

// A word in the Artin generators of B_n: letters are +-i for sigma_i^{+-1},
// 1 <= i <= n-1.
struct BraidWord {
    int n = 2;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int strands, std::vector<int> ls);
    BraidWord inverse() const;
    BraidWord concat(const BraidWord& o) const;
};

// Image under sigma_i -> (i, i+1); result[i] = image of strand i (0-based).
std::vector<int> permutation_image(const BraidWord& w);

// Word problem via handle reduction; exponent-sum and permutation prefilters
// run first. Throws budget_error if the step cap is exceeded (never
// misreports).
bool is_trivial_braid(const BraidWord& w, long long step_cap = -1);

// Rewrites over the two-generator presentation {sigma_1, delta},
// delta = sigma_1 ... sigma_{n-1}: sigma_{i+1} = delta^i sigma_1 delta^-i.
// Output letters: generator 1 = sigma_1, generator 2 = delta.
Word artin_two_generator_rewrite(const BraidWord& w);

// Expands a word over {sigma_1, delta} back to Artin letters.
BraidWord expand_two_generator(const Word& w, int n);

// Deterministic pseudorandom braid word (for property tests).
BraidWord random_braid_word(int n, int length, unsigned long long seed);

} // namespace gbg

#endif
