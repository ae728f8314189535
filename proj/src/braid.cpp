#include "gbg/braid.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace gbg {

BraidWord::BraidWord(int strands, std::vector<int> ls) : n(strands), letters(std::move(ls)) {
    require(n >= 1, "braid needs at least one strand");
    for (int l : letters)
        require(l != 0 && std::abs(l) <= n - 1, "braid letter index out of range");
}

BraidWord BraidWord::inverse() const {
    std::vector<int> out;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.push_back(-*it);
    return BraidWord(n, std::move(out));
}

BraidWord BraidWord::concat(const BraidWord& o) const {
    check(n == o.n, "strand counts differ");
    std::vector<int> out = letters;
    out.insert(out.end(), o.letters.begin(), o.letters.end());
    return BraidWord(n, std::move(out));
}

std::vector<int> permutation_image(const BraidWord& w) {
    std::vector<int> per(w.n);
    std::iota(per.begin(), per.end(), 0);
    for (int l : w.letters) {
        int i = std::abs(l) - 1;
        std::swap(per[i], per[i + 1]);
    }
    return per;
}

namespace {

std::vector<int> freely_reduce(const std::vector<int>& in) {
    std::vector<int> out;
    for (int x : in) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

// Finds the leftmost-closing handle: positions (p, q) with w[p] = sigma_i^e,
// w[q] = sigma_i^-e and only letters of index > i strictly between. Returns
// false when the word is handle-free.
bool find_handle(const std::vector<int>& w, int& p_out, int& q_out) {
    int m = static_cast<int>(w.size());
    std::vector<int> last_of_index(64, -1);
    int max_index = 0;
    for (int x : w) max_index = std::max(max_index, std::abs(x));
    std::vector<int> last(max_index + 1, -1);
    for (int q = 0; q < m; ++q) {
        int i = std::abs(w[q]);
        int p = last[i];
        if (p >= 0 && w[p] == -w[q]) {
            bool clean = true;
            for (int t = p + 1; t < q && clean; ++t)
                if (std::abs(w[t]) <= i) clean = false;
            if (clean) {
                p_out = p;
                q_out = q;
                return true;
            }
        }
        last[i] = q;
    }
    (void)last_of_index;
    return false;
}

} // namespace

bool is_trivial_braid(const BraidWord& w0, long long step_cap) {
    static Budgets budgets = Budgets::from_env();
    if (step_cap < 0) step_cap = budgets.handle_steps;

    // Cheap refutations first.
    long long expsum = 0;
    for (int l : w0.letters) expsum += (l > 0 ? 1 : -1);
    if (expsum != 0) return false;
    std::vector<int> per = permutation_image(w0);
    for (int i = 0; i < w0.n; ++i)
        if (per[i] != i) return false;

    std::vector<int> w = freely_reduce(w0.letters);
    long long steps = 0;
    while (!w.empty()) {
        int p, q;
        if (!find_handle(w, p, q)) break;
        int i = std::abs(w[p]);
        int e = (w[p] > 0) ? 1 : -1;
        std::vector<int> out(w.begin(), w.begin() + p);
        for (int t = p + 1; t < q; ++t) {
            int j = std::abs(w[t]);
            int d = (w[t] > 0) ? 1 : -1;
            if (j == i + 1) {
                out.push_back(-e * (i + 1));
                out.push_back(d * i);
                out.push_back(e * (i + 1));
            } else {
                out.push_back(w[t]);
            }
        }
        out.insert(out.end(), w.begin() + q + 1, w.end());
        w = freely_reduce(out);
        if (++steps > step_cap) throw budget_error("handle reduction exceeded GBG_BUDGET_HANDLE");
    }
    return w.empty();
}

Word artin_two_generator_rewrite(const BraidWord& w) {
    // generator letters: 1 = sigma_1, 2 = delta
    std::vector<int> out;
    for (int l : w.letters) {
        int i = std::abs(l) - 1; // sigma_{i+1} = delta^i sigma_1 delta^-i
        for (int k = 0; k < i; ++k) out.push_back(2);
        out.push_back(l > 0 ? 1 : -1);
        for (int k = 0; k < i; ++k) out.push_back(-2);
    }
    return free_reduce(std::move(out));
}

BraidWord expand_two_generator(const Word& w, int n) {
    std::vector<int> out;
    for (int l : w.ls) {
        if (std::abs(l) == 1) {
            out.push_back(l > 0 ? 1 : -1);
        } else {
            check(std::abs(l) == 2, "two-generator word has letters beyond {sigma_1, delta}");
            if (l > 0) {
                for (int i = 1; i <= n - 1; ++i) out.push_back(i);
            } else {
                for (int i = n - 1; i >= 1; --i) out.push_back(-i);
            }
        }
    }
    return BraidWord(n, freely_reduce(out));
}

BraidWord random_braid_word(int n, int length, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> idx(1, n - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::vector<int> ls;
    for (int i = 0; i < length; ++i) {
        int l = idx(rng);
        ls.push_back(sgn(rng) ? l : -l);
    }
    return BraidWord(n, std::move(ls));
}

} // namespace gbg
