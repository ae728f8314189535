#include "doctest.h"

#include "gbg/braid.hpp"

using namespace gbg;

TEST_CASE("braiding and commutation relations are trivial") {
    CHECK(is_trivial_braid(BraidWord(3, {1, 2, 1, -2, -1, -2})));
    CHECK(is_trivial_braid(BraidWord(4, {1, 3, -1, -3})));
    CHECK(!is_trivial_braid(BraidWord(2, {1, 1})));
    CHECK(!is_trivial_braid(BraidWord(3, {1, 2})));
    CHECK(is_trivial_braid(BraidWord(2, {})));
}

TEST_CASE("two-generator relations of the plane braid group") {
    // sigma1 delta sigma1 delta^-1 sigma1 = delta sigma1 delta^-1 sigma1 delta sigma1 delta^-1
    for (int n = 3; n <= 6; ++n) {
        auto D = [&](int sign) {
            std::vector<int> out;
            if (sign > 0)
                for (int i = 1; i <= n - 1; ++i) out.push_back(i);
            else
                for (int i = n - 1; i >= 1; --i) out.push_back(-i);
            return out;
        };
        std::vector<int> w;
        auto app = [&](std::vector<int> x) { w.insert(w.end(), x.begin(), x.end()); };
        app({1});
        app(D(1));
        app({1});
        app(D(-1));
        app({1});
        app(D(1));
        app({-1});
        app(D(-1));
        app({-1});
        app(D(1));
        app({-1});
        app(D(-1));
        CHECK(is_trivial_braid(BraidWord(n, w)));
    }
}

TEST_CASE("permutation images") {
    CHECK(permutation_image(BraidWord(3, {})) == std::vector<int>{0, 1, 2});
    CHECK(permutation_image(BraidWord(2, {1})) == std::vector<int>{1, 0});
    // delta = sigma1 sigma2 is a 3-cycle
    CHECK(permutation_image(BraidWord(3, {1, 2})) == std::vector<int>{1, 2, 0});
}

TEST_CASE("w w^-1 is trivial for seeded random words") {
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + trial % 4; // up to 5 strands
        BraidWord w = random_braid_word(n, 6 + trial % 25, 777000 + trial);
        CHECK(is_trivial_braid(w.concat(w.inverse())));
    }
}

TEST_CASE("two-generator rewrite round-trips") {
    CHECK(artin_two_generator_rewrite(BraidWord(4, {1})).ls == std::vector<int>{1});
    CHECK(artin_two_generator_rewrite(BraidWord(4, {2})).ls == std::vector<int>{2, 1, -2});
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + trial % 3;
        BraidWord w = random_braid_word(n, 4 + trial % 12, 424200 + trial);
        Word tw = artin_two_generator_rewrite(w);
        BraidWord back = expand_two_generator(tw, n);
        CHECK(is_trivial_braid(w.concat(back.inverse())));
    }
}

TEST_CASE("triviality implies identity permutation and zero exponent sum") {
    for (int trial = 0; trial < 50; ++trial) {
        BraidWord w = random_braid_word(4, 10, 999 + trial);
        BraidWord ww = w.concat(w.inverse());
        if (is_trivial_braid(ww)) {
            long long eps = 0;
            for (int l : ww.letters) eps += l > 0 ? 1 : -1;
            CHECK(eps == 0);
            auto per = permutation_image(ww);
            for (int i = 0; i < ww.n; ++i) CHECK(per[i] == i);
        }
    }
}
