#include "doctest.h"

#include <random>

#include "gbg/presentation.hpp"

using namespace gbg;

TEST_CASE("free reduction") {
    CHECK(free_reduce({1, -1}).empty());
    CHECK(free_reduce({}).empty());
    CHECK(free_reduce({1, 2, -2, 1}).ls == std::vector<int>{1, 1});
    // idempotent and length-nonincreasing
    Word w = free_reduce({1, 2, -2, -1, 3});
    CHECK(free_reduce(w.ls).ls == w.ls);
    CHECK(w.length() <= 5);
}

TEST_CASE("cyclic canonical forms") {
    Word a(std::vector<int>{1, 2, 3});
    Word b(std::vector<int>{2, 3, 1});
    CHECK(cyclically_equal(a, b));
    Word c = a.inverse();
    CHECK(cyclically_equal(a, c, true));
    CHECK(!cyclically_equal(a, c, false));
    Word d(std::vector<int>{1, 2, -3});
    CHECK(!cyclically_equal(a, d));
}

TEST_CASE("tietze removes trivial relators and kills lone generators") {
    Presentation p;
    p.gens = {"a", "b"};
    p.relators = {Word(std::vector<int>{2})}; // <a, b | b>
    TietzeResult r = tietze_simplify(p);
    CHECK(r.p.gens == std::vector<std::string>{"a"});
    CHECK(r.p.relators.empty());
}

TEST_CASE("tietze fixes free presentations") {
    Presentation p;
    p.gens = {"x", "y", "z"};
    TietzeResult r = tietze_simplify(p);
    CHECK(r.p.gens.size() == 3);
    CHECK(r.p.relators.empty());
}

TEST_CASE("abelianization basics") {
    SUBCASE("free of rank r") {
        Presentation p;
        p.gens = {"a", "b", "c"};
        Abelianization ab = abelianization(p);
        CHECK(ab.free_rank == 3);
        CHECK(ab.torsion.empty());
    }
    SUBCASE("Z/2") {
        Presentation p;
        p.gens = {"a"};
        p.relators = {Word(std::vector<int>{1, 1})};
        Abelianization ab = abelianization(p);
        CHECK(ab.free_rank == 0);
        REQUIRE(ab.torsion.size() == 1);
        CHECK(ab.torsion[0] == 2);
    }
    SUBCASE("Z/2 + Z/4 invariant factors") {
        // <a,b | a^2 b^2, a^-2 b^2> has relation matrix [[2,2],[-2,2]],
        // invariant factors 2, 4
        Presentation p;
        p.gens = {"a", "b"};
        p.relators = {Word(std::vector<int>{1, 1, 2, 2}), Word(std::vector<int>{-1, -1, 2, 2})};
        Abelianization ab = abelianization(p);
        CHECK(ab.free_rank == 0);
        REQUIRE(ab.torsion.size() == 2);
        CHECK(ab.torsion[0] == 2);
        CHECK(ab.torsion[1] == 4);
    }
}

TEST_CASE("tietze and trivial quotient preserve abelianization (seeded property)") {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 100; ++trial) {
        int G = 2 + static_cast<int>(rng() % 5);
        int R = 1 + static_cast<int>(rng() % 6);
        Presentation p;
        for (int i = 0; i < G; ++i) p.gens.push_back("g" + std::to_string(i));
        for (int r = 0; r < R; ++r) {
            int L = 1 + static_cast<int>(rng() % 10);
            std::vector<int> ls;
            for (int i = 0; i < L; ++i) {
                int g = 1 + static_cast<int>(rng() % G);
                ls.push_back((rng() & 1) ? g : -g);
            }
            p.relators.push_back(free_reduce(std::move(ls)));
        }
        Abelianization before = abelianization(p);
        TietzeResult t = tietze_simplify(p);
        CHECK(abelianization(t.p) == before);
        TietzeResult q = quotient_and_identify(p, {}, {});
        CHECK(abelianization(q.p) == before);
    }
}

TEST_CASE("quotient kills and identifies") {
    Presentation p;
    p.gens = {"a", "b", "c"};
    p.relators = {Word(std::vector<int>{1, 2, -1, -2})};
    SUBCASE("killing a generator removes its letters") {
        TietzeResult r = quotient_and_identify(p, {"b"}, {}, -1, {"a", "c"});
        CHECK(r.p.find_gen("b") == -1);
    }
    SUBCASE("identification merges to one name") {
        TietzeResult r = quotient_and_identify(p, {}, {{"a", "b"}}, -1, {"a", "c"});
        CHECK(r.p.find_gen("b") == -1);
        CHECK(r.p.find_gen("a") >= 0);
        // [a,b] becomes [a,a] = trivial
        CHECK(r.p.relators.empty());
    }
    SUBCASE("unknown names rejected") {
        CHECK_THROWS_AS(quotient_and_identify(p, {"zz"}, {}), input_error);
    }
}

TEST_CASE("smith normal form handles larger entries exactly") {
    // matrix with an invariant factor that would overflow naive pivoting on
    // small integer types
    std::vector<std::vector<mpz_class>> m = {
        {mpz_class("1000000007"), 0},
        {0, mpz_class("1000000009")},
    };
    auto d = smith_normal_form(m);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 1); // the two primes are coprime: 1, p*q
    CHECK(d[1] == mpz_class("1000000007") * mpz_class("1000000009"));
}
