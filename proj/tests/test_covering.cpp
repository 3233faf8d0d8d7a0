#include <catch2/catch_amalgamated.hpp>

#include <da1/covering.hpp>
#include <da1/expr.hpp>
#include <da1/permutation.hpp>

#include "support.hpp"

using namespace da1;
using da1::testing::Rng;

TEST_CASE("profile of a pure power", "[covering]") {
    auto prof = ramification_profile(parse_poly("x^3"));
    CHECK(prof.degree == 3);
    CHECK(prof.infinity_index == 3);
    REQUIRE(prof.fibers.size() == 1);
    CHECK(prof.fibers[0].branch_value == 0);
    CHECK(prof.fibers[0].indices == std::vector<int>{3});
    CHECK(prof.fibers[0].unramified == 0);
    CHECK(uniform_ramified(prof));
    CHECK(hurwitz_check(prof));

    auto shifted = ramification_profile(parse_poly("x^3 - 3 x^2 + 3 x - 1")); // (x-1)^3
    REQUIRE(shifted.fibers.size() == 1);
    CHECK(shifted.fibers[0].branch_value == 0);
    CHECK(shifted.fibers[0].indices == std::vector<int>{3});
}

TEST_CASE("profile with two branch values", "[covering]") {
    // q = x^3 - x^2: critical points 0 and 2/3
    auto prof = ramification_profile(parse_poly("x^3 - x^2"));
    CHECK(prof.degree == 3);
    REQUIRE(prof.fibers.size() == 2);
    CHECK(prof.fibers[0].branch_value == Rational(-4, 27));
    CHECK(prof.fibers[0].indices == std::vector<int>{2});
    CHECK(prof.fibers[0].unramified == 1);
    CHECK(prof.fibers[1].branch_value == 0);
    CHECK(prof.fibers[1].indices == std::vector<int>{2});
    CHECK(prof.fibers[1].unramified == 1);
    CHECK_FALSE(uniform_ramified(prof));
    CHECK(hurwitz_check(prof));
}

TEST_CASE("double ramification over one value", "[covering]") {
    // q = x^4 - 2x^2: fiber over -1 is (x-1)^2 (x+1)^2, fiber over 0 keeps
    // two unramified sheets
    auto prof = ramification_profile(parse_poly("x^4 - 2 x^2"));
    REQUIRE(prof.fibers.size() == 2);
    CHECK(prof.fibers[0].branch_value == -1);
    CHECK(prof.fibers[0].indices == std::vector<int>{2, 2});
    CHECK(prof.fibers[0].unramified == 0);
    CHECK(prof.fibers[1].branch_value == 0);
    CHECK(prof.fibers[1].indices == std::vector<int>{2});
    CHECK(prof.fibers[1].unramified == 2);
    CHECK_FALSE(uniform_ramified(prof));
    CHECK(hurwitz_check(prof));
}

TEST_CASE("fibers always account for the whole degree", "[covering]") {
    for (const char* src :
         {"x^2", "x^3 - 3 x", "x^3 - x^2", "x^4 - 2 x^2", "x^4 - 4 x^3 + 6 x^2 - 4 x"}) {
        auto prof = ramification_profile(parse_poly(src));
        for (const auto& f : prof.fibers) {
            int total = f.unramified;
            for (int e : f.indices) total += e;
            CHECK(total == prof.degree);
        }
        CHECK(hurwitz_check(prof));
    }
}

TEST_CASE("degree one covers without ramification", "[covering]") {
    auto prof = ramification_profile(parse_poly("2 x + 5"));
    CHECK(prof.degree == 1);
    CHECK(prof.fibers.empty());
    CHECK(uniform_ramified(prof));
    CHECK(hurwitz_check(prof));
}

TEST_CASE("irrational critical points are refused", "[covering]") {
    // critical points of x^3 + 3x solve x^2 + 1 = 0
    CHECK_THROWS_AS(ramification_profile(parse_poly("x^3 + 3 x")),
                    unsupported_factorization);
    CHECK_THROWS_AS(uniform_ramified(parse_poly("x^3 + 3 x")),
                    unsupported_factorization);
    CHECK_THROWS_AS(ramification_profile(parse_poly("5")), std::invalid_argument);
}

TEST_CASE("shifted pure powers are detected exactly", "[covering]") {
    auto hit = shifted_pure_power(parse_poly("2 x^4 - 24 x^3 + 108 x^2 - 216 x + 167"));
    REQUIRE(hit.has_value()); // 2 (x-3)^4 + 5
    CHECK(hit->first == 3);
    CHECK(hit->second == 4);

    CHECK(shifted_pure_power(parse_poly("x + 7")).has_value());
    CHECK_FALSE(shifted_pure_power(parse_poly("x^3 - 3 x")).has_value());
    CHECK_FALSE(shifted_pure_power(parse_poly("4")).has_value());
}

TEST_CASE("uniform ramification characterizes pure powers", "[covering]") {
    // one direction at random: every shifted pure power is uniformly ramified
    Rng rng(801);
    auto small = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    for (int it = 0; it < 25; ++it) {
        int d = small(2, 6);
        Rational a(small(-3, 3), 1 + small(0, 2));
        Rational lead(1 + small(0, 4));
        Poly q = Poly::constant(lead) * (Poly::monomial(1) - Poly::constant(a)).pow(d) +
                 Poly::constant(Rational(small(-5, 5)));
        auto prof = ramification_profile(q);
        CHECK(uniform_ramified(prof));
        CHECK(hurwitz_check(prof));
        REQUIRE(prof.fibers.size() == 1);
        CHECK(prof.fibers[0].indices == std::vector<int>{d});
        CHECK(shifted_pure_power(q).has_value());
    }

    // and the converse wherever the critical points are rational
    for (const char* src : {"x^3 - 3 x", "x^3 - x^2", "x^4 - 2 x^2",
                            "x^4 - 4 x^3 + 4 x^2", "3 x^5 - 20 x^3"}) {
        Poly q = parse_poly(src);
        CHECK_FALSE(uniform_ramified(q));
        CHECK_FALSE(shifted_pure_power(q).has_value());
    }
}

TEST_CASE("cycle notation parsing", "[covering]") {
    Perm p = parse_cycles("(1 2 3)(4 5)", 5);
    CHECK(p == Perm{1, 2, 0, 4, 3});
    CHECK(parse_cycles("id", 4) == identity_perm(4));
    CHECK(parse_cycles("()", 3) == identity_perm(3));
    CHECK(parse_cycles("(2, 4)", 4) == Perm{0, 3, 2, 1});

    CHECK_THROWS_AS(parse_cycles("(1 6)", 5), invalid_permutation);
    CHECK_THROWS_AS(parse_cycles("(1 1)", 5), invalid_permutation);
    CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 5), invalid_permutation);
    CHECK_THROWS_AS(parse_cycles("1 2", 5), invalid_permutation);
    CHECK_THROWS_AS(parse_cycles("", 5), invalid_permutation);
    CHECK_THROWS_AS(parse_cycles("(1 2", 5), invalid_permutation);
    CHECK_THROWS_AS(parse_cycles("(1 2)", 12), invalid_permutation);
}

TEST_CASE("subgroup order and transposition content", "[covering]") {
    auto c3 = subgroup_report({"(1 2 3)"}, 3);
    CHECK(c3.order == 3);
    CHECK_FALSE(c3.has_transposition);
    CHECK(sn_uniform({"(1 2 3)"}, 3));

    auto s3 = subgroup_report({"(1 2 3)", "(1 2)"}, 3);
    CHECK(s3.order == 6);
    CHECK(s3.has_transposition);
    CHECK_FALSE(sn_uniform({"(1 2)"}, 3));

    // A4 contains double transpositions but no plain transposition
    auto a4 = subgroup_report({"(1 2 3)", "(2 3 4)"}, 4);
    CHECK(a4.order == 12);
    CHECK_FALSE(a4.has_transposition);

    // full symmetric group from a cycle and a transposition
    auto s5 = subgroup_report({"(1 2 3 4 5)", "(1 2)"}, 5);
    CHECK(s5.order == 120);
    CHECK(s5.has_transposition);

    auto trivial = subgroup_report({}, 4);
    CHECK(trivial.order == 1);
    CHECK_FALSE(trivial.has_transposition);
    CHECK(sn_uniform({}, 5));
}

TEST_CASE("transposition content agrees with direct search", "[covering]") {
    Rng rng(802);
    auto small = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    for (int it = 0; it < 40; ++it) {
        int n = small(3, 5);
        // random generators as products of random swaps
        std::vector<Perm> gens;
        for (int g = 0; g < 2; ++g) {
            Perm p = identity_perm(n);
            for (int s = small(0, 3); s > 0; --s) {
                int i = small(0, n - 1), j = small(0, n - 1);
                std::swap(p[i], p[j]);
            }
            gens.push_back(p);
        }
        auto group = group_closure(gens, n);
        bool direct = false;
        for (const auto& p : group) {
            int moved = 0;
            for (int i = 0; i < n; ++i)
                if (p[i] != i) ++moved;
            if (moved == 2) direct = true;
        }
        bool reported = false;
        for (const auto& p : group)
            if (is_transposition(p)) reported = true;
        CHECK(direct == reported);
    }
}
