#include "lgcoh/weights.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace lgcoh;

TEST_CASE("rho") {
    CHECK(rho(4).entries == std::vector<int>{4, 3, 2, 1});
    CHECK(rho(1).entries == std::vector<int>{1});
    CHECK(rho(5).entries == std::vector<int>{5, 4, 3, 2, 1});
    CHECK_THROWS_AS(rho(0), std::invalid_argument);
}

TEST_CASE("weight validation names the violating index") {
    CHECK_THROWS_WITH_AS(GLWeight({1, 2}), doctest::Contains("index 1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(GLWeight({3, 3, 1, 2}), doctest::Contains("index 3"),
                         std::invalid_argument);
}

TEST_CASE("dual_weight") {
    CHECK(dual_weight(GLWeight({1, 0, 0, 0})) == GLWeight({0, 0, 0, -1}));
    CHECK(dual_weight(GLWeight({0, 0, 0, 0})) == GLWeight({0, 0, 0, 0}));
    CHECK(dual_weight(GLWeight({3, 1, 1, 0, 0})) == GLWeight({0, 0, -1, -1, -3}));
    // the same dual written as a twist of a partition shape
    CHECK(dual_weight(GLWeight({3, 1, 1, 0, 0})) == twist(GLWeight({3, 3, 2, 2, 0}), -3));

    std::mt19937 rng(7);
    for (int it = 0; it < 50; ++it) {
        GLWeight w = testing::random_weight(rng, 2 + it % 5, -4, 4, 10);
        CHECK(dual_weight(dual_weight(w)) == w);
        CHECK(dual_weight(twist(w, 3)) == twist(dual_weight(w), -3));
    }
}

TEST_CASE("twist") {
    CHECK(twist(GLWeight({1, 1, 0, 0}), 1) == GLWeight({2, 2, 1, 1}));
    CHECK(twist(GLWeight({0, 0, 0, 0}), -5) == GLWeight({-5, -5, -5, -5}));
    CHECK(twist(GLWeight({1, 0, 0, 0, 0}), 3) == GLWeight({4, 3, 3, 3, 3}));
    CHECK(twist(twist(GLWeight({2, 1, 0}), 4), -4) == GLWeight({2, 1, 0}));
}

TEST_CASE("regularity") {
    CHECK_FALSE(regularity(AmbientVector{{3, 2, 1, 0}}).is_regular());
    CHECK_FALSE(regularity(AmbientVector{{3, -3, 2, 1}}).is_regular());

    auto r = regularity(AmbientVector{{4, 3, 2, 1}});
    REQUIRE(r.is_regular());
    CHECK(r.length() == 0);
    CHECK(r.dominant().entries() == std::vector<int>{4, 3, 2, 1});

    auto r2 = regularity(AmbientVector{{5, 4, 3, 2, -1}});
    REQUIRE(r2.is_regular());
    CHECK(r2.length() == 1);
    CHECK(r2.dominant().entries() == std::vector<int>{5, 4, 3, 2, 1});
}

TEST_CASE("regularity is signed-permutation invariant") {
    std::mt19937 rng(11);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::vector<int> e(static_cast<size_t>(n));
        std::uniform_int_distribution<int> d(-6, 6);
        for (int& x : e) x = d(rng);
        AmbientVector v{e};
        std::shuffle(e.begin(), e.end(), rng);
        for (int& x : e)
            if (rng() % 2) x = -x;
        AmbientVector w{e};
        auto rv = regularity(v);
        auto rw = regularity(w);
        CHECK(rv.is_regular() == rw.is_regular());
        if (rv.is_regular()) CHECK(rv.dominant() == rw.dominant());
    }
}

TEST_CASE("reflection length oracle") {
    CHECK(reflection_length_oracle(AmbientVector{{4, 3, 2, 1}}) == 0);
    CHECK(reflection_length_oracle(AmbientVector{{5, 4, 3, 2, -1}}) == 1);
    CHECK(reflection_length_oracle(AmbientVector{{5, 4, 3, 1, -2}}) == 2);
    CHECK_THROWS_AS(reflection_length_oracle(AmbientVector{{3, 2, 1, 0}}),
                    std::invalid_argument);

    // step count does not depend on the order of applicable reflections
    std::mt19937 rng(3);
    for (int it = 0; it < 100; ++it) {
        AmbientVector v = testing::random_regular_vector(rng, 2 + it % 7, 9);
        int expected = reflection_length_oracle(v);
        for (unsigned seed = 0; seed < 4; ++seed) {
            std::mt19937 order(seed);
            CHECK(reflection_length_oracle(v, order) == expected);
        }
        CHECK(expected == regularity(v).length());
    }
}

TEST_CASE("length formula evaluates all three root families") {
    // mixed-order vector with v_i - v_j < 0 contributions
    auto r = regularity(AmbientVector{{1, 5, -2, 3}});
    REQUIRE(r.is_regular());
    CHECK(r.length() == reflection_length_oracle(AmbientVector{{1, 5, -2, 3}}));
}

TEST_CASE("sp_dim") {
    CHECK(sp_dim(SpWeight({0, 0, 0})) == 1);
    CHECK(sp_dim(SpWeight({0, 0, 0, 0, 0})) == 1);
    CHECK(sp_dim(omega(1, 5)) == 10);
    CHECK(sp_dim(omega(2, 5)) == 44);
    CHECK_THROWS_AS(SpWeight({1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(SpWeight({1, 0, -1}), std::invalid_argument);

    for (int n : {3, 4, 5, 6})
        for (int k = 1; k <= n; ++k)
            CHECK(sp_dim(omega(k, n)) == testing::fundamental_sp_dim(k, n));

    // S^2 V = V(2 omega_1) has dimension C(2n+1, 2)
    CHECK(sp_dim(SpWeight({2, 0, 0, 0, 0})) == testing::binom(11, 2));
}

TEST_CASE("gl_dim") {
    CHECK(gl_dim(GLWeight({0, 0, 0, 0})) == 1);
    CHECK(gl_dim(GLWeight({1, 0, 0, 0, 0})) == 5);
    CHECK(gl_dim(GLWeight({2, 1, 0, 0, 0})) == 40);
    CHECK(gl_dim(GLWeight({2, 1, 0, 0, 0})) == testing::ssyt_count({2, 1}, 5));
    CHECK(gl_dim(GLWeight({3, 1, 1, 0, 0})) == testing::ssyt_count({3, 1, 1}, 5));

    std::mt19937 rng(23);
    for (int it = 0; it < 50; ++it) {
        GLWeight w = testing::random_weight(rng, 2 + it % 5, -3, 4, 8);
        CHECK(gl_dim(w) == gl_dim(twist(w, 2)));  // translation invariance
        CHECK(gl_dim(w) == gl_dim(dual_weight(w)));
    }
}

TEST_CASE("weight text format") {
    CHECK(parse_gl_weight("(3,1,1,0,0)") == GLWeight({3, 1, 1, 0, 0}));
    CHECK(parse_gl_weight(" ( 2 , -1 ) ") == GLWeight({2, -1}));
    CHECK_THROWS_WITH_AS(parse_gl_weight("(1,2)"), doctest::Contains("index 1"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_gl_weight("3,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gl_weight("(3,1) junk"), std::invalid_argument);
}
