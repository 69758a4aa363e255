#include "lgcoh/lr.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace lgcoh;

TEST_CASE("lr_partitions basics") {
    RepSum s = lr_partitions({1}, {1}, 2);
    CHECK(s.terms().size() == 2);
    CHECK(s.mult_of(GLWeight({2, 0})) == 1);
    CHECK(s.mult_of(GLWeight({1, 1})) == 1);

    RepSum t = lr_partitions({1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, 5);
    CHECK(t.terms().size() == 2);
    CHECK(t.mult_of(GLWeight({2, 1, 0, 0, 0})) == 1);
    CHECK(t.mult_of(GLWeight({1, 1, 1, 0, 0})) == 1);

    // rank truncation forces a single term
    RepSum u = lr_partitions({1, 1}, {1, 1}, 2);
    CHECK(u.terms().size() == 1);
    CHECK(u.mult_of(GLWeight({2, 2})) == 1);

    CHECK_THROWS_AS(lr_partitions({1, -1}, {1}, 3), std::invalid_argument);
}

TEST_CASE("lr_general") {
    // Q* (x) Q = adjoint + trivial
    RepSum s = lr_general(GLWeight({0, 0, 0, 0, -1}), GLWeight({1, 0, 0, 0, 0}));
    CHECK(s.terms().size() == 2);
    CHECK(s.mult_of(GLWeight({1, 0, 0, 0, -1})) == 1);
    CHECK(s.mult_of(GLWeight({0, 0, 0, 0, 0})) == 1);
    CHECK(s.total_dim() == 25);

    // unit of the tensor product
    GLWeight lam({3, 1, 0, 0, -2});
    CHECK(lr_general(GLWeight({0, 0, 0, 0, 0}), lam) == RepSum::of(lam));

    RepSum t = lr_general(GLWeight({0, 0, -1, -1, -3}), GLWeight({1, 0, 0, 0, 0}));
    CHECK(t.terms().size() == 3);
    CHECK(t.mult_of(GLWeight({1, 0, -1, -1, -3})) == 1);
    CHECK(t.mult_of(GLWeight({0, 0, 0, -1, -3})) == 1);
    CHECK(t.mult_of(GLWeight({0, 0, -1, -1, -2})) == 1);

    CHECK_THROWS_AS(lr_general(GLWeight({1, 0}), GLWeight({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("lr properties") {
    std::mt19937 rng(101);
    for (int it = 0; it < 60; ++it) {
        const int n = 2 + it % 4;
        GLWeight a = testing::random_weight(rng, n, -3, 4, 6);
        GLWeight b = testing::random_weight(rng, n, -3, 4, 6);

        RepSum ab = lr_general(a, b);
        CHECK(ab == lr_general(b, a));
        CHECK(gl_dim(a) * gl_dim(b) == ab.total_dim());
        CHECK(ab.dualized() == lr_general(dual_weight(a), dual_weight(b)));
        CHECK(lr_general(twist(a, 2), twist(b, -1)) == ab.twisted(1));
    }
}

TEST_CASE("pieri") {
    CHECK(pieri(GLWeight({0, 0, 0, 0, 0}), 2) == RepSum::of(GLWeight({1, 1, 0, 0, 0})));

    RepSum s = pieri(GLWeight({1, 0, 0, 0, 0}), 1);
    CHECK(s.mult_of(GLWeight({2, 0, 0, 0, 0})) == 1);
    CHECK(s.mult_of(GLWeight({1, 1, 0, 0, 0})) == 1);

    RepSum t = pieri(GLWeight({1, 1, 0, 0, 0}), 1);
    CHECK(t.mult_of(GLWeight({2, 1, 0, 0, 0})) == 1);
    CHECK(t.mult_of(GLWeight({1, 1, 1, 0, 0})) == 1);

    CHECK_THROWS_AS(pieri(GLWeight({1, 0, 0}), 0), std::invalid_argument);
    CHECK_THROWS_AS(pieri(GLWeight({1, 0, 0}), 4), std::invalid_argument);

    std::mt19937 rng(55);
    for (int it = 0; it < 40; ++it) {
        const int n = 2 + it % 5;
        GLWeight a = testing::random_weight(rng, n, -2, 3, 6);
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        std::vector<int> col(static_cast<size_t>(n), 0);
        std::fill(col.begin(), col.begin() + k, 1);
        CHECK(pieri(a, k) == lr_general(a, GLWeight(std::move(col))));
    }
}

TEST_CASE("repsum iteration order is lexicographically decreasing") {
    RepSum s = lr_general(GLWeight({1, 0, 0, 0, 0}), GLWeight({1, 1, 0, 0, 0}));
    std::vector<GLWeight> order;
    for (const auto& [w, m] : s.terms()) order.push_back(w);
    REQUIRE(order.size() == 2);
    CHECK(order[0] == GLWeight({2, 1, 0, 0, 0}));
    CHECK(order[1] == GLWeight({1, 1, 1, 0, 0}));
}

TEST_CASE("cache toggle changes nothing observable") {
    GLWeight a({2, 1, 0, -1});
    GLWeight b({1, 1, 0, 0});
    RepSum with_cache = lr_general(a, b);
    set_lr_cache_enabled(false);
    RepSum without_cache = lr_general(a, b);
    set_lr_cache_enabled(true);
    CHECK(with_cache == without_cache);
}
