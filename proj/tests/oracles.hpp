#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include "lgcoh/weights.hpp"

#include <random>
#include <vector>

namespace lgcoh::testing {

inline Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

/// dim V(omega_k) for Sp(2n), independent route: C(2n,k) - C(2n,k-2).
inline Int fundamental_sp_dim(int k, int n) { return binom(2 * n, k) - binom(2 * n, k - 2); }

/// Counts semistandard tableaux of partition shape with entries <= n by
/// direct backtracking (no dimension formula).
inline long long ssyt_count(const std::vector<int>& shape, int n) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(shape.size()); ++r)
        for (int c = 0; c < shape[static_cast<size_t>(r)]; ++c) cells.emplace_back(r, c);
    if (cells.empty()) return 1;
    std::vector<std::vector<int>> grid(shape.size(),
                                       std::vector<int>(static_cast<size_t>(shape[0]), 0));
    long long count = 0;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[static_cast<size_t>(r)][static_cast<size_t>(c) - 1]);
        if (r > 0) lo = std::max(lo, grid[static_cast<size_t>(r) - 1][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= n; ++v) {
            grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
    return count;
}

/// Random weakly decreasing weight of rank n, entries in [lo,hi], with the
/// number of boxes above the bottom entry bounded by max_boxes.
inline GLWeight random_weight(std::mt19937& rng, int n, int lo, int hi, int max_boxes) {
    for (;;) {
        std::vector<int> e(static_cast<size_t>(n));
        std::uniform_int_distribution<int> d(lo, hi);
        for (int& x : e) x = d(rng);
        std::sort(e.begin(), e.end(), std::greater<int>());
        int boxes = 0;
        for (int x : e) boxes += x - e.back();
        if (boxes <= max_boxes) return GLWeight(std::move(e));
    }
}

inline AmbientVector random_regular_vector(std::mt19937& rng, int n, int bound) {
    for (;;) {
        std::vector<int> e(static_cast<size_t>(n));
        std::uniform_int_distribution<int> d(-bound, bound);
        for (int& x : e) x = d(rng);
        AmbientVector v{e};
        if (regularity(v).is_regular()) return v;
    }
}

}  // namespace lgcoh::testing
