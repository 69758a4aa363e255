#pragma once

#include "lgcoh/weights.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace lgcoh {

/// Finite multiset of GL(n) weights with positive multiplicities: a direct sum
/// of Schur bundles. The empty sum is the zero object. Terms iterate in
/// lexicographically decreasing weight order.
class RepSum {
public:
    using Terms = std::map<GLWeight, long long, std::greater<GLWeight>>;

    explicit RepSum(int rank);
    static RepSum of(const GLWeight& w, long long mult = 1);

    int rank() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add(const GLWeight& w, long long mult = 1);
    void add(const RepSum& other, long long scale = 1);

    long long mult_of(const GLWeight& w) const;
    long long total_mult() const;
    Int total_dim() const;

    RepSum twisted(int i) const;
    RepSum dualized() const;

    bool operator==(const RepSum&) const = default;
    std::string str() const;

private:
    int n_;
    Terms terms_;
};

/// Signed formal sum of GL(n) weights (virtual K-class). Appears only as
/// mutation output.
class VirtualSum {
public:
    using Terms = std::map<GLWeight, long long, std::greater<GLWeight>>;

    explicit VirtualSum(int rank);
    VirtualSum(const RepSum& s);  // NOLINT: intentional promotion

    int rank() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add(const GLWeight& w, long long coeff);
    void add(const VirtualSum& other, long long scale = 1);

    bool operator==(const VirtualSum&) const = default;
    std::string str() const;

private:
    int n_;
    Terms terms_;
};

/// Littlewood-Richardson decomposition for partition arguments (nonnegative
/// weakly decreasing), truncated to at most n rows during enumeration.
RepSum lr_partitions(const std::vector<int>& lambda, const std::vector<int>& mu, int n);

/// LR decomposition of S^a Q (x) S^b Q for arbitrary GL(n) weights, by
/// shifting both factors to partitions and shifting the result back.
RepSum lr_general(const GLWeight& a, const GLWeight& b);

/// Tensoring with wedge^k Q by adding a vertical strip. Independent of the LR
/// enumeration; used as a cross-check oracle.
RepSum pieri(const GLWeight& a, int k);

/// Bilinear extension of lr_general to sums.
RepSum tensor(const RepSum& a, const RepSum& b);

/// Memoization control (enabled by default; results never change).
void set_lr_cache_enabled(bool enabled);
void clear_lr_cache();

}  // namespace lgcoh
