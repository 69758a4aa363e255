#pragma once

#include "lgcoh/base.hpp"

#include <compare>
#include <random>
#include <string>
#include <vector>

namespace lgcoh {

/// Dominant GL(n) weight: a weakly decreasing integer sequence of length n.
/// Entries may be negative (duals and twists are the common case).
class GLWeight {
public:
    explicit GLWeight(std::vector<int> entries);

    int rank() const { return static_cast<int>(e_.size()); }
    const std::vector<int>& entries() const { return e_; }
    int at(int i) const { return e_.at(static_cast<size_t>(i)); }

    auto operator<=>(const GLWeight&) const = default;

    std::string str() const;

private:
    std::vector<int> e_;
};

/// Arbitrary point of the weight lattice (unconstrained order/sign).
struct AmbientVector {
    std::vector<int> entries;

    int rank() const { return static_cast<int>(entries.size()); }
    std::string str() const;
};

/// Dominant Sp(2n) weight: weakly decreasing, last entry >= 0.
class SpWeight {
public:
    SpWeight() = default;
    explicit SpWeight(std::vector<int> entries);

    int rank() const { return static_cast<int>(e_.size()); }
    const std::vector<int>& entries() const { return e_; }
    int at(int i) const { return e_.at(static_cast<size_t>(i)); }
    bool is_zero() const;

    auto operator<=>(const SpWeight&) const = default;

    std::string str() const;

private:
    std::vector<int> e_;
};

/// Fundamental Sp(2n) weight omega_i: i ones followed by zeros.
SpWeight omega(int i, int n);

/// Result of the singularity/dominance test on a lattice point.
class Regularity {
public:
    static Regularity singular();
    static Regularity regular(int length, SpWeight dominant);

    bool is_regular() const { return regular_; }
    int length() const;
    const SpWeight& dominant() const;

private:
    Regularity() = default;
    bool regular_ = false;
    int length_ = 0;
    SpWeight dominant_;
};

/// Half-sum of the positive roots of Sp(2n): (n, n-1, ..., 1).
AmbientVector rho(int n);

/// (a_1,...,a_n) -> (-a_n,...,-a_1). Involutive.
GLWeight dual_weight(const GLWeight& w);

/// Adds i to every entry (tensoring with O(i)).
GLWeight twist(const GLWeight& w, int i);

AmbientVector add(const GLWeight& w, const AmbientVector& v);

/// Singular iff some entry is zero or two entries agree in absolute value.
/// For regular vectors also reports the minimal Weyl length and the dominant
/// representative, via the closed form
///   l(v) = #{i : v_i < 0} + #{i<j : v_i + v_j < 0} + #{i<j : v_i - v_j < 0}.
Regularity regularity(const AmbientVector& v);

/// Independent length oracle: straighten v by simple reflections of C_n
/// (adjacent swap when v_i < v_{i+1}, sign flip when v_n < 0), counting steps.
/// Rejects singular input. When an RNG is supplied the applicable reflection is
/// chosen at random; the step count does not depend on the choices.
int reflection_length_oracle(const AmbientVector& v);
int reflection_length_oracle(const AmbientVector& v, std::mt19937& rng);

/// Weyl dimension formula for Sp(2n). Exact; rejects non-dominant input.
Int sp_dim(const SpWeight& mu);

/// Weyl dimension formula for GL(n). Exact.
Int gl_dim(const GLWeight& w);

/// Parses "(3,1,1,0,0)". Rejects non-monotone input with a diagnostic naming
/// the violating index.
GLWeight parse_gl_weight(const std::string& text);

void require_same_rank(int a, int b, const char* what);

}  // namespace lgcoh
