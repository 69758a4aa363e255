#pragma once

#include "lgcoh/lr.hpp"

#include <map>

namespace lgcoh {

/// Cohomology of a homogeneous bundle on LG(n,2n) as a graded Sp(2n)
/// representation: per degree, a multiset of dominant Sp weights. The zero
/// object is the empty map; at most one degree is nonzero per irreducible
/// input summand.
class GradedSpRep {
public:
    using Component = std::map<SpWeight, long long, std::greater<SpWeight>>;
    using Components = std::map<int, Component>;

    explicit GradedSpRep(int rank);

    int rank() const { return n_; }
    bool is_zero() const { return comps_.empty(); }
    const Components& components() const { return comps_; }

    void add(int degree, const SpWeight& w, long long mult);
    void add(const GradedSpRep& other, long long scale = 1);

    long long mult_of(int degree, const SpWeight& w) const;

    bool operator==(const GradedSpRep&) const = default;
    std::string str() const;

private:
    int n_;
    Components comps_;
};

/// Bott's algorithm for a single Schur bundle S^w Q: zero when w+rho is
/// singular, otherwise one irreducible in the degree given by the minimal
/// Weyl length.
GradedSpRep cohomology_weight(const GLWeight& w);

/// Additive extension over a direct sum.
GradedSpRep cohomology_expr(const RepSum& e);

/// Total dimension per degree (zero degrees omitted).
std::map<int, Int> graded_dim(const GradedSpRep& r);

/// dim LG(n,2n) = n(n+1)/2.
int lg_dim(int n);

}  // namespace lgcoh
