#pragma once

#include "lgcoh/bott.hpp"

#include <string>
#include <vector>

namespace lgcoh {

/// A direct sum of Schur bundles with an optional display name.
struct BundleExpr {
    RepSum sum;
    std::string label;

    explicit BundleExpr(RepSum s, std::string name = "") : sum(std::move(s)), label(std::move(name)) {}

    static BundleExpr of(const GLWeight& w, std::string name = "") {
        return BundleExpr(RepSum::of(w), std::move(name));
    }

    int rank() const { return sum.rank(); }
    bool operator==(const BundleExpr& o) const { return sum == o.sum; }
    std::string display() const { return label.empty() ? sum.str() : label; }
};

BundleExpr dual_expr(const BundleExpr& a);
BundleExpr twist_expr(const BundleExpr& a, int i);

/// Hom^*(A,B) = H^*(A^dual (x) B), bilinear over sums.
GradedSpRep hom_graded(const BundleExpr& a, const BundleExpr& b);

/// Euler form: alternating sum of total Hom dimensions.
Int euler_form(const BundleExpr& a, const BundleExpr& b);

struct SerreReport {
    bool ok;
    std::vector<std::string> mismatches;
};

/// Checks dim Hom^i(A,B) = dim Hom^{N-i}(B, A(-n-1)) for all i, N = n(n+1)/2.
SerreReport serre_check(const BundleExpr& a, const BundleExpr& b);

}  // namespace lgcoh
