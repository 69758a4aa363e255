#include "lgcoh/homalg.hpp"

#include <sstream>

namespace lgcoh {

BundleExpr dual_expr(const BundleExpr& a) {
    return BundleExpr(a.sum.dualized(), a.label.empty() ? "" : a.label + "*");
}

BundleExpr twist_expr(const BundleExpr& a, int i) {
    if (i == 0) return a;
    std::string name;
    if (!a.label.empty()) name = a.label + "(" + std::to_string(i) + ")";
    return BundleExpr(a.sum.twisted(i), std::move(name));
}

GradedSpRep hom_graded(const BundleExpr& a, const BundleExpr& b) {
    require_same_rank(a.rank(), b.rank(), "hom_graded");
    GradedSpRep out(a.rank());
    for (const auto& [wa, ma] : a.sum.terms()) {
        const GLWeight wad = dual_weight(wa);
        for (const auto& [wb, mb] : b.sum.terms())
            out.add(cohomology_expr(lr_general(wad, wb)), ma * mb);
    }
    return out;
}

Int euler_form(const BundleExpr& a, const BundleExpr& b) {
    Int chi = 0;
    for (const auto& [d, dim] : graded_dim(hom_graded(a, b))) chi += (d % 2 == 0) ? dim : -dim;
    return chi;
}

SerreReport serre_check(const BundleExpr& a, const BundleExpr& b) {
    const int n = a.rank();
    require_same_rank(n, b.rank(), "serre_check");
    const int N = lg_dim(n);
    const auto fwd = graded_dim(hom_graded(a, b));
    const auto bwd = graded_dim(hom_graded(b, twist_expr(a, -n - 1)));

    SerreReport rep{true, {}};
    for (int i = 0; i <= N; ++i) {
        auto fi = fwd.find(i);
        auto bi = bwd.find(N - i);
        const Int df = fi == fwd.end() ? Int(0) : fi->second;
        const Int db = bi == bwd.end() ? Int(0) : bi->second;
        if (df != db) {
            rep.ok = false;
            std::ostringstream os;
            os << "hom^" << i << "(" << a.display() << "," << b.display() << ") = " << df.str()
               << " but hom^" << (N - i) << "(" << b.display() << "," << a.display() << "(-"
               << (n + 1) << ")) = " << db.str();
            rep.mismatches.push_back(os.str());
        }
    }
    return rep;
}

}  // namespace lgcoh
