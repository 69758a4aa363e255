#include "lgcoh/objects.hpp"

#include <mutex>
#include <sstream>

namespace lgcoh {

int FilteredObject::rank() const {
    if (pieces.empty()) throw Error("filtered object '" + name + "' has no pieces");
    return pieces.front().rank();
}

RepSum FilteredObject::k_class() const {
    RepSum out(rank());
    for (const auto& p : pieces) out.add(p.sum);
    return out;
}

FilteredObject FilteredObject::twisted(int i) const {
    if (i == 0) return *this;
    FilteredObject out;
    // Combine an existing twist suffix rather than stacking them.
    std::string base = name;
    int total = i;
    if (!base.empty() && base.back() == ')') {
        auto open = base.rfind('(');
        if (open != std::string::npos) {
            try {
                total += std::stoi(base.substr(open + 1, base.size() - open - 2));
                base = base.substr(0, open);
            } catch (const std::exception&) {
            }
        }
    }
    out.name = total == 0 ? base : base + "(" + std::to_string(total) + ")";
    for (const auto& p : pieces) out.pieces.push_back(twist_expr(p, i));
    out.provenance = provenance;
    return out;
}

bool FilteredObject::is_line_of_schur() const {
    return pieces.size() == 1 && pieces.front().sum.terms().size() == 1 &&
           pieces.front().sum.terms().begin()->second == 1;
}

const char* to_string(CertStatus s) {
    switch (s) {
        case CertStatus::CertifiedVanishing: return "CERTIFIED_VANISHING";
        case CertStatus::CertifiedExact: return "CERTIFIED_EXACT";
        case CertStatus::Bounded: return "BOUNDED";
        case CertStatus::PaperAsserted: return "PAPER_ASSERTED";
    }
    return "?";
}

HomBoundReport hom_bounds(const FilteredObject& a, const FilteredObject& b) {
    require_same_rank(a.rank(), b.rank(), "hom_bounds");
    HomBoundReport rep;
    Int euler = 0;
    for (const auto& pa : a.pieces) {
        for (const auto& pb : b.pieces) {
            for (const auto& [d, dim] : graded_dim(hom_graded(pa, pb))) {
                rep.upper[d] += dim;
                euler += (d % 2 == 0) ? dim : -dim;
            }
        }
    }
    rep.euler = euler;
    if (rep.upper.empty())
        rep.status = CertStatus::CertifiedVanishing;
    else if (a.pieces.size() == 1 && b.pieces.size() == 1)
        rep.status = CertStatus::CertifiedExact;
    else
        rep.status = CertStatus::Bounded;
    return rep;
}

CertStatus certify(const FilteredObject& a, const FilteredObject& b, Claim claim) {
    const HomBoundReport rep = hom_bounds(a, b);
    if (claim == Claim::Vanishing) {
        if (rep.status == CertStatus::CertifiedVanishing) return CertStatus::CertifiedVanishing;
        if (rep.status == CertStatus::CertifiedExact)
            throw Error("vanishing claim contradicted exactly: hom(" + a.name + "," + b.name +
                        ") is nonzero");
        if (rep.euler != 0)
            throw Error("vanishing claim euler side-condition failed for (" + a.name + "," +
                        b.name + "): chi = " + rep.euler.str());
        return CertStatus::PaperAsserted;
    }

    // Exceptionality is a self-claim.
    if (a.k_class() != b.k_class())
        throw std::invalid_argument("exceptionality claim requires equal objects: " + a.name +
                                    " vs " + b.name);
    if (a.pieces.size() == 1) {
        GradedSpRep h = hom_graded(a.pieces.front(), a.pieces.front());
        GradedSpRep expected(a.rank());
        expected.add(0, SpWeight(std::vector<int>(static_cast<size_t>(a.rank()), 0)), 1);
        if (h == expected) return CertStatus::CertifiedExact;
        throw Error("exceptionality contradicted exactly for " + a.name + ": hom^*(X,X) = " +
                    h.str());
    }
    if (rep.euler != 1)
        throw Error("exceptionality euler side-condition failed for " + a.name +
                    ": chi = " + rep.euler.str());
    return CertStatus::PaperAsserted;
}

VirtualSum right_mutation_class(const FilteredObject& a, const FilteredObject& b) {
    require_same_rank(a.rank(), b.rank(), "right_mutation_class");
    const Int chi = euler_form(BundleExpr(a.k_class()), BundleExpr(b.k_class()));
    VirtualSum out(a.rank());
    out.add(VirtualSum(b.k_class()), to_ll(chi));
    out.add(VirtualSum(a.k_class()), -1);
    return out;
}

namespace {

GLWeight wedge_weight(int k, int n) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    std::fill(e.begin(), e.begin() + k, 1);
    return GLWeight(std::move(e));
}

GLWeight r_weight(int k, int n) {
    // S^{(2,1^k)}Q
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[0] = 2;
    std::fill(e.begin() + 1, e.begin() + 1 + k, 1);
    return GLWeight(std::move(e));
}

std::string wedge_name(int k) { return "wedge^" + std::to_string(k) + "Q"; }

}  // namespace

Registry::Registry(int n) : n_(n) {
    if (n < 3) throw std::invalid_argument("registry requires n >= 3");

    auto put = [&](FilteredObject obj) { objects_.emplace(obj.name, std::move(obj)); };
    auto single = [&](const std::string& name, const GLWeight& w) {
        put(FilteredObject{name, {BundleExpr::of(w, name)}, {}});
    };

    single("O", GLWeight(std::vector<int>(static_cast<size_t>(n), 0)));
    single("Q", wedge_weight(1, n));
    for (int k = 2; k <= n - 1; ++k) single(wedge_name(k), wedge_weight(k, n));
    for (int k = 1; k <= n - 2; ++k) single("R_" + std::to_string(k), r_weight(k, n));

    for (int k = 1; k <= n - 3; ++k) {
        const std::string ks = std::to_string(k);
        const int m = n - 2 - k;
        const GLWeight rdual_tw = twist(dual_weight(r_weight(m, n)), 1);
        const std::string rdual_label = "R_" + std::to_string(m) + "*(1)";

        put(FilteredObject{"E_" + ks,
                           {BundleExpr::of(rdual_tw, rdual_label),
                            BundleExpr::of(wedge_weight(k + 2, n), wedge_name(k + 2))},
                           {"S-seq", "QSE-seq"}});

        const std::string wk = k == 1 ? "Q" : wedge_name(k);
        put(FilteredObject{"F_" + ks,
                           {BundleExpr::of(wedge_weight(k, n), wk),
                            BundleExpr::of(r_weight(k, n), "R_" + ks)},
                           {"FR-seq"}});

        // The sub of S_k is the full tensor product Q* (x) wedge^{k+1}Q.
        RepSum sub = lr_general(dual_weight(wedge_weight(1, n)), wedge_weight(k + 1, n));
        put(FilteredObject{"S_" + ks,
                           {BundleExpr(std::move(sub), "Q*(x)wedge^" + std::to_string(k + 1) + "Q"),
                            BundleExpr::of(wedge_weight(k + 2, n), wedge_name(k + 2))},
                           {"SR-seq", "S-seq"}});
    }

    if (n == 5) {
        const GLWeight t({3, 1, 1, 0, 0});
        single("T", t);
        put(FilteredObject{"P",
                           {BundleExpr::of(r_weight(1, n), "R_1"), BundleExpr::of(t, "T")},
                           {"PT-seq"}});
        put(FilteredObject{"G",
                           {BundleExpr::of(wedge_weight(3, n), "wedge^3Q"),
                            BundleExpr::of(r_weight(1, n), "R_1"), BundleExpr::of(t, "T")},
                           {"PG-seq", "PT-seq"}});
    }
}

FilteredObject Registry::get(const std::string& name) const {
    auto it = objects_.find(name);
    if (it != objects_.end()) return it->second;
    if (!name.empty() && name.back() == ')') {
        auto open = name.rfind('(');
        if (open != std::string::npos && open > 0) {
            const std::string base = name.substr(0, open);
            const std::string inner = name.substr(open + 1, name.size() - open - 2);
            auto bt = objects_.find(base);
            if (bt != objects_.end()) {
                try {
                    return bt->second.twisted(std::stoi(inner));
                } catch (const std::invalid_argument&) {
                }
            }
        }
    }
    throw std::invalid_argument("unknown object '" + name + "' at n=" + std::to_string(n_));
}

bool Registry::contains(const std::string& name) const {
    try {
        get(name);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::vector<std::string> Registry::names() const {
    std::vector<std::string> out;
    out.reserve(objects_.size());
    for (const auto& [k, v] : objects_) out.push_back(k);
    return out;
}

const Registry& registry(int n) {
    static std::map<int, Registry> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, Registry(n)).first;
    return it->second;
}

}  // namespace lgcoh
