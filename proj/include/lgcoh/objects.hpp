#pragma once

#include "lgcoh/homalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace lgcoh {

/// A named iterated extension, recorded by its graded pieces in sub-to-quotient
/// order. The K-class is the sum of the pieces; graded Hom spaces are bounded
/// piecewise. Pure Schur bundles are single-piece objects.
struct FilteredObject {
    std::string name;
    std::vector<BundleExpr> pieces;
    std::vector<std::string> provenance;

    int rank() const;
    RepSum k_class() const;
    /// Twisting is exact, so the filtration twists termwise.
    FilteredObject twisted(int i) const;
    /// Single piece consisting of one weight with multiplicity one.
    bool is_line_of_schur() const;
};

enum class CertStatus { CertifiedVanishing, CertifiedExact, Bounded, PaperAsserted };

const char* to_string(CertStatus s);

/// Degreewise upper bounds for Hom between iterated extensions, with the exact
/// Euler characteristic. CERTIFIED_VANISHING iff the bound is identically zero;
/// CERTIFIED_EXACT when both sides are single-piece (the bound is the answer).
struct HomBoundReport {
    std::map<int, Int> upper;
    Int euler;
    CertStatus status;
};

HomBoundReport hom_bounds(const FilteredObject& a, const FilteredObject& b);

enum class Claim { Vanishing, Exceptional };

/// Evaluates a claim. Vanishing: certified when the bounds vanish, otherwise
/// recorded as asserted with the mandatory Euler side-condition chi = 0.
/// Exceptional: certified exactly for a single Schur line whose self-Hom is the
/// trivial representation in degree 0; otherwise asserted with chi = 1.
/// A failed side-condition (or an exactly contradicted claim) throws.
CertStatus certify(const FilteredObject& a, const FilteredObject& b, Claim claim);

/// Virtual class chi(A,B)[B] - [A] of the right mutation of A through B.
VirtualSum right_mutation_class(const FilteredObject& a, const FilteredObject& b);

/// The named objects available at rank n: twists of O, Q and wedge powers, the
/// bundles R_k, and the extension objects S_k, E_k, F_k (k in [1,n-3]); at
/// n = 5 additionally T, P and G.
class Registry {
public:
    explicit Registry(int n);

    int rank() const { return n_; }
    /// Accepts plain names and twisted forms like "F_1(2)".
    FilteredObject get(const std::string& name) const;
    bool contains(const std::string& name) const;
    std::vector<std::string> names() const;

private:
    int n_;
    std::map<std::string, FilteredObject> objects_;
};

const Registry& registry(int n);

}  // namespace lgcoh
