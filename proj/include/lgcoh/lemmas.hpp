#pragma once

#include "lgcoh/objects.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lgcoh {

/// One checkable claim of the verification suite: an exact graded
/// decomposition for a pair of Schur-bundle expressions, a vanishing statement,
/// a vanishing statement about filtered objects (certified or asserted with the
/// Euler side-condition), or an Euler-characteristic value.
struct SuiteClaim {
    enum Kind {
        Exact,           // hom^*(src,dst) equals `expected` on the nose
        Zero,            // hom^*(src,dst) = 0
        ZeroOutside,     // hom^i(src,dst) = 0 for i != degree
        ZeroInDegree,    // hom^degree(src,dst) = 0
        VanishFiltered,  // hom^*(A,B) = 0 via bounds, else asserted with chi = 0
        Euler            // chi(A,B) equals euler_expected
    };

    std::string label;
    Kind kind;
    int n = 0;
    // Exact/Zero/ZeroOutside/ZeroInDegree act on bundle expressions;
    // VanishFiltered/Euler act on registry objects named by src_name/dst_name.
    std::optional<BundleExpr> src;
    std::optional<BundleExpr> dst;
    std::string src_name;
    std::string dst_name;
    std::optional<GradedSpRep> expected;
    int degree = 0;
    long long euler_expected = 0;
};

struct SuiteRow {
    std::string label;
    bool pass = false;
    bool asserted = false;  // passed as PAPER_ASSERTED rather than certified
    std::string detail;
};

struct SuiteReport {
    std::string id;
    std::vector<SuiteRow> rows;
    long long passed = 0;
    long long failed = 0;
    long long asserted = 0;
};

/// Registered suite identifiers, one per statement group (parts addressable as
/// e.g. "T-lem.iv").
std::vector<std::string> suite_ids();

/// Runs one suite ("T-lem"), one part ("T-lem.iv"), or "all".
SuiteReport lemma_suite(const std::string& id);

}  // namespace lgcoh
