#include "lgcoh/lemmas.hpp"

#include <map>
#include <sstream>

// The verification suite: the statement tables reproduced by the engine at the
// decomposition level. Expected values are data, transcribed once; any
// mismatch prints expected vs computed.

namespace lgcoh {

namespace {

GLWeight wedge_w(int k, int n) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    std::fill(e.begin(), e.begin() + k, 1);
    return GLWeight(std::move(e));
}

GLWeight r_w(int k, int n) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[0] = 2;
    std::fill(e.begin() + 1, e.begin() + 1 + k, 1);
    return GLWeight(std::move(e));
}

GLWeight sym_dual_w(int m, int n) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    e.back() = -m;
    return GLWeight(std::move(e));
}

std::string wedge_nm(int k) {
    if (k == 0) return "O";
    if (k == 1) return "Q";
    return "wedge^" + std::to_string(k) + "Q";
}

BundleExpr wedge_e(int k, int n) { return BundleExpr::of(wedge_w(k, n), wedge_nm(k)); }

BundleExpr o_e(int n) { return wedge_e(0, n); }

BundleExpr r_e(int k, int n) { return BundleExpr::of(r_w(k, n), "R_" + std::to_string(k)); }

SpWeight triv(int n) { return SpWeight(std::vector<int>(static_cast<size_t>(n), 0)); }

SpWeight sp(std::vector<int> e) { return SpWeight(std::move(e)); }

GradedSpRep rep(int n, std::vector<std::tuple<int, SpWeight, long long>> items) {
    GradedSpRep r(n);
    for (auto& [d, w, m] : items) r.add(d, w, m);
    return r;
}

struct Builder {
    std::map<std::string, std::vector<SuiteClaim>>& parts;

    std::vector<SuiteClaim>& at(const std::string& part) { return parts[part]; }

    void exact(const std::string& part, const std::string& label, int n, BundleExpr src,
               BundleExpr dst, GradedSpRep expected) {
        SuiteClaim c;
        c.label = label;
        c.kind = SuiteClaim::Exact;
        c.n = n;
        c.src = std::move(src);
        c.dst = std::move(dst);
        c.expected = std::move(expected);
        at(part).push_back(std::move(c));
    }

    void zero(const std::string& part, const std::string& label, int n, BundleExpr src,
              BundleExpr dst) {
        SuiteClaim c;
        c.label = label;
        c.kind = SuiteClaim::Zero;
        c.n = n;
        c.src = std::move(src);
        c.dst = std::move(dst);
        at(part).push_back(std::move(c));
    }

    void zero_outside(const std::string& part, const std::string& label, int n, BundleExpr src,
                      BundleExpr dst, int degree) {
        SuiteClaim c;
        c.label = label;
        c.kind = SuiteClaim::ZeroOutside;
        c.n = n;
        c.src = std::move(src);
        c.dst = std::move(dst);
        c.degree = degree;
        at(part).push_back(std::move(c));
    }

    void zero_in_degree(const std::string& part, const std::string& label, int n, BundleExpr src,
                        BundleExpr dst, int degree) {
        SuiteClaim c;
        c.label = label;
        c.kind = SuiteClaim::ZeroInDegree;
        c.n = n;
        c.src = std::move(src);
        c.dst = std::move(dst);
        c.degree = degree;
        at(part).push_back(std::move(c));
    }

    void vanish(const std::string& part, const std::string& label, int n, std::string src_name,
                std::string dst_name) {
        SuiteClaim c;
        c.label = label;
        c.kind = SuiteClaim::VanishFiltered;
        c.n = n;
        c.src_name = std::move(src_name);
        c.dst_name = std::move(dst_name);
        at(part).push_back(std::move(c));
    }

    void euler(const std::string& part, const std::string& label, int n, std::string src_name,
               std::string dst_name, long long expected) {
        SuiteClaim c;
        c.label = label;
        c.kind = SuiteClaim::Euler;
        c.n = n;
        c.src_name = std::move(src_name);
        c.dst_name = std::move(dst_name);
        c.euler_expected = expected;
        at(part).push_back(std::move(c));
    }
};

std::string tag(const std::string& stem, int n) { return stem + " [n=" + std::to_string(n) + "]"; }

void build_coh_lem(Builder& b) {
    for (int n = 3; n <= 6; ++n) {
        for (int i = -n; i <= -1; ++i)
            b.zero("coh-lem.i", tag("H^*(O(" + std::to_string(i) + ")) = 0", n), n, o_e(n),
                   twist_expr(o_e(n), i));
        b.exact("coh-lem.i", tag("H^*(O) = k in degree 0", n), n, o_e(n), o_e(n),
                rep(n, {{0, triv(n), 1}}));
        for (int k = 1; k <= n - 1; ++k) {
            for (int i = -n - 1; i <= -1; ++i)
                b.zero("coh-lem.ii",
                       tag("H^*(" + wedge_nm(k) + "(" + std::to_string(i) + ")) = 0", n), n,
                       o_e(n), twist_expr(wedge_e(k, n), i));
            b.exact("coh-lem.ii", tag("H^*(" + wedge_nm(k) + ") = V(omega_" + std::to_string(k) +
                                      ") in degree 0", n),
                    n, o_e(n), wedge_e(k, n), rep(n, {{0, omega(k, n), 1}}));
        }
    }
}

void build_gen_exc_lem(Builder& b) {
    for (int n : {4, 5}) {
        for (int k = 0; k <= n - 2; ++k)
            for (int l = 0; l <= n - 2; ++l) {
                for (int i = -n; i <= -1; ++i)
                    b.zero("gen-exc-lem.i",
                           tag("hom^*(" + wedge_nm(k) + "," + wedge_nm(l) + "(" +
                               std::to_string(i) + ")) = 0", n),
                           n, wedge_e(k, n), twist_expr(wedge_e(l, n), i));
                if (k > l)
                    b.zero("gen-exc-lem.i",
                           tag("hom^*(" + wedge_nm(k) + "," + wedge_nm(l) + ") = 0", n), n,
                           wedge_e(k, n), wedge_e(l, n));
            }
        for (int k = 0; k <= n - 2; ++k)
            b.exact("gen-exc-lem.i", tag(wedge_nm(k) + " is exceptional", n), n, wedge_e(k, n),
                    wedge_e(k, n), rep(n, {{0, triv(n), 1}}));
        for (int k = 0; k <= n - 1; ++k)
            b.exact("gen-exc-lem.ii",
                    tag("hom^*(" + wedge_nm(k) + "," + wedge_nm(k + 1) + ") = V in degree 0", n),
                    n, wedge_e(k, n), wedge_e(k + 1, n), rep(n, {{0, omega(1, n), 1}}));
    }
}

void build_r_van_lem(Builder& b) {
    for (int n : {4, 5}) {
        for (int k = 1; k <= n - 3; ++k) {
            const std::string rk = "R_" + std::to_string(k);
            for (int l = 0; l <= n - 2; ++l) {
                for (int i = -n; i <= -1; ++i) {
                    b.zero("R-van-lem",
                           tag("hom^*(" + wedge_nm(l) + "," + rk + "(" + std::to_string(i) +
                               ")) = 0", n),
                           n, wedge_e(l, n), twist_expr(r_e(k, n), i));
                    b.zero("R-van-lem",
                           tag("hom^*(" + rk + "," + wedge_nm(l) + "(" + std::to_string(i) +
                               ")) = 0", n),
                           n, r_e(k, n), twist_expr(wedge_e(l, n), i));
                }
                if (l > k + 1)
                    b.zero("R-van-lem", tag("hom^*(" + wedge_nm(l) + "," + rk + ") = 0", n), n,
                           wedge_e(l, n), r_e(k, n));
                if (l < k)
                    b.zero("R-van-lem", tag("hom^*(" + rk + "," + wedge_nm(l) + ") = 0", n), n,
                           r_e(k, n), wedge_e(l, n));
            }
        }
    }
}

void build_bott_lem(Builder& b) {
    for (int n : {4, 5}) {
        const SpWeight two_omega1 = sp([&] {
            std::vector<int> e(static_cast<size_t>(n), 0);
            e[0] = 2;
            return e;
        }());
        for (int k = 1; k <= n - 3; ++k) {
            const std::string rk = "R_" + std::to_string(k);
            b.exact("Bott-lem.i",
                    tag("hom^*(" + wedge_nm(k + 1) + "," + rk + ") = V in degree 0", n), n,
                    wedge_e(k + 1, n), r_e(k, n), rep(n, {{0, omega(1, n), 1}}));
            b.exact("Bott-lem.ii",
                    tag("hom^*(" + wedge_nm(k) + "," + rk + ") = VxV/k in degree 0", n), n,
                    wedge_e(k, n), r_e(k, n),
                    rep(n, {{0, two_omega1, 1}, {0, omega(2, n), 1}}));
            b.exact("Bott-lem.iii",
                    tag("hom^*(" + rk + "," + wedge_nm(k) + ") = k in degree 1", n), n,
                    r_e(k, n), wedge_e(k, n), rep(n, {{1, triv(n), 1}}));
            b.exact("Bott-lem.iii",
                    tag("hom^*(" + rk + "," + wedge_nm(k + 1) + ") = V in degree 1", n), n,
                    r_e(k, n), wedge_e(k + 1, n), rep(n, {{1, omega(1, n), 1}}));
            b.exact("Bott-lem.iv",
                    tag("hom^*(" + rk + "," + rk + ") = k in degree 0, VxV/k in degree 1", n), n,
                    r_e(k, n), r_e(k, n),
                    rep(n, {{0, triv(n), 1}, {1, two_omega1, 1}, {1, omega(2, n), 1}}));
        }
        const GLWeight qd = dual_weight(wedge_w(1, n));
        const GLWeight s2qd = sym_dual_w(2, n);
        BundleExpr qd_s2qd(lr_general(qd, s2qd), "Q*(x)S^2Q*");
        b.zero("Bott-lem.v", tag("H^*(Q*(x)S^2Q*) = 0", n), n, o_e(n), qd_s2qd);
        BundleExpr q_qd_s2qd(tensor(lr_general(qd, wedge_w(1, n)), RepSum::of(s2qd)),
                             "Q*(x)Q(x)S^2Q*");
        b.zero_outside("Bott-lem.vi", tag("H^i(Q*(x)Q(x)S^2Q*) = 0 for i != 1", n), n, o_e(n),
                       q_qd_s2qd, 1);
    }
}

void build_split_lem(Builder& b) {
    for (int n : {4, 5}) {
        for (int k = 1; k <= n - 3; ++k) {
            const std::string ek = "E_" + std::to_string(k);
            b.vanish("split-lem", tag("hom^*(" + wedge_nm(k) + "," + ek + ") = 0", n), n,
                     wedge_nm(k), ek);
            b.vanish("split-lem", tag("hom^*(" + ek + "," + wedge_nm(k) + ") = 0", n), n, ek,
                     wedge_nm(k));
        }
    }
}

void build_e_van_lem(Builder& b) {
    for (int n : {4, 5}) {
        for (int k = 1; k <= n - 3; ++k) {
            const std::string ek = "E_" + std::to_string(k);
            for (int l = 0; l <= n - 2; ++l) {
                for (int i = -n; i <= -1; ++i) {
                    const std::string tw = "(" + std::to_string(i) + ")";
                    b.vanish("E-van-lem",
                             tag("hom^*(" + wedge_nm(l) + "," + ek + tw + ") = 0", n), n,
                             wedge_nm(l), ek + tw);
                    b.vanish("E-van-lem",
                             tag("hom^*(" + ek + "," + wedge_nm(l) + tw + ") = 0", n), n, ek,
                             wedge_nm(l) + tw);
                }
                if (l > k)
                    b.vanish("E-van-lem", tag("hom^*(" + wedge_nm(l) + "," + ek + ") = 0", n), n,
                             wedge_nm(l), ek);
                if (l < k)
                    b.vanish("E-van-lem", tag("hom^*(" + ek + "," + wedge_nm(l) + ") = 0", n), n,
                             ek, wedge_nm(l));
            }
        }
    }
}

void build_t_lem(Builder& b) {
    const int n = 5;
    const GLWeight t_w({3, 1, 1, 0, 0});
    const BundleExpr t = BundleExpr::of(t_w, "T");

    const SpWeight triv5 = triv(n);
    const SpWeight w1 = omega(1, n);
    const SpWeight w2 = omega(2, n);
    const SpWeight two_w1 = sp({2, 0, 0, 0, 0});
    const SpWeight three_w1 = sp({3, 0, 0, 0, 0});
    const SpWeight w1_w2 = sp({2, 1, 0, 0, 0});
    const SpWeight two_w1_w2 = sp({3, 1, 0, 0, 0});
    const SpWeight w1_w3 = sp({2, 1, 1, 0, 0});

    // (i)
    for (int i = 0; i <= 3; ++i)
        for (int j = -5; j <= -1; ++j)
            b.zero("T-lem.i",
                   tag("hom^*(" + wedge_nm(i) + ",T(" + std::to_string(j) + ")) = 0", n), n,
                   wedge_e(i, n), twist_expr(t, j));
    b.zero("T-lem.i", tag("hom^*(T,O) = 0", n), n, t, o_e(n));

    // (ii) The j = -1 entry does not vanish: R_1^dual (x) T(-1) contains
    // S^{(1,0,0,-1,-3)}Q, whose shifted weight (6,4,3,1,-2) is regular of
    // length 2, so hom^2(R_1,T(-1)) = V(omega_1). Vanishing holds for
    // j in [-5,-2].
    for (int j = -5; j <= -2; ++j)
        b.zero("T-lem.ii", tag("hom^*(R_1,T(" + std::to_string(j) + ")) = 0", n), n, r_e(1, n),
               twist_expr(t, j));
    b.exact("T-lem.ii", tag("hom^*(R_1,T(-1)) = V in degree 2", n), n, r_e(1, n),
            twist_expr(t, -1), rep(n, {{2, w1, 1}}));

    // (iii)
    b.zero("T-lem.iii", tag("hom^*(T,T(-3)) = 0", n), n, t, twist_expr(t, -3));

    // (iv)
    b.exact("T-lem.iv", tag("hom^*(T,T): k | VxV/k + S^2V | V(2w1+w2) + V(w1+w3)", n), n, t, t,
            rep(n, {{0, triv5, 1},
                    {1, two_w1, 2},
                    {1, w2, 1},
                    {2, two_w1_w2, 1},
                    {2, w1_w3, 1}}));

    // (v)
    b.exact("T-lem.v", tag("hom^*(wedge^3Q,T) = S^2V in degree 0", n), n, wedge_e(3, n), t,
            rep(n, {{0, two_w1, 1}}));
    b.exact("T-lem.v", tag("hom^*(T,wedge^3Q) = k | wedge^2V/k in degrees 1,2", n), n, t,
            wedge_e(3, n), rep(n, {{1, triv5, 1}, {2, w2, 1}}));

    // (vi)
    b.exact("T-lem.vi", tag("hom^*(wedge^2Q,T) = V(3w1) + V(w1+w2) in degree 0", n), n,
            wedge_e(2, n), t, rep(n, {{0, three_w1, 1}, {0, w1_w2, 1}}));
    b.exact("T-lem.vi", tag("hom^*(T,wedge^2Q) = V in degree 2", n), n, t, wedge_e(2, n),
            rep(n, {{2, w1, 1}}));

    // (vii)
    b.exact("T-lem.vii", tag("hom^*(Q,T) = V(2w1+w2) + V(w1+w3) in degree 0", n), n,
            wedge_e(1, n), t, rep(n, {{0, two_w1_w2, 1}, {0, w1_w3, 1}}));
    b.exact("T-lem.vii", tag("hom^*(T,Q) = k in degree 2", n), n, t, wedge_e(1, n),
            rep(n, {{2, triv5, 1}}));

    // (viii)
    b.exact("T-lem.viii", tag("hom^*(R_1,T) = VxV/k | V(2w1+w2) + V(w1+w3)", n), n, r_e(1, n), t,
            rep(n, {{0, two_w1, 1}, {0, w2, 1}, {1, two_w1_w2, 1}, {1, w1_w3, 1}}));
    b.exact("T-lem.viii", tag("hom^*(T,R_1) = k | VxV/k in degrees 1,2", n), n, t, r_e(1, n),
            rep(n, {{1, triv5, 1}, {2, two_w1, 1}, {2, w2, 1}}));

    // (ix)
    b.zero("T-lem.ix", tag("hom^*(T,S^2Q*) = 0", n), n, t,
           BundleExpr::of(sym_dual_w(2, n), "S^2Q*"));

    // (x)
    b.zero_outside("T-lem.x", tag("hom^i(T,S^3Q*) = 0 for i != 4", n), n, t,
                   BundleExpr::of(sym_dual_w(3, n), "S^3Q*"), 4);

    // (xi)
    b.zero_outside("T-lem.xi", tag("hom^i(T,R_3) = 0 for i != 1", n), n, t, r_e(3, n), 1);

    // (xii)
    BundleExpr w3_qd(lr_general(wedge_w(3, n), dual_weight(wedge_w(1, n))), "wedge^3Q(x)Q*");
    b.zero_outside("T-lem.xii", tag("hom^i(T,wedge^3Q(x)Q*) = 0 for i != 2", n), n, t, w3_qd, 2);

    // (xiii)
    BundleExpr w3_w2d(lr_general(wedge_w(3, n), dual_weight(wedge_w(2, n))),
                      "wedge^3Q(x)wedge^2Q*");
    b.zero_in_degree("T-lem.xiii", tag("hom^4(T,wedge^3Q(x)wedge^2Q*) = 0", n), n, t, w3_w2d, 4);
}

void build_end_r_lem(Builder& b) {
    const int n = 5;
    for (int i = -5; i <= -1; ++i)
        b.zero("end-R-lem", tag("hom^*(R_1,R_1(" + std::to_string(i) + ")) = 0", n), n, r_e(1, n),
               twist_expr(r_e(1, n), i));
}

void build_p_lem(Builder& b) {
    const int n = 5;
    // Euler shadows of the stated graded pieces: dim S^2V = 55 on Sp(10).
    b.euler("P-lem.v", tag("chi(P,Q) = 0", n), n, "P", "Q", 0);
    b.euler("P-lem.v", tag("chi(P,wedge^2Q) = 0", n), n, "P", "wedge^2Q", 0);
    b.euler("P-lem.v", tag("chi(P,R_1) = 0", n), n, "P", "R_1", 0);
    b.euler("P-lem.v", tag("chi(P,wedge^3Q) = -1", n), n, "P", "wedge^3Q", -1);
    b.euler("P-lem.v", tag("chi(P,P) = 1 - 55", n), n, "P", "P", 1 - 55);
    b.euler("P-lem.v", tag("chi(P,T) = 1 - 55", n), n, "P", "T", 1 - 55);
}

void build_g_thm(Builder& b) {
    const int n = 5;
    b.euler("G-thm", tag("chi(G,G) = 1", n), n, "G", "G", 1);
    b.euler("G-thm", tag("chi(G,wedge^3Q) = 0", n), n, "G", "wedge^3Q", 0);
}

const std::map<std::string, std::vector<SuiteClaim>>& all_parts() {
    static const std::map<std::string, std::vector<SuiteClaim>> parts = [] {
        std::map<std::string, std::vector<SuiteClaim>> p;
        Builder b{p};
        build_coh_lem(b);
        build_gen_exc_lem(b);
        build_r_van_lem(b);
        build_bott_lem(b);
        build_split_lem(b);
        build_e_van_lem(b);
        build_t_lem(b);
        build_end_r_lem(b);
        build_p_lem(b);
        build_g_thm(b);
        return p;
    }();
    return parts;
}

SuiteRow eval_claim(const SuiteClaim& c) {
    SuiteRow row;
    row.label = c.label;
    switch (c.kind) {
        case SuiteClaim::Exact: {
            const GradedSpRep h = hom_graded(*c.src, *c.dst);
            row.pass = (h == *c.expected);
            if (!row.pass)
                row.detail = "expected " + c.expected->str() + "; computed " + h.str();
            break;
        }
        case SuiteClaim::Zero: {
            const GradedSpRep h = hom_graded(*c.src, *c.dst);
            row.pass = h.is_zero();
            if (!row.pass) row.detail = "computed " + h.str();
            break;
        }
        case SuiteClaim::ZeroOutside: {
            const GradedSpRep h = hom_graded(*c.src, *c.dst);
            row.pass = true;
            for (const auto& [d, comp] : h.components())
                if (d != c.degree) row.pass = false;
            if (!row.pass) row.detail = "computed " + h.str();
            break;
        }
        case SuiteClaim::ZeroInDegree: {
            const GradedSpRep h = hom_graded(*c.src, *c.dst);
            row.pass = h.components().find(c.degree) == h.components().end();
            if (!row.pass) row.detail = "computed " + h.str();
            break;
        }
        case SuiteClaim::VanishFiltered: {
            const Registry& reg = registry(c.n);
            try {
                const CertStatus s =
                    certify(reg.get(c.src_name), reg.get(c.dst_name), Claim::Vanishing);
                row.pass = true;
                row.asserted = (s == CertStatus::PaperAsserted);
            } catch (const Error& e) {
                row.pass = false;
                row.detail = e.what();
            }
            break;
        }
        case SuiteClaim::Euler: {
            const Registry& reg = registry(c.n);
            const Int chi = euler_form(BundleExpr(reg.get(c.src_name).k_class()),
                                       BundleExpr(reg.get(c.dst_name).k_class()));
            row.pass = (chi == c.euler_expected);
            if (!row.pass)
                row.detail = "expected chi = " + std::to_string(c.euler_expected) +
                             "; computed " + chi.str();
            break;
        }
    }
    return row;
}

}  // namespace

std::vector<std::string> suite_ids() {
    std::vector<std::string> out;
    for (const auto& [id, claims] : all_parts()) out.push_back(id);
    return out;
}

SuiteReport lemma_suite(const std::string& id) {
    const auto& parts = all_parts();
    SuiteReport rep;
    rep.id = id;
    bool matched = false;
    for (const auto& [part, claims] : parts) {
        const bool hit = (id == "all") || (part == id) ||
                         (part.size() > id.size() && part.compare(0, id.size(), id) == 0 &&
                          part[id.size()] == '.');
        if (!hit) continue;
        matched = true;
        for (const auto& c : claims) {
            SuiteRow row = eval_claim(c);
            row.label = part + ": " + row.label;
            if (row.pass)
                ++rep.passed;
            else
                ++rep.failed;
            if (row.asserted) ++rep.asserted;
            rep.rows.push_back(std::move(row));
        }
    }
    if (!matched) throw std::invalid_argument("unknown suite id: " + id);
    return rep;
}

}  // namespace lgcoh
