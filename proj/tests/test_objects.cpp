#include "lgcoh/objects.hpp"

#include "lgcoh/collections.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace lgcoh;

namespace {

GLWeight wedge_w(int k, int n) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    std::fill(e.begin(), e.begin() + k, 1);
    return GLWeight(std::move(e));
}

}  // namespace

TEST_CASE("registry contents") {
    const Registry& r4 = registry(4);
    FilteredObject e1 = r4.get("E_1");
    REQUIRE(e1.pieces.size() == 2);
    CHECK(e1.pieces[0].sum == RepSum::of(GLWeight({1, 1, 0, -1})));
    CHECK(e1.pieces[1].sum == RepSum::of(GLWeight({1, 1, 1, 0})));

    const Registry& r5 = registry(5);
    FilteredObject g = r5.get("G");
    REQUIRE(g.pieces.size() == 3);
    CHECK(g.pieces[0].sum == RepSum::of(GLWeight({1, 1, 1, 0, 0})));
    CHECK(g.pieces[1].sum == RepSum::of(GLWeight({2, 1, 0, 0, 0})));
    CHECK(g.pieces[2].sum == RepSum::of(GLWeight({3, 1, 1, 0, 0})));

    const Registry& r3 = registry(3);
    CHECK_FALSE(r3.contains("E_1"));
    CHECK_THROWS_AS(r3.get("E_1"), std::invalid_argument);
    CHECK_FALSE(r4.contains("P"));
    CHECK_FALSE(r4.contains("G"));
    CHECK(r5.contains("T"));
    CHECK(r5.contains("R_3"));
    CHECK_THROWS_AS(registry(2), std::invalid_argument);

    // twisted lookup
    CHECK(r5.get("F_1(2)").pieces[0].sum == RepSum::of(twist(wedge_w(1, 5), 2)));
    CHECK(r5.get("F_1").twisted(2).name == "F_1(2)");
    CHECK(r4.get("O(1)").twisted(1).name == "O(2)");
}

TEST_CASE("k_class") {
    const Registry& r5 = registry(5);
    CHECK(r5.get("Q").k_class() == RepSum::of(GLWeight({1, 0, 0, 0, 0})));

    RepSum g = r5.get("G").k_class();
    CHECK(g.mult_of(GLWeight({1, 1, 1, 0, 0})) == 1);
    CHECK(g.mult_of(GLWeight({2, 1, 0, 0, 0})) == 1);
    CHECK(g.mult_of(GLWeight({3, 1, 1, 0, 0})) == 1);

    for (int n : {4, 5}) {
        const Registry& reg = registry(n);
        for (int k = 1; k <= n - 3; ++k) {
            RepSum sk = reg.get("S_" + std::to_string(k)).k_class();
            RepSum ek_plus_wedge = reg.get("E_" + std::to_string(k)).k_class();
            ek_plus_wedge.add(wedge_w(k, n));
            CHECK(sk == ek_plus_wedge);
        }
    }
}

TEST_CASE("hom_bounds single-piece statuses") {
    const Registry& r4 = registry(4);
    CHECK(hom_bounds(r4.get("Q"), r4.get("O(-1)")).status == CertStatus::CertifiedVanishing);
    CHECK_FALSE(r4.contains("E_2"));  // extension objects stop at k = n-3
    CHECK(registry(5).contains("E_2"));
}

TEST_CASE("hom_bounds degenerates to the exact answer for single pieces") {
    const Registry& r5 = registry(5);
    FilteredObject q = r5.get("Q");
    FilteredObject r1 = r5.get("R_1");
    HomBoundReport rep = hom_bounds(q, r1);
    CHECK(rep.status == CertStatus::CertifiedExact);
    auto exact = graded_dim(hom_graded(q.pieces[0], r1.pieces[0]));
    CHECK(rep.upper == exact);

    // euler within the alternating-sum envelope
    Int envelope = 0;
    for (const auto& [d, dim] : rep.upper) envelope += dim;
    CHECK(rep.euler <= envelope);
    CHECK(rep.euler >= -envelope);
}

TEST_CASE("certify") {
    const Registry& r4 = registry(4);
    CHECK(certify(r4.get("wedge^2Q"), r4.get("wedge^2Q"), Claim::Exceptional) ==
          CertStatus::CertifiedExact);

    // E_1 backward to Q is not certifiable from the pieces but has chi = 0
    CertStatus s = certify(r4.get("E_1"), r4.get("Q"), Claim::Vanishing);
    CHECK((s == CertStatus::CertifiedVanishing || s == CertStatus::PaperAsserted));

    const Registry& r5 = registry(5);
    CHECK(certify(r5.get("F_1"), r5.get("F_1"), Claim::Exceptional) == CertStatus::PaperAsserted);
    CHECK(certify(r5.get("G"), r5.get("G"), Claim::Exceptional) == CertStatus::PaperAsserted);

    // a false vanishing claim on pure bundles is a hard error
    CHECK_THROWS_AS(certify(r5.get("Q"), r5.get("wedge^2Q"), Claim::Vanishing), Error);
    // R_1 is not exceptional and the euler side-condition catches it
    CHECK_THROWS_AS(certify(r5.get("R_1"), r5.get("R_1"), Claim::Exceptional), Error);
}

TEST_CASE("hom bound report for G") {
    const Registry& r5 = registry(5);
    HomBoundReport rep = hom_bounds(r5.get("G"), r5.get("G"));
    CHECK(rep.status == CertStatus::Bounded);
    CHECK(rep.euler == 1);
}

TEST_CASE("mutation identities") {
    // chi(O,O) = 1, so the mutation class of O through O is 1*[O] - [O] = 0
    // (the cone of the identity map)
    const Registry& r4 = registry(4);
    VirtualSum m = right_mutation_class(r4.get("O"), r4.get("O"));
    CHECK(m.is_zero());

    struct Case {
        int n;
        int k;
        const char* coll;
    };
    for (const Case c : {Case{4, 1, "lg48"}, Case{5, 1, "lg510"}, Case{5, 2, "lg510"}}) {
        const Registry& reg = registry(c.n);
        const std::string ks = std::to_string(c.k);
        FilteredObject ek = reg.get("E_" + ks);
        FilteredObject wk1 = reg.get(c.k + 1 == 1 ? "Q" : "wedge^" + std::to_string(c.k + 1) + "Q");
        // chi(E_k, wedge^{k+1}Q) = dim V = 2n
        CHECK(euler_form(BundleExpr(ek.k_class()), BundleExpr(wk1.k_class())) == 2 * c.n);

        VirtualSum mut = right_mutation_class(ek, wk1);
        VirtualSum fk(reg.get("F_" + ks).k_class());
        CHECK(kclass_equal(mut, fk, collection(c.coll)));

        // duality: k_class(E_{n-2-k}) equals the termwise dual twisted by O(1)
        RepSum fdual_tw = reg.get("F_" + ks).k_class().dualized().twisted(1);
        CHECK(reg.get("E_" + std::to_string(c.n - 2 - c.k)).k_class() == fdual_tw);

        // the two-sided class identity from the mutation sequence
        RepSum lhs = reg.get("F_" + ks).k_class();
        lhs.add(ek.k_class());
        RepSum qq(c.n);
        qq.add(wedge_w(1, c.n));
        qq.add(dual_weight(wedge_w(1, c.n)));
        CHECK(lhs == tensor(qq, RepSum::of(wedge_w(c.k + 1, c.n))));
        VirtualSum scaled(RepSum::of(wedge_w(c.k + 1, c.n), 2 * c.n));
        CHECK(kclass_equal(VirtualSum(lhs), scaled, collection(c.coll)));
    }
}
