#include "lgcoh/collections.hpp"

#include "lgcoh/ktheory.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace lgcoh {

Collection collection(const std::string& name) {
    if (name == "lg48") {
        const Registry& reg = registry(4);
        Collection c{name, 4, {}};
        for (const char* base : {"O", "E_1", "Q", "wedge^2Q"}) c.objects.push_back(reg.get(base));
        for (int j = 1; j <= 4; ++j)
            for (const char* base : {"O", "Q", "wedge^2Q"})
                c.objects.push_back(reg.get(base).twisted(j));
        return c;
    }
    if (name == "lg510") {
        // The slot between wedge^2Q and wedge^3Q holds E_2 = F_1*(1): with F_1
        // there instead, chi(F_1(1),G) = chi(R_1,T(-1)) = 10 != 0 and the
        // collection could not be semiorthogonal.
        const Registry& reg = registry(5);
        Collection c{name, 5, {}};
        auto block = [&](bool with_g, int j) {
            for (const char* base : {"O", "Q", "wedge^2Q", "E_2", "wedge^3Q"})
                c.objects.push_back(reg.get(base).twisted(j));
            if (with_g) c.objects.push_back(reg.get("G").twisted(j));
        };
        block(true, 0);
        block(false, 1);
        block(false, 2);
        block(true, 3);
        block(false, 4);
        block(false, 5);
        return c;
    }
    throw std::invalid_argument("unknown collection: " + name);
}

namespace {

std::vector<std::vector<long long>> gram_of(const Collection& c) {
    const size_t m = c.objects.size();
    std::vector<BundleExpr> classes;
    classes.reserve(m);
    for (const auto& obj : c.objects) classes.emplace_back(obj.k_class());
    std::vector<std::vector<long long>> gram(m, std::vector<long long>(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            gram[i][j] = to_ll(euler_form(classes[i], classes[j]));
    return gram;
}

bool is_unitriangular(const std::vector<std::vector<long long>>& g) {
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i][i] != 1) return false;
        for (size_t j = 0; j < i; ++j)
            if (g[i][j] != 0) return false;
    }
    return true;
}

// Fraction-free Gaussian elimination.
Int bareiss_det(std::vector<std::vector<Int>> a) {
    const size_t m = a.size();
    if (m == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < m; ++k) {
        if (a[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < m && a[piv][k] == 0) ++piv;
            if (piv == m) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < m; ++i)
            for (size_t j = k + 1; j < m; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num / prev;  // exact by Bareiss
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[m - 1][m - 1] : -a[m - 1][m - 1];
}

}  // namespace

GramResult gram_matrix(const std::string& name) {
    const Collection c = collection(name);
    GramResult out;
    out.matrix = gram_of(c);
    out.unitriangular = is_unitriangular(out.matrix);
    std::vector<std::vector<Int>> big(out.matrix.size());
    for (size_t i = 0; i < out.matrix.size(); ++i)
        big[i].assign(out.matrix[i].begin(), out.matrix[i].end());
    out.determinant = bareiss_det(std::move(big));
    return out;
}

VerificationReport verify_semiorthogonality(const std::string& name, int parallelism) {
    const Collection c = collection(name);
    const size_t m = c.objects.size();

    if (static_cast<long long>(m) != rank_k0(c.n))
        throw Error("collection size does not match rank of K_0");

    struct Task {
        int src, dst;
        Claim claim;
    };
    std::vector<Task> tasks;
    for (size_t i = 1; i < m; ++i)
        for (size_t j = 0; j < i; ++j)
            tasks.push_back({static_cast<int>(i), static_cast<int>(j), Claim::Vanishing});
    for (size_t i = 0; i < m; ++i)
        tasks.push_back({static_cast<int>(i), static_cast<int>(i), Claim::Exceptional});

    struct Outcome {
        CertStatus status;
        long long euler;
        std::string error;
    };
    std::vector<Outcome> outcomes(tasks.size());

    unsigned workers = parallelism > 0 ? static_cast<unsigned>(parallelism)
                                       : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));

    auto run_task = [&](size_t t) {
        const Task& task = tasks[t];
        const FilteredObject& a = c.objects[static_cast<size_t>(task.src)];
        const FilteredObject& b = c.objects[static_cast<size_t>(task.dst)];
        Outcome& o = outcomes[t];
        try {
            o.euler = to_ll(hom_bounds(a, b).euler);
            o.status = certify(a, b, task.claim);
        } catch (const Error& e) {
            o.error = e.what();
        }
    };

    if (workers <= 1) {
        for (size_t t = 0; t < tasks.size(); ++t) run_task(t);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    size_t t = next.fetch_add(1);
                    if (t >= tasks.size()) return;
                    run_task(t);
                }
            });
        for (auto& th : pool) th.join();
    }

    VerificationReport rep;
    rep.collection = name;
    rep.n = c.n;
    for (size_t t = 0; t < tasks.size(); ++t) {
        const Task& task = tasks[t];
        const Outcome& o = outcomes[t];
        if (!o.error.empty())
            throw Error("hard failure on pair (" + c.objects[static_cast<size_t>(task.src)].name +
                        ", " + c.objects[static_cast<size_t>(task.dst)].name + "): " + o.error);
        rep.pairs.push_back({task.src, task.dst, o.status, o.euler});
        if (o.status == CertStatus::PaperAsserted) {
            ++rep.asserted;
            if (task.src != task.dst)
                rep.asserted_pairs.push_back(c.objects[static_cast<size_t>(task.src)].name + ">" +
                                             c.objects[static_cast<size_t>(task.dst)].name);
        } else {
            ++rep.certified;
        }
    }
    std::sort(rep.asserted_pairs.begin(), rep.asserted_pairs.end());
    rep.asserted_matches_golden = rep.asserted_pairs == golden_asserted(name);

    rep.gram = gram_of(c);
    rep.unitriangular = is_unitriangular(rep.gram);
    return rep;
}

bool kclass_equal(const VirtualSum& a, const VirtualSum& b, const Collection& c) {
    VirtualSum diff = a;
    diff.add(b, -1);
    if (diff.is_zero()) return true;

    auto pair_against = [&](const BundleExpr& probe, bool probe_left) {
        Int chi = 0;
        for (const auto& [w, coeff] : diff.terms()) {
            const BundleExpr term = BundleExpr::of(w);
            const Int val =
                probe_left ? euler_form(probe, term) : euler_form(term, probe);
            chi += coeff * val;
        }
        return chi;
    };

    for (const auto& obj : c.objects) {
        const BundleExpr cls(obj.k_class());
        if (pair_against(cls, true) != 0) return false;
        if (pair_against(cls, false) != 0) return false;
    }
    return true;
}

}  // namespace lgcoh
