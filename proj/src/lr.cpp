#include "lgcoh/lr.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>

namespace lgcoh {

RepSum::RepSum(int rank) : n_(rank) {
    if (rank < 1) throw std::invalid_argument("RepSum rank must be >= 1");
}

RepSum RepSum::of(const GLWeight& w, long long mult) {
    RepSum s(w.rank());
    s.add(w, mult);
    return s;
}

void RepSum::add(const GLWeight& w, long long mult) {
    require_same_rank(n_, w.rank(), "RepSum::add");
    if (mult == 0) return;
    if (mult < 0) throw std::invalid_argument("RepSum multiplicities must be positive");
    terms_[w] += mult;
}

void RepSum::add(const RepSum& other, long long scale) {
    require_same_rank(n_, other.n_, "RepSum::add");
    for (const auto& [w, m] : other.terms_) add(w, m * scale);
}

long long RepSum::mult_of(const GLWeight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

long long RepSum::total_mult() const {
    long long t = 0;
    for (const auto& [w, m] : terms_) t += m;
    return t;
}

Int RepSum::total_dim() const {
    Int t = 0;
    for (const auto& [w, m] : terms_) t += Int(m) * gl_dim(w);
    return t;
}

RepSum RepSum::twisted(int i) const {
    RepSum out(n_);
    for (const auto& [w, m] : terms_) out.add(twist(w, i), m);
    return out;
}

RepSum RepSum::dualized() const {
    RepSum out(n_);
    for (const auto& [w, m] : terms_) out.add(dual_weight(w), m);
    return out;
}

std::string RepSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, m] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (m != 1) os << m << '*';
        os << w.str();
    }
    return os.str();
}

VirtualSum::VirtualSum(int rank) : n_(rank) {
    if (rank < 1) throw std::invalid_argument("VirtualSum rank must be >= 1");
}

VirtualSum::VirtualSum(const RepSum& s) : n_(s.rank()) {
    for (const auto& [w, m] : s.terms()) terms_[w] = m;
}

void VirtualSum::add(const GLWeight& w, long long coeff) {
    require_same_rank(n_, w.rank(), "VirtualSum::add");
    if (coeff == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void VirtualSum::add(const VirtualSum& other, long long scale) {
    require_same_rank(n_, other.n_, "VirtualSum::add");
    for (const auto& [w, c] : other.terms_) add(w, c * scale);
}

std::string VirtualSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (c >= 0 && !first) os << " + ";
        if (c < 0) os << (first ? "-" : " - ");
        long long a = c < 0 ? -c : c;
        if (a != 1) os << a << '*';
        os << w.str();
        first = false;
    }
    return os.str();
}

namespace {

// ---- LR tableau enumeration -------------------------------------------------

int part_at(const std::vector<int>& p, int r) {
    return r < static_cast<int>(p.size()) ? p[static_cast<size_t>(r)] : 0;
}

// Counts LR skew tableaux of shape nu/lam with content mu: semistandard
// fillings whose reverse reading word (rows top to bottom, each right to left)
// is a lattice word. Cells are filled in reverse reading order so that the
// lattice property can be enforced prefix by prefix.
long long lr_count(const std::vector<int>& lam, const std::vector<int>& mu,
                   const std::vector<int>& nu) {
    const int rows = static_cast<int>(nu.size());
    const int values = static_cast<int>(mu.size());

    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = nu[static_cast<size_t>(r)] - 1; c >= part_at(lam, r); --c)
            cells.emplace_back(r, c);

    if (cells.empty()) return 1;  // mu is empty here (sizes matched by caller)

    std::vector<std::vector<int>> grid(static_cast<size_t>(rows),
                                       std::vector<int>(static_cast<size_t>(nu[0]), 0));
    std::vector<int> cnt(static_cast<size_t>(values) + 1, 0);
    long long total = 0;

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells[idx];
        int hi = values;
        if (c + 1 < nu[static_cast<size_t>(r)])
            hi = std::min(hi, grid[static_cast<size_t>(r)][static_cast<size_t>(c) + 1]);
        int lo = 1;
        if (r > 0 && c >= part_at(lam, r - 1))
            lo = grid[static_cast<size_t>(r) - 1][static_cast<size_t>(c)] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (cnt[static_cast<size_t>(v)] >= mu[static_cast<size_t>(v) - 1]) continue;
            if (v > 1 && cnt[static_cast<size_t>(v)] >= cnt[static_cast<size_t>(v) - 1]) continue;
            ++cnt[static_cast<size_t>(v)];
            grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            self(self, idx + 1);
            --cnt[static_cast<size_t>(v)];
        }
    };
    rec(rec, 0);
    return total;
}

std::vector<int> strip_zeros(std::vector<int> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// ---- memo cache --------------------------------------------------------------

struct CacheKey {
    std::vector<int> a, b;
    int n;
    auto operator<=>(const CacheKey&) const = default;
};

std::map<CacheKey, RepSum> g_cache;
std::mutex g_cache_mutex;
std::atomic<bool> g_cache_enabled{true};

}  // namespace

void set_lr_cache_enabled(bool enabled) { g_cache_enabled = enabled; }

void clear_lr_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.clear();
}

RepSum lr_partitions(const std::vector<int>& lambda, const std::vector<int>& mu, int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    auto validate = [](const std::vector<int>& p, const char* name) {
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 0)
                throw std::invalid_argument(std::string(name) +
                                            " has negative entries; use lr_general");
            if (i && p[i - 1] < p[i])
                throw std::invalid_argument(std::string(name) + " is not weakly decreasing");
        }
    };
    validate(lambda, "lambda");
    validate(mu, "mu");

    std::vector<int> lam = strip_zeros(lambda);
    std::vector<int> m = strip_zeros(mu);

    RepSum out(n);
    // A factor with more than n rows vanishes in rank n.
    if (static_cast<int>(lam.size()) > n || static_cast<int>(m.size()) > n) return out;
    if (m.empty()) {
        std::vector<int> padded(lam);
        padded.resize(static_cast<size_t>(n), 0);
        out.add(GLWeight(std::move(padded)), 1);
        return out;
    }

    int total = 0;
    for (int x : m) total += x;

    // Enumerate candidate outer shapes nu directly with at most n rows.
    std::vector<int> nu;
    auto enum_nu = [&](auto&& self, int row, int prev, int remaining) -> void {
        if (row == n) {
            if (remaining == 0) {
                long long c = lr_count(lam, m, nu);
                if (c > 0) {
                    std::vector<int> padded(nu);
                    padded.resize(static_cast<size_t>(n), 0);
                    out.add(GLWeight(std::move(padded)), c);
                }
            }
            return;
        }
        const int base = part_at(lam, row);
        int hi = std::min(prev, base + remaining);
        if (row == 0) hi = std::min(hi, part_at(lam, 0) + m[0]);
        for (int v = hi; v >= base; --v) {
            nu.push_back(v);
            self(self, row + 1, v, remaining - (v - base));
            nu.pop_back();
        }
    };
    enum_nu(enum_nu, 0, total + (lam.empty() ? 0 : lam[0]), total);
    return out;
}

RepSum lr_general(const GLWeight& a, const GLWeight& b) {
    require_same_rank(a.rank(), b.rank(), "lr_general");
    const int n = a.rank();
    const int sa = a.at(n - 1);
    const int sb = b.at(n - 1);

    std::vector<int> pa = a.entries(), pb = b.entries();
    for (int& x : pa) x -= sa;
    for (int& x : pb) x -= sb;
    if (pb < pa) std::swap(pa, pb);  // LR is symmetric; normalize the key

    RepSum normalized(n);
    bool cached = false;
    if (g_cache_enabled) {
        CacheKey key{pa, pb, n};
        {
            std::lock_guard<std::mutex> lock(g_cache_mutex);
            auto it = g_cache.find(key);
            if (it != g_cache.end()) {
                normalized = it->second;
                cached = true;
            }
        }
        if (!cached) {
            normalized = lr_partitions(pa, pb, n);
            std::lock_guard<std::mutex> lock(g_cache_mutex);
            g_cache.emplace(std::move(key), normalized);
        }
    } else {
        normalized = lr_partitions(pa, pb, n);
    }
    return normalized.twisted(sa + sb);
}

RepSum pieri(const GLWeight& a, int k) {
    const int n = a.rank();
    if (k < 1 || k > n) throw std::invalid_argument("pieri: column length out of range");
    RepSum out(n);
    std::vector<int> added(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (remaining > n - row) return;
        if (row == n) {
            std::vector<int> e = a.entries();
            for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] += added[static_cast<size_t>(i)];
            out.add(GLWeight(std::move(e)), 1);
            return;
        }
        for (int bit = (remaining > 0 ? 1 : 0); bit >= 0; --bit) {
            if (row > 0) {
                int prev = a.at(row - 1) + added[static_cast<size_t>(row) - 1];
                if (a.at(row) + bit > prev) continue;
            }
            added[static_cast<size_t>(row)] = bit;
            self(self, row + 1, remaining - bit);
            added[static_cast<size_t>(row)] = 0;
        }
    };
    rec(rec, 0, k);
    return out;
}

RepSum tensor(const RepSum& a, const RepSum& b) {
    require_same_rank(a.rank(), b.rank(), "tensor");
    RepSum out(a.rank());
    for (const auto& [wa, ma] : a.terms())
        for (const auto& [wb, mb] : b.terms()) out.add(lr_general(wa, wb), ma * mb);
    return out;
}

}  // namespace lgcoh
