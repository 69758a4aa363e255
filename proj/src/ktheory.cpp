#include "lgcoh/ktheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace lgcoh {

Character::Character(int rank) : n_(rank) {
    if (rank < 1) throw std::invalid_argument("Character rank must be >= 1");
}

Character Character::one(int rank) {
    Character c(rank);
    c.add(std::vector<int>(static_cast<size_t>(rank), 0), 1);
    return c;
}

void Character::add(const std::vector<int>& expo, const Int& coeff) {
    if (static_cast<int>(expo.size()) != n_)
        throw std::invalid_argument("Character::add: exponent length mismatch");
    if (coeff == 0) return;
    auto it = mono_.find(expo);
    if (it == mono_.end()) {
        mono_.emplace(expo, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) mono_.erase(it);
    }
}

void Character::add(const Character& other, const Int& scale) {
    require_same_rank(n_, other.n_, "Character::add");
    if (scale == 0) return;
    for (const auto& [e, c] : other.mono_) add(e, c * scale);
}

Character Character::operator*(const Character& other) const {
    require_same_rank(n_, other.n_, "Character::operator*");
    Character out(n_);
    out.mono_.reserve(mono_.size() * 2 + other.mono_.size());
    std::vector<int> expo(static_cast<size_t>(n_));
    for (const auto& [ea, ca] : mono_) {
        for (const auto& [eb, cb] : other.mono_) {
            for (int i = 0; i < n_; ++i)
                expo[static_cast<size_t>(i)] =
                    ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
            out.add(expo, ca * cb);
        }
    }
    return out;
}

Character Character::operator+(const Character& other) const {
    Character out = *this;
    out.add(other, 1);
    return out;
}

Character Character::operator-(const Character& other) const {
    Character out = *this;
    out.add(other, -1);
    return out;
}

Character Character::substituted_power(int j) const {
    Character out(n_);
    for (const auto& [e, c] : mono_) {
        std::vector<int> expo = e;
        for (int& x : expo) x *= j;
        out.add(expo, c);
    }
    return out;
}

Character Character::divided_exact(long long d) const {
    if (d == 0) throw Error("Character division by zero");
    Character out(n_);
    for (const auto& [e, c] : mono_) {
        Int q = c / d;
        if (q * d != c) throw Error("Character division not exact");
        out.add(e, q);
    }
    return out;
}

Int Character::eval_ones() const {
    Int t = 0;
    for (const auto& [e, c] : mono_) t += c;
    return t;
}

Character Character::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation length mismatch");
    Character out(n_);
    std::vector<int> expo(static_cast<size_t>(n_));
    for (const auto& [e, c] : mono_) {
        for (int i = 0; i < n_; ++i)
            expo[static_cast<size_t>(perm[static_cast<size_t>(i)])] = e[static_cast<size_t>(i)];
        out.add(expo, c);
    }
    return out;
}

bool Character::operator==(const Character& other) const {
    if (n_ != other.n_ || mono_.size() != other.mono_.size()) return false;
    for (const auto& [e, c] : mono_) {
        auto it = other.mono_.find(e);
        if (it == other.mono_.end() || it->second != c) return false;
    }
    return true;
}

std::string Character::str() const {
    if (mono_.empty()) return "0";
    std::map<std::vector<int>, Int> sorted(mono_.begin(), mono_.end());
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*x^(";
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) os << ',';
            os << e[i];
        }
        os << ')';
    }
    return os.str();
}

namespace {

// Semistandard tableaux of partition shape, entries in 1..n, accumulated as a
// weight generating function.
void enumerate_ssyt(const std::vector<int>& shape, int n, Character& out) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(shape.size()); ++r)
        for (int c = 0; c < shape[static_cast<size_t>(r)]; ++c) cells.emplace_back(r, c);
    if (cells.empty()) {
        out.add(std::vector<int>(static_cast<size_t>(n), 0), 1);
        return;
    }
    std::vector<std::vector<int>> grid(shape.size(),
                                       std::vector<int>(static_cast<size_t>(shape[0]), 0));
    std::vector<int> content(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            out.add(content, 1);
            return;
        }
        const auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[static_cast<size_t>(r)][static_cast<size_t>(c) - 1]);
        if (r > 0) lo = std::max(lo, grid[static_cast<size_t>(r) - 1][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= n; ++v) {
            grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            ++content[static_cast<size_t>(v) - 1];
            self(self, idx + 1);
            --content[static_cast<size_t>(v) - 1];
        }
    };
    rec(rec, 0);
}

struct CharKey {
    std::vector<int> shape;
    int n;
    auto operator<=>(const CharKey&) const = default;
};

std::map<CharKey, Character> g_char_cache;
std::mutex g_char_mutex;

}  // namespace

Character char_weight(const GLWeight& w) {
    const int n = w.rank();
    const int shift = w.at(n - 1);
    std::vector<int> shape = w.entries();
    for (int& x : shape) x -= shift;
    while (!shape.empty() && shape.back() == 0) shape.pop_back();

    Character normalized(n);
    {
        CharKey key{shape, n};
        std::lock_guard<std::mutex> lock(g_char_mutex);
        auto it = g_char_cache.find(key);
        if (it != g_char_cache.end()) {
            normalized = it->second;
        } else {
            Character fresh(n);
            enumerate_ssyt(shape, n, fresh);
            g_char_cache.emplace(std::move(key), fresh);
            normalized = std::move(fresh);
        }
    }
    if (shift == 0) return normalized;

    Character out(n);
    for (const auto& [e, c] : normalized.monomials()) {
        std::vector<int> expo = e;
        for (int& x : expo) x += shift;
        out.add(expo, c);
    }
    return out;
}

Character char_repsum(const RepSum& s) {
    Character out(s.rank());
    for (const auto& [w, m] : s.terms()) out.add(char_weight(w), m);
    return out;
}

Character ambient_char(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    Character out(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        out.add(e, 1);
        e[static_cast<size_t>(i)] = -1;
        out.add(e, 1);
    }
    return out;
}

namespace {

// Newton's identities; exact division at every step.
std::vector<Character> power_series(const Character& c, int m,
                                    bool exterior) {
    std::vector<Character> p;
    p.reserve(static_cast<size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) p.push_back(j == 0 ? Character::one(c.rank()) : c.substituted_power(j));

    std::vector<Character> out;
    out.push_back(Character::one(c.rank()));
    for (int k = 1; k <= m; ++k) {
        Character acc(c.rank());
        for (int j = 1; j <= k; ++j) {
            Character term = out[static_cast<size_t>(k - j)] * p[static_cast<size_t>(j)];
            long long sign = exterior ? ((j % 2 == 1) ? 1 : -1) : 1;
            acc.add(term, sign);
        }
        out.push_back(acc.divided_exact(k));
    }
    return out;
}

}  // namespace

Character sym_power(const Character& c, int m) {
    if (m < 0) throw std::invalid_argument("negative symmetric power");
    return power_series(c, m, false).back();
}

Character ext_power(const Character& c, int m) {
    if (m < 0) throw std::invalid_argument("negative exterior power");
    return power_series(c, m, true).back();
}

long long rank_k0(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    if (n > 62) throw std::invalid_argument("rank too large");
    return 1ll << n;
}

}  // namespace lgcoh
