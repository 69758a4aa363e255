#include "lgcoh/weights.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace lgcoh {

namespace {

std::string join_entries(const std::vector<int>& e) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << ')';
    return os.str();
}

}  // namespace

GLWeight::GLWeight(std::vector<int> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw std::invalid_argument("GL weight must have positive rank");
    for (size_t i = 1; i < e_.size(); ++i) {
        if (e_[i - 1] < e_[i]) {
            throw std::invalid_argument("not weakly decreasing at index " + std::to_string(i) +
                                        ": entry " + std::to_string(e_[i]) + " exceeds entry " +
                                        std::to_string(e_[i - 1]));
        }
    }
}

std::string GLWeight::str() const { return join_entries(e_); }

std::string AmbientVector::str() const { return join_entries(entries); }

SpWeight::SpWeight(std::vector<int> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw std::invalid_argument("Sp weight must have positive rank");
    for (size_t i = 1; i < e_.size(); ++i)
        if (e_[i - 1] < e_[i])
            throw std::invalid_argument("Sp weight not weakly decreasing at index " +
                                        std::to_string(i));
    if (e_.back() < 0) throw std::invalid_argument("Sp weight must have nonnegative entries");
}

bool SpWeight::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

std::string SpWeight::str() const { return join_entries(e_); }

SpWeight omega(int i, int n) {
    if (i < 1 || i > n) throw std::invalid_argument("fundamental weight index out of range");
    std::vector<int> e(static_cast<size_t>(n), 0);
    std::fill(e.begin(), e.begin() + i, 1);
    return SpWeight(std::move(e));
}

Regularity Regularity::singular() { return Regularity{}; }

Regularity Regularity::regular(int length, SpWeight dominant) {
    Regularity r;
    r.regular_ = true;
    r.length_ = length;
    r.dominant_ = std::move(dominant);
    return r;
}

int Regularity::length() const {
    if (!regular_) throw Error("length of a singular weight requested");
    return length_;
}

const SpWeight& Regularity::dominant() const {
    if (!regular_) throw Error("dominant representative of a singular weight requested");
    return dominant_;
}

AmbientVector rho(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    std::vector<int> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = n - i;
    return AmbientVector{std::move(e)};
}

GLWeight dual_weight(const GLWeight& w) {
    std::vector<int> e(w.entries().rbegin(), w.entries().rend());
    for (int& x : e) x = -x;
    return GLWeight(std::move(e));
}

GLWeight twist(const GLWeight& w, int i) {
    std::vector<int> e = w.entries();
    for (int& x : e) x += i;
    return GLWeight(std::move(e));
}

AmbientVector add(const GLWeight& w, const AmbientVector& v) {
    require_same_rank(w.rank(), v.rank(), "weight + vector");
    std::vector<int> e = w.entries();
    for (size_t i = 0; i < e.size(); ++i) e[i] += v.entries[i];
    return AmbientVector{std::move(e)};
}

Regularity regularity(const AmbientVector& v) {
    const auto& e = v.entries;
    const int n = v.rank();
    if (n < 1) throw std::invalid_argument("empty vector");

    std::vector<int> absv(e.size());
    for (int i = 0; i < n; ++i) {
        if (e[static_cast<size_t>(i)] == 0) return Regularity::singular();
        absv[static_cast<size_t>(i)] = std::abs(e[static_cast<size_t>(i)]);
    }
    std::sort(absv.begin(), absv.end(), std::greater<int>());
    for (int i = 0; i + 1 < n; ++i)
        if (absv[static_cast<size_t>(i)] == absv[static_cast<size_t>(i) + 1])
            return Regularity::singular();

    // Count positive roots of C_n made negative: 2e_i, e_i+e_j, e_i-e_j.
    int length = 0;
    for (int i = 0; i < n; ++i)
        if (e[static_cast<size_t>(i)] < 0) ++length;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (e[static_cast<size_t>(i)] + e[static_cast<size_t>(j)] < 0) ++length;
            if (e[static_cast<size_t>(i)] - e[static_cast<size_t>(j)] < 0) ++length;
        }
    return Regularity::regular(length, SpWeight(std::move(absv)));
}

namespace {

int straighten_count(std::vector<int> w, std::mt19937* rng) {
    const int n = static_cast<int>(w.size());
    const int max_steps = n * n + 1;
    int steps = 0;
    std::vector<int> moves;
    for (;;) {
        moves.clear();
        for (int i = 0; i + 1 < n; ++i)
            if (w[static_cast<size_t>(i)] < w[static_cast<size_t>(i) + 1]) moves.push_back(i);
        if (w[static_cast<size_t>(n) - 1] < 0) moves.push_back(n - 1);
        if (moves.empty()) return steps;
        int pick = 0;
        if (rng && moves.size() > 1)
            pick = static_cast<int>(
                std::uniform_int_distribution<size_t>(0, moves.size() - 1)(*rng));
        int m = moves[static_cast<size_t>(pick)];
        if (m == n - 1 && w[static_cast<size_t>(m)] < 0)
            w[static_cast<size_t>(m)] = -w[static_cast<size_t>(m)];
        else
            std::swap(w[static_cast<size_t>(m)], w[static_cast<size_t>(m) + 1]);
        if (++steps > max_steps) throw Error("straightening did not terminate");
    }
}

}  // namespace

int reflection_length_oracle(const AmbientVector& v) {
    if (!regularity(v).is_regular())
        throw std::invalid_argument("singular vector: no canonical straightening");
    return straighten_count(v.entries, nullptr);
}

int reflection_length_oracle(const AmbientVector& v, std::mt19937& rng) {
    if (!regularity(v).is_regular())
        throw std::invalid_argument("singular vector: no canonical straightening");
    return straighten_count(v.entries, &rng);
}

namespace {

Int exact_div(const Int& num, const Int& den, const char* what) {
    if (den == 0) throw Error(std::string(what) + ": zero denominator");
    Int q = num / den;
    if (q * den != num) throw Error(std::string(what) + ": division not exact");
    return q;
}

}  // namespace

Int sp_dim(const SpWeight& mu) {
    const int n = mu.rank();
    // l_i = mu_i + n + 1 - i, m_i = n + 1 - i (1-indexed).
    std::vector<Int> l(static_cast<size_t>(n)), m(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        l[static_cast<size_t>(i) - 1] = mu.at(i - 1) + n + 1 - i;
        m[static_cast<size_t>(i) - 1] = n + 1 - i;
    }
    Int num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        num *= l[static_cast<size_t>(i)];
        den *= m[static_cast<size_t>(i)];
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= l[static_cast<size_t>(i)] * l[static_cast<size_t>(i)] -
                   l[static_cast<size_t>(j)] * l[static_cast<size_t>(j)];
            den *= m[static_cast<size_t>(i)] * m[static_cast<size_t>(i)] -
                   m[static_cast<size_t>(j)] * m[static_cast<size_t>(j)];
        }
    Int d = exact_div(num, den, "sp_dim");
    if (d <= 0) throw Error("sp_dim not positive for " + mu.str());
    return d;
}

Int gl_dim(const GLWeight& w) {
    const int n = w.rank();
    Int num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= w.at(i) - w.at(j) + j - i;
            den *= j - i;
        }
    return exact_div(num, den, "gl_dim");
}

GLWeight parse_gl_weight(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '(')
        throw std::invalid_argument("weight must start with '(': " + text);
    ++pos;
    std::vector<int> entries;
    for (;;) {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer in weight: " + text);
        entries.push_back(std::stoi(text.substr(start, pos - start)));
        skip_ws();
        if (pos >= text.size()) throw std::invalid_argument("unterminated weight: " + text);
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] == ')') {
            ++pos;
            break;
        }
        throw std::invalid_argument("unexpected character in weight: " + text);
    }
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("trailing characters after weight: " + text);
    return GLWeight(std::move(entries));
}

void require_same_rank(int a, int b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": rank mismatch (" + std::to_string(a) +
                                    " vs " + std::to_string(b) + ")");
}

}  // namespace lgcoh
