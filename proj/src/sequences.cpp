#include "lgcoh/ktheory.hpp"

#include <sstream>

// The registered complexes: resolutions and filtrations of Schur bundles built
// from the tautological sequence 0 -> Q* -> V(x)O -> Q -> 0, verified as
// alternating-sum identities of Levi characters.

namespace lgcoh {

namespace {

// A term is a product of named factors, expanded to a character at a given n.
struct Factor {
    enum Kind { WedgeQ, WedgeQDual, SymQ, SymQDual, SchurPrefix, TwistO, AmbSym, AmbExt } kind;
    int arg = 0;
    std::vector<int> prefix;
};

Character factor_char(const Factor& f, int n) {
    switch (f.kind) {
        case Factor::WedgeQ: {
            if (f.arg > n) return Character(n);  // vanishes in rank n
            if (f.arg == 0) return Character::one(n);
            std::vector<int> e(static_cast<size_t>(n), 0);
            std::fill(e.begin(), e.begin() + f.arg, 1);
            return char_weight(GLWeight(std::move(e)));
        }
        case Factor::WedgeQDual: {
            if (f.arg > n) return Character(n);
            if (f.arg == 0) return Character::one(n);
            std::vector<int> e(static_cast<size_t>(n), 0);
            std::fill(e.end() - f.arg, e.end(), -1);
            return char_weight(GLWeight(std::move(e)));
        }
        case Factor::SymQ: {
            if (f.arg == 0) return Character::one(n);
            std::vector<int> e(static_cast<size_t>(n), 0);
            e[0] = f.arg;
            return char_weight(GLWeight(std::move(e)));
        }
        case Factor::SymQDual: {
            if (f.arg == 0) return Character::one(n);
            std::vector<int> e(static_cast<size_t>(n), 0);
            e.back() = -f.arg;
            return char_weight(GLWeight(std::move(e)));
        }
        case Factor::SchurPrefix: {
            std::vector<int> e = f.prefix;
            if (static_cast<int>(e.size()) > n) return Character(n);
            e.resize(static_cast<size_t>(n), 0);
            return char_weight(GLWeight(std::move(e)));
        }
        case Factor::TwistO: {
            std::vector<int> e(static_cast<size_t>(n), f.arg);
            Character c(n);
            c.add(e, 1);
            return c;
        }
        case Factor::AmbSym:
            return sym_power(ambient_char(n), f.arg);
        case Factor::AmbExt:
            return ext_power(ambient_char(n), f.arg);
    }
    throw Error("unknown factor kind");
}

std::string factor_display(const Factor& f) {
    std::ostringstream os;
    switch (f.kind) {
        case Factor::WedgeQ: os << "wedge^" << f.arg << "(Q)"; break;
        case Factor::WedgeQDual: os << "wedge^" << f.arg << "(Q*)"; break;
        case Factor::SymQ: os << "S^" << f.arg << "(Q)"; break;
        case Factor::SymQDual: os << "S^" << f.arg << "(Q*)"; break;
        case Factor::SchurPrefix: {
            os << "S(";
            for (size_t i = 0; i < f.prefix.size(); ++i) {
                if (i) os << ',';
                os << f.prefix[i];
            }
            os << ")Q";
            break;
        }
        case Factor::TwistO: os << "O(" << f.arg << ")"; break;
        case Factor::AmbSym: os << "S^" << f.arg << "(V)"; break;
        case Factor::AmbExt: os << "wedge^" << f.arg << "(V)"; break;
    }
    return os.str();
}

SequenceTerm make_term(int sign, std::vector<Factor> factors, int n) {
    Character c = Character::one(n);
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors) {
        c = c * factor_char(f, n);
        if (!first) os << "*";
        first = false;
        os << factor_display(f);
    }
    if (factors.empty()) os << "O";
    return SequenceTerm{sign, os.str(), std::move(c)};
}

// Complex 0 -> C_0 -> C_1 -> ... -> C_r -> 0 listed in order; signs alternate.
std::vector<SequenceTerm> complex_terms(const std::vector<std::vector<Factor>>& chain, int n) {
    std::vector<SequenceTerm> out;
    int sign = 1;
    for (const auto& fs : chain) {
        out.push_back(make_term(sign, fs, n));
        sign = -sign;
    }
    return out;
}

Factor wq(int k) { return Factor{Factor::WedgeQ, k, {}}; }
Factor wqd(int k) { return Factor{Factor::WedgeQDual, k, {}}; }
Factor sq(int m) { return Factor{Factor::SymQ, m, {}}; }
Factor sqd(int m) { return Factor{Factor::SymQDual, m, {}}; }
Factor ot(int i) { return Factor{Factor::TwistO, i, {}}; }
Factor sv(int m) { return Factor{Factor::AmbSym, m, {}}; }
Factor wv(int m) { return Factor{Factor::AmbExt, m, {}}; }

std::vector<SequenceRecord> build_registry() {
    std::vector<SequenceRecord> reg;

    reg.push_back({"basic-seq", 3, 6, "tautological sequence 0 -> Q* -> V(x)O -> Q -> 0",
                   [](int n) {
                       return complex_terms({{wqd(1)}, {sv(1)}, {wq(1)}}, n);
                   }});

    reg.push_back({"S2Q*-seq", 3, 6,
                   "0 -> S^2Q* -> S^2V(x)O -> V(x)Q -> wedge^2Q -> 0",
                   [](int n) {
                       return complex_terms({{sqd(2)}, {sv(2)}, {sv(1), wq(1)}, {wq(2)}}, n);
                   }});

    reg.push_back({"S2Q-seq", 3, 6,
                   "0 -> wedge^2Q* -> V(x)Q* -> S^2V(x)O -> S^2Q -> 0",
                   [](int n) {
                       return complex_terms({{wqd(2)}, {sv(1), wqd(1)}, {sv(2)}, {sq(2)}}, n);
                   }});

    reg.push_back({"S3Q-seq", 4, 4,
                   "0 -> Q(-1) -> V(x)wedge^2Q(-1) -> S^2V(x)Q* -> S^3V(x)O -> S^3Q -> 0",
                   [](int n) {
                       return complex_terms({{wq(1), ot(-1)},
                                             {sv(1), wq(2), ot(-1)},
                                             {sv(2), wqd(1)},
                                             {sv(3)},
                                             {sq(3)}},
                                            n);
                   }});

    reg.push_back({"S4Q-seq", 4, 4,
                   "0 -> O -> V(x)Q -> S^2V(x)wedge^2Q -> S^3V(x)Q*(1) -> S^4V(x)O(1) -> "
                   "S^4Q(1) -> 0",
                   [](int n) {
                       return complex_terms({{},
                                             {sv(1), wq(1)},
                                             {sv(2), wq(2)},
                                             {sv(3), wqd(1), ot(1)},
                                             {sv(4), ot(1)},
                                             {sq(4), ot(1)}},
                                            n);
                   }});

    for (int m = 1; m <= 4; ++m) {
        reg.push_back({"sym-resolution(" + std::to_string(m) + ")", 3, 6,
                       "Koszul resolution ... -> wedge^iQ*(x)S^{m-i}V(x)O -> ... -> S^mQ -> 0",
                       [m](int n) {
                           std::vector<std::vector<Factor>> chain;
                           const int top = std::min(m, n);
                           for (int i = top; i >= 1; --i) chain.push_back({wqd(i), sv(m - i)});
                           chain.push_back({sv(m)});
                           chain.push_back({sq(m)});
                           return complex_terms(chain, n);
                       }});
    }

    // Both Koszul complexes relating S^* and wedge^* in weight k+2; the
    // exterior-algebra form lists the terms in the reverse direction.
    for (int k = 1; k <= 3; ++k) {
        const int m = k + 2;
        const int lo = k + 3;  // defined for k in [1, n-3]
        reg.push_back({"koszul-sym(" + std::to_string(k) + ")", lo, 6,
                       "0 -> wedge^{k+2}Q -> Q(x)wedge^{k+1}Q -> S^2Q(x)wedge^kQ -> ... -> "
                       "S^{k+2}Q -> 0",
                       [m](int n) {
                           std::vector<std::vector<Factor>> chain;
                           for (int i = 0; i <= m; ++i) chain.push_back({sq(i), wq(m - i)});
                           return complex_terms(chain, n);
                       }});
        reg.push_back({"koszul-ext(" + std::to_string(k) + ")", lo, 6,
                       "0 -> S^{k+2}Q -> ... -> S^2Q(x)wedge^kQ -> Q(x)wedge^{k+1}Q -> "
                       "wedge^{k+2}Q -> 0",
                       [m](int n) {
                           std::vector<std::vector<Factor>> chain;
                           for (int i = m; i >= 0; --i) chain.push_back({sq(i), wq(m - i)});
                           return complex_terms(chain, n);
                       }});
    }

    for (int k = 1; k <= 5; ++k) {
        reg.push_back({"wedge-filtration(" + std::to_string(k) + ")", 3, 6,
                       "filtration of wedge^k(V(x)O) with quotients wedge^iQ*(x)wedge^{k-i}Q",
                       [k](int n) {
                           std::vector<SequenceTerm> out;
                           out.push_back(make_term(1, {wv(k)}, n));
                           for (int i = 0; i <= k; ++i) {
                               auto t = make_term(-1, {wqd(i), wq(k - i)}, n);
                               out.push_back(std::move(t));
                           }
                           return out;
                       }});
    }

    return reg;
}

}  // namespace

const std::vector<SequenceRecord>& sequence_registry() {
    static const std::vector<SequenceRecord> reg = build_registry();
    return reg;
}

SequenceReport verify_sequence(const std::string& id, int n) {
    for (const auto& rec : sequence_registry()) {
        if (rec.id != id) continue;
        if (n < rec.n_min || n > rec.n_max)
            throw std::invalid_argument("sequence " + id + " is registered for n in [" +
                                        std::to_string(rec.n_min) + "," +
                                        std::to_string(rec.n_max) + "], got n=" +
                                        std::to_string(n));
        auto terms = rec.build(n);
        Character residual(n);
        SequenceReport rep{id, n, false, {}};
        for (const auto& t : terms) {
            residual.add(t.chr, t.sign);
            rep.terms.push_back((t.sign >= 0 ? "+ " : "- ") + t.display);
        }
        rep.ok = residual.is_zero();
        return rep;
    }
    throw std::invalid_argument("unknown sequence id: " + id);
}

}  // namespace lgcoh
