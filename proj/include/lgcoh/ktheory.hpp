#pragma once

#include "lgcoh/lr.hpp"

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace lgcoh {

/// Sparse integer Laurent polynomial in n variables. Characters of
/// restrictions to the GL(n) Levi live here; exact sequences are verified as
/// alternating sums of these.
class Character {
public:
    struct VecHash {
        size_t operator()(const std::vector<int>& v) const {
            size_t h = 1469598103934665603ull;
            for (int x : v) {
                h ^= static_cast<size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    using Monomials = std::unordered_map<std::vector<int>, Int, VecHash>;

    explicit Character(int rank);
    static Character one(int rank);

    int rank() const { return n_; }
    bool is_zero() const { return mono_.empty(); }
    size_t size() const { return mono_.size(); }
    const Monomials& monomials() const { return mono_; }

    void add(const std::vector<int>& expo, const Int& coeff);
    void add(const Character& other, const Int& scale = 1);

    Character operator*(const Character& other) const;
    Character operator+(const Character& other) const;
    Character operator-(const Character& other) const;

    /// x_i -> x_i^j (power-sum substitution).
    Character substituted_power(int j) const;
    /// Divides every coefficient by d; throws if not exact.
    Character divided_exact(long long d) const;

    /// Value at x_1 = ... = x_n = 1: the virtual dimension.
    Int eval_ones() const;

    /// Applies a permutation of the variables.
    Character permuted(const std::vector<int>& perm) const;

    bool operator==(const Character& other) const;
    std::string str() const;

private:
    int n_;
    Monomials mono_;
};

/// Schur character of S^w Q, extended to negative entries by the determinant
/// factor. Computed by semistandard tableau enumeration; evaluation at ones
/// equals gl_dim(w).
Character char_weight(const GLWeight& w);

/// Character of a direct sum.
Character char_repsum(const RepSum& s);

/// Character of the ambient 2n-dimensional space restricted to the Levi:
/// sum x_i + sum x_i^{-1}.
Character ambient_char(int n);

/// Symmetric / exterior powers via Newton's identities on power sums.
Character sym_power(const Character& c, int m);
Character ext_power(const Character& c, int m);

/// rank K_0(LG(n,2n)) = 2^n.
long long rank_k0(int n);

// ---- registered exact sequences ---------------------------------------------

struct SequenceTerm {
    int sign;             // coefficient in the alternating sum
    std::string display;  // human-readable form of the term
    Character chr;
};

struct SequenceRecord {
    std::string id;
    int n_min;
    int n_max;
    std::string note;  // what the complex is, mathematically
    std::function<std::vector<SequenceTerm>(int)> build;
};

struct SequenceReport {
    std::string id;
    int n;
    bool ok;
    std::vector<std::string> terms;  // signed term displays
};

const std::vector<SequenceRecord>& sequence_registry();

/// True iff the alternating sum of term characters vanishes identically.
SequenceReport verify_sequence(const std::string& id, int n);

}  // namespace lgcoh
