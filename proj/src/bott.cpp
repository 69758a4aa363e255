#include "lgcoh/bott.hpp"

#include <sstream>

namespace lgcoh {

GradedSpRep::GradedSpRep(int rank) : n_(rank) {
    if (rank < 1) throw std::invalid_argument("GradedSpRep rank must be >= 1");
}

void GradedSpRep::add(int degree, const SpWeight& w, long long mult) {
    require_same_rank(n_, w.rank(), "GradedSpRep::add");
    if (mult == 0) return;
    if (mult < 0) throw std::invalid_argument("GradedSpRep multiplicities must be positive");
    if (degree < 0 || degree > lg_dim(n_))
        throw Error("cohomological degree " + std::to_string(degree) + " out of range for n=" +
                    std::to_string(n_));
    comps_[degree][w] += mult;
}

void GradedSpRep::add(const GradedSpRep& other, long long scale) {
    require_same_rank(n_, other.n_, "GradedSpRep::add");
    for (const auto& [d, comp] : other.comps_)
        for (const auto& [w, m] : comp) add(d, w, m * scale);
}

long long GradedSpRep::mult_of(int degree, const SpWeight& w) const {
    auto it = comps_.find(degree);
    if (it == comps_.end()) return 0;
    auto jt = it->second.find(w);
    return jt == it->second.end() ? 0 : jt->second;
}

std::string GradedSpRep::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first_deg = true;
    for (const auto& [d, comp] : comps_) {
        if (!first_deg) os << "; ";
        first_deg = false;
        os << "H^" << d << ": ";
        bool first = true;
        for (const auto& [w, m] : comp) {
            if (!first) os << " + ";
            first = false;
            if (m != 1) os << m << '*';
            os << w.str();
        }
    }
    return os.str();
}

int lg_dim(int n) { return n * (n + 1) / 2; }

GradedSpRep cohomology_weight(const GLWeight& w) {
    const int n = w.rank();
    GradedSpRep out(n);
    const AmbientVector r = rho(n);
    const Regularity reg = regularity(add(w, r));
    if (!reg.is_regular()) return out;
    std::vector<int> mu = reg.dominant().entries();
    for (size_t i = 0; i < mu.size(); ++i) mu[i] -= r.entries[i];
    out.add(reg.length(), SpWeight(std::move(mu)), 1);
    return out;
}

GradedSpRep cohomology_expr(const RepSum& e) {
    GradedSpRep out(e.rank());
    for (const auto& [w, m] : e.terms()) out.add(cohomology_weight(w), m);
    return out;
}

std::map<int, Int> graded_dim(const GradedSpRep& r) {
    std::map<int, Int> out;
    for (const auto& [d, comp] : r.components()) {
        Int total = 0;
        for (const auto& [w, m] : comp) total += Int(m) * sp_dim(w);
        if (total != 0) out[d] = total;
    }
    return out;
}

}  // namespace lgcoh
