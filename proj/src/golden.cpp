#include "lgcoh/collections.hpp"

// Frozen expected PAPER_ASSERTED pair sets, one "src>dst" entry per backward
// pair whose vanishing the piecewise bounds cannot certify (sorted). Any drift
// against these lists means the engine got stronger or weaker and is reported
// via exit code 2.

namespace lgcoh {

namespace {

const std::vector<std::string> kLg48Asserted = {
    "Q(1)>E_1",
    "Q>E_1",
    "wedge^2Q>E_1",
};

const std::vector<std::string> kLg510Asserted = {
    "E_2(5)>G",
    "E_2(5)>Q",
    "G(3)>E_2(2)",
    "G(3)>E_2(3)",
    "G(3)>Q(3)",
    "G(3)>wedge^2Q(3)",
    "G(3)>wedge^3Q(3)",
    "G>E_2",
    "G>Q",
    "G>wedge^2Q",
    "G>wedge^3Q",
    "Q(1)>E_2",
    "Q(2)>E_2(1)",
    "Q(3)>E_2(2)",
    "Q(4)>E_2(3)",
    "Q(5)>E_2(4)",
    "wedge^3Q(1)>E_2(1)",
    "wedge^3Q(2)>E_2(2)",
    "wedge^3Q(3)>E_2(3)",
    "wedge^3Q(4)>E_2(4)",
    "wedge^3Q(5)>E_2(5)",
    "wedge^3Q>E_2",
};

}  // namespace

const std::vector<std::string>& golden_asserted(const std::string& name) {
    if (name == "lg48") return kLg48Asserted;
    if (name == "lg510") return kLg510Asserted;
    throw std::invalid_argument("unknown collection: " + name);
}

}  // namespace lgcoh
