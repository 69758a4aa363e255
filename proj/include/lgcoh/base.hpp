#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace lgcoh {

// Intermediate products in the Weyl dimension formulas exceed 64 bits.
using Int = boost::multiprecision::cpp_int;

// Internal invariant violation. User-input problems throw std::invalid_argument.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline long long to_ll(const Int& v) {
    if (v > (std::numeric_limits<long long>::max)() || v < (std::numeric_limits<long long>::min)())
        throw Error("value does not fit in 64 bits: " + v.str());
    return v.convert_to<long long>();
}

}  // namespace lgcoh
