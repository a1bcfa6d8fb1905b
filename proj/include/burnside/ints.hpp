#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace burnside {

// Exact integer type used for ring coefficients, marks and lattice entries.
// Group element indices stay plain int; everything a user can scale or
// multiply is arbitrary precision so results are exact, full stop.
using Int = boost::multiprecision::cpp_int;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Throws std::overflow_error if v does not fit.
std::int64_t to_int64(const Int& v);

// Floor division (rounds toward -infinity). b must be nonzero.
Int floor_div(const Int& a, const Int& b);

std::string int_to_string(const Int& v);

std::string vec_to_string(const IntVec& v);

}  // namespace burnside
