#include "burnside/ints.hpp"

#include <limits>
#include <stdexcept>

namespace burnside {

std::int64_t to_int64(const Int& v) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  return static_cast<std::int64_t>(v);
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string int_to_string(const Int& v) { return v.str(); }

std::string vec_to_string(const IntVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  out += ")";
  return out;
}

}  // namespace burnside
