#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bunblocks {

// Exact arbitrary-precision carriers used throughout the library.
// Multiplicities and dimensions grow combinatorially with the sweep
// parameters, so nothing numerical is ever stored in machine ints.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

} // namespace bunblocks
