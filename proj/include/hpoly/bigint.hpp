#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hpoly {

// Exact arbitrary-precision integer used for polynomial coefficients, group
// orders and evaluation results.  Overflow is never acceptable here.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace hpoly
