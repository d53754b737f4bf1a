#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace cspace {

// 50 decimal digits; enough headroom for Newton on the ell ~ 1e5 systems.
using Extended = boost::multiprecision::cpp_bin_float_50;

enum class Precision { Double, Extended };

const char* to_string(Precision p);

} // namespace cspace
