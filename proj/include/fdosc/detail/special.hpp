#pragma once

#include <boost/math/special_functions/gamma.hpp>

namespace fdosc::detail {

// boost's lgamma does not touch the global signgam, so it is safe inside
// OpenMP regions.
inline double log_gamma(double x) { return boost::math::lgamma(x); }

}  // namespace fdosc::detail
