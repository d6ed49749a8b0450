#pragma once

#include <cstddef>
#include <vector>

namespace fdosc {

struct GaussLegendreRule {
  std::vector<double> nodes;  // ascending, on (-1, 1)
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on the Legendre
/// three-term recurrence). Throws SizeError for n < 1.
GaussLegendreRule gauss_legendre(std::size_t n);

}  // namespace fdosc
