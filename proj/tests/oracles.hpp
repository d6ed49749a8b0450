#pragma once

// Independent reference values used across the unit tests. Nothing here
// calls into the library.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

/// Root of g on [lo, hi] by bisection; g(lo) and g(hi) must differ in sign.
inline double bisect(const std::function<double(double)>& g, double lo, double hi) {
  double glo = g(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((gm < 0) == (glo < 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// e^{-|alpha|^2/2} alpha^n / sqrt(n!) by direct multiplication.
inline std::vector<std::complex<double>> glauber(std::complex<double> alpha, std::size_t n) {
  std::vector<std::complex<double>> c(n);
  std::complex<double> term = std::exp(-0.5 * std::norm(alpha));
  for (std::size_t k = 0; k < n; ++k) {
    c[k] = term;
    term *= alpha / std::sqrt(static_cast<double>(k + 1));
  }
  return c;
}

/// Composite Simpson rule on [a, b] with m (even) panels.
inline double simpson(const std::function<double(double)>& g, double a, double b, int m) {
  const double h = (b - a) / m;
  double sum = g(a) + g(b);
  for (int i = 1; i < m; ++i) sum += (i % 2 ? 4.0 : 2.0) * g(a + i * h);
  return sum * h / 3.0;
}

}  // namespace oracle
