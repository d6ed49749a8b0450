#pragma once

// Derivative-free recurrences for the position-space eigenfunctions.
//
// TPT, u = sin(ax): equating the two first-order relations
//   dpsi_n/du = (lambda+n) u psi_n/(1-u^2) - (2 lambda+n) (N_n/N_{n+1}) psi_{n+1}/(1-u^2)
//   dpsi_n/du = -(lambda+n) u psi_n/(1-u^2) + n (N_n/N_{n-1}) psi_{n-1}/(1-u^2)
// eliminates the derivative:
//   2 (lambda+n) u psi_n = (2 lambda+n) r_n psi_{n+1} + (n / r_{n-1}) psi_{n-1},
//   r_n = N_n/N_{n+1} = sqrt((lambda+n)(n+1) / ((lambda+n+1)(2 lambda+n))),
// seeded by psi_0 = N_0 (1-u^2)^{lambda/2}.
//
// Pseudoharmonic: R_n = N_n rho^s e^{-rho/2} L_n^{2s}(rho) with the
// associated-Laguerre recurrence
//   (k+1) L_{k+1} = (2k + 2s + 1 - rho) L_k - (k + 2s) L_{k-1}.
//
// Both are templated on the scalar so tests can rerun them in extended
// precision.

#include <cmath>
#include <cstddef>
#include <span>

namespace fdosc::detail {

template <class Real>
void tpt_recurrence(Real u, Real lambda, Real ground_norm, std::span<Real> out) {
  using std::pow;
  using std::sqrt;
  if (out.empty()) return;
  const Real one(1);
  const Real two(2);
  out[0] = ground_norm * pow(one - u * u, lambda / two);
  if (out.size() == 1) return;
  Real r_prev(0);
  for (std::size_t n = 0; n + 1 < out.size(); ++n) {
    const Real dn(static_cast<double>(n));
    const Real r = sqrt((lambda + dn) * (dn + one) / ((lambda + dn + one) * (two * lambda + dn)));
    Real numer = two * (lambda + dn) * u * out[n];
    if (n > 0) numer -= dn / r_prev * out[n - 1];
    out[n + 1] = numer / ((two * lambda + dn) * r);
    r_prev = r;
  }
}

/// norms[n] = N_n; writes R_0..R_{size-1}.
template <class Real>
void radial_recurrence(Real rho, Real s, std::span<const Real> norms, std::span<Real> out) {
  using std::exp;
  using std::pow;
  if (out.empty()) return;
  const Real one(1);
  const Real two(2);
  const Real envelope = pow(rho, s) * exp(-rho / two);
  Real l_prev(0);
  Real l_cur = one;
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = norms[k] * envelope * l_cur;
    const Real dk(static_cast<double>(k));
    const Real l_next = ((two * dk + two * s + one - rho) * l_cur - (dk + two * s) * l_prev) / (dk + one);
    l_prev = l_cur;
    l_cur = l_next;
  }
}

}  // namespace fdosc::detail
