#include "fdosc/coherent_states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/beta.hpp>

#include "fdosc/detail/special.hpp"
#include "fdosc/errors.hpp"

namespace fdosc {

using detail::log_gamma;

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

// Coefficients given as log-magnitude plus phase n*phi. Values at -inf
// (alpha = 0, n > 0) map to exact zeros.
Eigen::VectorXcd from_log_terms(const std::vector<double>& log_mag, double phase, double shift) {
  Eigen::VectorXcd c(idx(log_mag.size()));
  for (std::size_t n = 0; n < log_mag.size(); ++n) {
    const double m = log_mag[n] == -std::numeric_limits<double>::infinity()
                         ? 0.0
                         : std::exp(log_mag[n] - shift);
    c(idx(n)) = std::polar(m, static_cast<double>(n) * phase);
  }
  return c;
}

double log_abs_power(double abs_value, std::size_t n) {
  if (n == 0) return 0.0;
  if (abs_value == 0.0) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(n) * std::log(abs_value);
}

Eigen::VectorXcd normalized_from_logs(const std::vector<double>& log_mag, double phase) {
  const double shift = *std::max_element(log_mag.begin(), log_mag.end());
  Eigen::VectorXcd c = from_log_terms(log_mag, phase, shift);
  c /= c.norm();
  return c;
}

std::vector<double> bg_log_terms(const ModelParams& p, double abs_alpha, std::size_t cutoff) {
  std::vector<double> logs(cutoff);
  switch (p.model) {
    case Model::TPT: {
      const double two_lambda = 2.0 * p.lambda;
      for (std::size_t n = 0; n < cutoff; ++n) {
        const double x = static_cast<double>(n);
        logs[n] = log_abs_power(abs_alpha, n) +
                  0.5 * (x * std::log(two_lambda) + log_gamma(two_lambda) - log_gamma(x + 1.0) -
                         log_gamma(two_lambda + x));
      }
      break;
    }
    case Model::Pseudoharmonic: {
      const double two_s = 2.0 * p.s;
      for (std::size_t n = 0; n < cutoff; ++n) {
        const double x = static_cast<double>(n);
        logs[n] = log_abs_power(abs_alpha, n) +
                  0.5 * (log_gamma(two_s + 1.0) - log_gamma(x + 1.0) - log_gamma(two_s + x + 1.0));
      }
      break;
    }
    case Model::Harmonic:
      throw DomainError("closed-form annihilation eigenstates are defined for TPT and pseudoharmonic models");
  }
  return logs;
}

// log f(n)! = 1/2 sum_{k=1}^{n} log f^2(k), for n < cutoff.
std::vector<double> log_deformed_factorials(const DeformationFunction& f, std::size_t cutoff) {
  std::vector<double> out(cutoff, 0.0);
  for (std::size_t n = 1; n < cutoff; ++n) out[n] = out[n - 1] + 0.5 * std::log(f(n));
  return out;
}

void require_unit_disk(Complex zeta) {
  if (!(std::abs(zeta) < 1.0))
    throw DomainError("displacement parameter outside unit disk (|zeta| = " +
                      std::to_string(std::abs(zeta)) + ")");
}

double log_one_minus_abs2(Complex zeta) { return std::log1p(-std::norm(zeta)); }

double edge_mass(const Eigen::VectorXcd& c) {
  const double total = c.squaredNorm();
  return total > 0.0 ? std::norm(c(c.size() - 1)) / total : 0.0;
}

// exp(c L) for a single-band nilpotent L whose only nonzeros are
// L(n+1, n) = band[n]. Every entry of the exponential is one series term,
// E(m+j, m) = c^j / j! * band[m] ... band[m+j-1].
Eigen::MatrixXcd band_exponential(Complex c, const std::vector<double>& band) {
  const std::size_t n = band.size() + 1;
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(idx(n), idx(n));
  for (std::size_t m = 0; m < n; ++m) {
    Complex term = 1.0;
    e(idx(m), idx(m)) = term;
    for (std::size_t j = 1; m + j < n; ++j) {
      term *= c * band[m + j - 1] / static_cast<double>(j);
      if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
        throw std::overflow_error("factored displacement: exponential factor overflows");
      e(idx(m + j), idx(m)) = term;
    }
  }
  return e;
}

}  // namespace

std::string_view to_string(CoherentMethod m) {
  switch (m) {
    case CoherentMethod::AnnihilationEigenstate: return "annihilation-eigenstate";
    case CoherentMethod::DisplacementFactored: return "displacement-factored";
    case CoherentMethod::DisplacementDirect: return "displacement-direct";
  }
  return "unknown";
}

Eigen::VectorXcd annihilation_recurrence_coefficients(const DeformationFunction& f, Complex alpha,
                                                      std::size_t cutoff) {
  if (cutoff < 1) throw SizeError("cutoff must be positive");
  Eigen::VectorXcd c(idx(cutoff));
  c(0) = 1.0;
  for (std::size_t n = 1; n < cutoff; ++n) {
    c(idx(n)) = alpha * c(idx(n - 1)) / (std::sqrt(static_cast<double>(n)) * std::sqrt(f(n)));
  }
  return c;
}

CoherentStateResult annihilation_eigenstate(const DeformationFunction& f, Complex alpha,
                                            const TruncationPolicy& policy) {
  if (policy.cutoff < 1) throw SizeError("cutoff must be positive");
  std::size_t cutoff = policy.cutoff;
  for (;;) {
    // Running rescale keeps large-|alpha| recurrences finite; the true
    // coefficients are c * exp(log_scale).
    Eigen::VectorXcd c(idx(cutoff));
    double log_scale = 0.0;
    c(0) = 1.0;
    for (std::size_t n = 1; n < cutoff; ++n) {
      c(idx(n)) = alpha * c(idx(n - 1)) / (std::sqrt(static_cast<double>(n)) * std::sqrt(f(n)));
      const double mag = std::abs(c(idx(n)));
      if (mag > 1e150) {
        c.head(idx(n + 1)) /= mag;
        log_scale += std::log(mag);
      }
    }
    const double norm = c.norm();
    const double tail = edge_mass(c);
    if (tail <= policy.tail_tol) {
      CoherentStateResult r;
      r.state = FockVector(c / norm, tail);
      r.method = CoherentMethod::AnnihilationEigenstate;
      r.parameter = alpha;
      r.normalization_constant = std::exp(-log_scale) / norm;
      r.tail_mass = tail;
      r.model = f.params();
      return r;
    }
    if (cutoff >= policy.max_cutoff) {
      throw TruncationError("annihilation eigenstate: tail mass " + std::to_string(tail) +
                                " above tolerance at maximum cutoff " + std::to_string(cutoff),
                            cutoff, tail);
    }
    cutoff = std::min(2 * cutoff, policy.max_cutoff);
  }
}

Eigen::VectorXcd closed_form_bg_terms(const ModelParams& p, Complex alpha, std::size_t cutoff) {
  return from_log_terms(bg_log_terms(p, std::abs(alpha), cutoff), std::arg(alpha), 0.0);
}

FockVector closed_form_bg_coefficients(const ModelParams& p, Complex alpha, std::size_t cutoff) {
  if (cutoff < 1) throw SizeError("cutoff must be positive");
  Eigen::VectorXcd c = normalized_from_logs(bg_log_terms(p, std::abs(alpha), cutoff), std::arg(alpha));
  const double tail = std::norm(c(c.size() - 1));
  return FockVector(std::move(c), tail);
}

Eigen::VectorXcd deformed_bg_terms(const DeformationFunction& f, Complex alpha,
                                   std::size_t cutoff) {
  const auto log_fact = log_deformed_factorials(f, cutoff);
  std::vector<double> logs(cutoff);
  for (std::size_t n = 0; n < cutoff; ++n) {
    logs[n] = log_abs_power(std::abs(alpha), n) - 0.5 * log_gamma(static_cast<double>(n) + 1.0) -
              log_fact[n];
  }
  return from_log_terms(logs, std::arg(alpha), 0.0);
}

Complex zeta_from_alpha(Complex alpha, double lambda_eff) {
  if (!(lambda_eff > 0.0)) throw DomainError("zeta_from_alpha requires lambda_eff > 0");
  const double r = std::abs(alpha);
  if (r == 0.0) return 0.0;
  return std::polar(std::tanh(r / std::sqrt(2.0 * lambda_eff)), std::arg(alpha));
}

double bargmann_index(const ModelParams& p) {
  switch (p.model) {
    case Model::TPT: return p.lambda;
    case Model::Pseudoharmonic: return p.s + 0.5;
    case Model::Harmonic: break;
  }
  throw DomainError("the harmonic model has no su(1,1) displacement state");
}

Eigen::VectorXcd displacement_terms(const ModelParams& p, Complex zeta, std::size_t cutoff) {
  require_unit_disk(zeta);
  const double k = bargmann_index(p);
  const double prefactor = k * log_one_minus_abs2(zeta);
  std::vector<double> logs(cutoff);
  for (std::size_t n = 0; n < cutoff; ++n) {
    const double x = static_cast<double>(n);
    logs[n] = prefactor + log_abs_power(std::abs(zeta), n) +
              0.5 * (log_gamma(x + 2.0 * k) - log_gamma(x + 1.0) - log_gamma(2.0 * k));
  }
  return from_log_terms(logs, std::arg(zeta), 0.0);
}

Eigen::VectorXcd deformed_displacement_terms(const DeformationFunction& f, Complex zeta,
                                             std::size_t cutoff) {
  require_unit_disk(zeta);
  const double k = f.bargmann_index();
  const double prefactor = k * log_one_minus_abs2(zeta);
  const double log_scale = 0.5 * std::log(2.0 * f.lambda_eff());
  const auto log_fact = log_deformed_factorials(f, cutoff);
  std::vector<double> logs(cutoff);
  for (std::size_t n = 0; n < cutoff; ++n) {
    const double x = static_cast<double>(n);
    logs[n] = prefactor + x * log_scale + log_abs_power(std::abs(zeta), n) + log_fact[n] -
              0.5 * log_gamma(x + 1.0);
  }
  return from_log_terms(logs, std::arg(zeta), 0.0);
}

double displacement_tail_mass(double bargmann_k, double zeta_abs2, std::size_t cutoff) {
  if (cutoff == 0) return 1.0;
  if (zeta_abs2 == 0.0) return 0.0;
  return boost::math::ibeta(static_cast<double>(cutoff), 2.0 * bargmann_k, zeta_abs2);
}

CoherentStateResult displacement_state_closed_form(const ModelParams& p, Complex zeta,
                                                   std::size_t cutoff) {
  if (cutoff < 1) throw SizeError("cutoff must be positive");
  Eigen::VectorXcd c = displacement_terms(p, zeta, cutoff);
  const double k = bargmann_index(p);
  CoherentStateResult r;
  r.norm_defect = std::abs(c.norm() - 1.0);
  r.tail_mass = displacement_tail_mass(k, std::norm(zeta), cutoff);
  r.state = FockVector(c / c.norm(), r.tail_mass);
  r.method = CoherentMethod::DisplacementFactored;
  r.parameter = zeta;
  r.normalization_constant = std::exp(k * log_one_minus_abs2(zeta));
  r.model = p;
  return r;
}

namespace {

double displacement_normalization(const DeformationFunction& f, Complex alpha) {
  if (f.is_su11()) {
    const Complex zeta = zeta_from_alpha(alpha, f.lambda_eff());
    return std::exp(f.bargmann_index() * log_one_minus_abs2(zeta));
  }
  return std::exp(-0.5 * f.offset() * std::norm(alpha));
}

}  // namespace

CoherentStateResult displacement_state_direct(const DeformationFunction& f, Complex alpha,
                                              const TruncationPolicy& policy) {
  const auto ladder = ladder_matrices(f, policy.cutoff);
  const Eigen::MatrixXcd generator =
      alpha * ladder.raise.entries - std::conj(alpha) * ladder.lower.entries;
  const Eigen::VectorXcd c = expm(generator).col(0);
  const double tail = edge_mass(c);
  if (tail > policy.tail_tol) {
    throw TruncationError("displacement state: tail mass " + std::to_string(tail) +
                              " above tolerance at cutoff " + std::to_string(policy.cutoff),
                          policy.cutoff, tail);
  }
  CoherentStateResult r;
  r.norm_defect = std::abs(c.norm() - 1.0);
  r.state = FockVector(c / c.norm(), tail);
  r.method = CoherentMethod::DisplacementDirect;
  r.parameter = alpha;
  r.normalization_constant = displacement_normalization(f, alpha);
  r.tail_mass = tail;
  r.model = f.params();
  return r;
}

FockVector FactoredDisplacement::apply_to(const FockVector& v) const {
  return apply(raise_exponential, apply(middle, apply(lower_exponential, v)));
}

FactoredDisplacement factored_displacement_matrices(const DeformationFunction& f, Complex alpha,
                                                    std::size_t cutoff) {
  if (cutoff < 2) throw SizeError("factored displacement needs a cutoff of at least 2");
  std::vector<double> band(cutoff - 1);
  for (std::size_t n = 0; n + 1 < cutoff; ++n) {
    band[n] = std::sqrt(static_cast<double>(n + 1) * f(n + 1));
  }

  Complex c_plus;
  Complex c_minus;
  Complex zeta;
  Eigen::VectorXcd middle(idx(cutoff));
  if (f.is_su11()) {
    zeta = zeta_from_alpha(alpha, f.lambda_eff());
    const double scale = f.ladder_scale();
    c_plus = zeta / scale;
    c_minus = -std::conj(zeta) / scale;
    const double log_base = log_one_minus_abs2(zeta);
    const double k = f.bargmann_index();
    for (std::size_t n = 0; n < cutoff; ++n) {
      middle(idx(n)) = std::exp((k + static_cast<double>(n)) * log_base);
    }
  } else {
    zeta = alpha;
    c_plus = alpha;
    c_minus = -std::conj(alpha);
    middle.setConstant(std::exp(-0.5 * f.offset() * std::norm(alpha)));
  }

  FactoredDisplacement d;
  d.raise_exponential = OperatorMatrix(band_exponential(c_plus, band));
  d.middle = OperatorMatrix::diagonal(middle);
  // A is the transpose of A^+, so exp(c A) = exp(c A^+)^T.
  d.lower_exponential = OperatorMatrix(band_exponential(c_minus, band).transpose());
  d.zeta = zeta;
  return d;
}

CoherentStateResult displacement_state_factored(const DeformationFunction& f, Complex alpha,
                                                std::size_t cutoff) {
  const auto factors = factored_displacement_matrices(f, alpha, cutoff);
  const Eigen::VectorXcd c = factors.apply_to(FockVector::vacuum(cutoff)).coeffs;
  CoherentStateResult r;
  r.norm_defect = std::abs(c.norm() - 1.0);
  r.tail_mass = edge_mass(c);
  r.state = FockVector(c / c.norm(), r.tail_mass);
  r.method = CoherentMethod::DisplacementFactored;
  r.parameter = alpha;
  r.normalization_constant = displacement_normalization(f, alpha);
  r.model = f.params();
  return r;
}

StateComparison compare_states(const FockVector& u, const FockVector& v) {
  if (u.cutoff() != v.cutoff()) throw SizeError("compare_states: cutoff mismatch");
  Eigen::Index largest = 0;
  u.coeffs.cwiseAbs().maxCoeff(&largest);
  const Complex ul = u.coeffs(largest);
  const Complex vl = v.coeffs(largest);
  const double theta = (std::abs(vl) > 0.0 && std::abs(ul) > 0.0) ? std::arg(ul) - std::arg(vl) : 0.0;
  const Eigen::VectorXcd aligned = v.coeffs * std::polar(1.0, theta);

  StateComparison out;
  out.max_abs_coeff_diff = (u.coeffs - aligned).cwiseAbs().maxCoeff();
  out.infidelity = std::max(0.0, 1.0 - std::norm(u.coeffs.dot(v.coeffs)));
  return out;
}

PhotonStatistics photon_statistics(const FockVector& v) {
  PhotonStatistics s;
  for (std::size_t n = 0; n < v.cutoff(); ++n) s.mean += static_cast<double>(n) * std::norm(v[n]);
  for (std::size_t n = 0; n < v.cutoff(); ++n) {
    const double d = static_cast<double>(n) - s.mean;
    s.variance += d * d * std::norm(v[n]);
  }
  if (s.mean > 0.0) s.mandel_q = s.variance / s.mean - 1.0;
  return s;
}

Eigen::VectorXcd glauber_coefficients(Complex alpha, std::size_t cutoff) {
  std::vector<double> logs(cutoff);
  const double r = std::abs(alpha);
  for (std::size_t n = 0; n < cutoff; ++n) {
    logs[n] = -0.5 * r * r + log_abs_power(r, n) - 0.5 * log_gamma(static_cast<double>(n) + 1.0);
  }
  return from_log_terms(logs, std::arg(alpha), 0.0);
}

std::vector<double> harmonic_limit_deviation(Complex alpha, std::span<const double> lambdas,
                                             std::size_t cutoff) {
  for (double l : lambdas)
    if (!(l > 0.5)) throw DomainError("harmonic_limit_deviation requires lambda > 1/2");
  const Eigen::VectorXcd glauber = glauber_coefficients(alpha, cutoff);
  std::vector<double> out(lambdas.size());
  const auto count = static_cast<std::ptrdiff_t>(lambdas.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto p = ModelParams::tpt_with_frequency(lambdas[static_cast<std::size_t>(i)], 1.0);
    const FockVector bg = closed_form_bg_coefficients(p, alpha, cutoff);
    out[static_cast<std::size_t>(i)] = (bg.coeffs - glauber).cwiseAbs().maxCoeff();
  }
  return out;
}

std::vector<double> harmonic_limit_operator_deviation(std::span<const double> lambdas,
                                                      std::size_t n_max) {
  std::vector<double> out;
  out.reserve(lambdas.size());
  for (double l : lambdas) {
    const auto ladder = ladder_matrices(tpt_deformation(ModelParams::tpt_with_frequency(l, 1.0)),
                                        n_max + 1);
    double worst = 0.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      const double target = std::sqrt(static_cast<double>(n));
      worst = std::max(worst, std::abs(ladder.lower(n - 1, n).real() - target));
      worst = std::max(worst, std::abs(ladder.raise(n, n - 1).real() - target));
    }
    out.push_back(worst);
  }
  return out;
}

}  // namespace fdosc
