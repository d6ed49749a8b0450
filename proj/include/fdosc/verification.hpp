#pragma once

// Machine checks of the algebraic identities. Each returns one or more named
// CheckResult rows; the CLI collects them into report.json and the
// acceptance suite asserts on them.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdosc/coherent_states.hpp"
#include "fdosc/model_catalog.hpp"

namespace fdosc::verify {

struct CheckResult {
  std::string id;
  nlohmann::json parameters = nlohmann::json::object();
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Basis indices left out because of truncation, e.g. "n = N-1 = 127".
  std::string excluded;
};

void to_json(nlohmann::json& j, const CheckResult& c);

nlohmann::json describe(const ModelParams& p);

/// Deformed Hamiltonian diagonal vs the model spectrum, relative error, n <= n_max.
/// Symmetric form for TPT and harmonic, antisymmetric for pseudoharmonic.
CheckResult spectrum_identity(const ModelParams& p, std::size_t n_max, double tol);

/// Model commutation relations on the truncation interior (row and column
/// below N-1):
///   TPT:            [b,b+] = b0 = 1 + n/lambda, [b,b0] = b/lambda, [b+,b0] = -b+/lambda
///   pseudoharmonic: [A,A+] = 2 A0, [A0,A] = -A, [A0,A+] = A+   (A0 = n + s + 1/2)
///   harmonic:       [a,a+] = 1
/// plus raise == transpose(lower). Deviations are entrywise, relative to
/// max(1, |expected entry|).
std::vector<CheckResult> commutator_suite(const ModelParams& p, std::size_t cutoff, double tol);

/// A |alpha> = alpha |alpha> on coefficients n <= N-2.
CheckResult eigenstate_property(const ModelParams& p, Complex alpha, std::size_t cutoff,
                                double tol);

/// Ladder-operator closed forms vs deformed-operator forms (and the
/// recurrence), coefficientwise on normalized / exact coefficients.
std::vector<CheckResult> structural_identity(const ModelParams& p, Complex alpha,
                                             std::size_t cutoff, double tol);

/// Direct exp(alpha A+ - alpha* A)|0> vs the ordered factored product vs
/// the closed form at zeta(alpha). The direct state must reach `tail_tol`
/// at the given cutoff, otherwise TruncationError is thrown.
std::vector<CheckResult> displacement_suite(const ModelParams& p, Complex alpha,
                                            std::size_t cutoff, double tol,
                                            double tail_tol = 1e-20);

/// sum_{n<N} |c_n|^2 + I_{|zeta|^2}(N, 2k) = 1.
CheckResult displacement_normalization(const ModelParams& p, Complex zeta, std::size_t cutoff,
                                       double tol);

struct HarmonicLimitData {
  std::vector<double> lambdas;
  std::vector<double> state_deviation;
  std::vector<double> operator_deviation;
  double rate_exponent = 0.0;
};

HarmonicLimitData harmonic_limit_data(Complex alpha, std::span<const double> lambdas,
                                      std::size_t cutoff, std::size_t operator_levels = 10);

/// Least-squares slope of log(deviation) against log(1/lambda).
double rate_exponent(std::span<const double> lambdas, std::span<const double> deviations);

/// Strict decrease of the state deviation, final deviation below
/// final_bound, and operator rate exponent within 1 +- rate_tol.
std::vector<CheckResult> harmonic_limit_suite(const HarmonicLimitData& data, double final_bound,
                                              double rate_tol);

/// Finite-difference fit of the differential ladder operators against the
/// algebraic coefficients, relative error, levels 0..n_max.
std::vector<CheckResult> ladder_fd_suite(const ModelParams& p, std::size_t n_max, double tol,
                                         double h = 1e-5, std::size_t node_count = 201);

/// Gram matrix of the first n_max + 1 eigenfunctions vs identity.
CheckResult orthonormality(const ModelParams& p, std::size_t n_max, double tol);

}  // namespace fdosc::verify
