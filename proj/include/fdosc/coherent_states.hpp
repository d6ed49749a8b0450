#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fdosc/fock_algebra.hpp"
#include "fdosc/model_catalog.hpp"

namespace fdosc {

enum class CoherentMethod { AnnihilationEigenstate, DisplacementFactored, DisplacementDirect };

std::string_view to_string(CoherentMethod m);

/// Cutoff handling for constructions that can grow the basis.
struct TruncationPolicy {
  std::size_t cutoff = 64;
  double tail_tol = 1e-20;
  std::size_t max_cutoff = 4096;
};

struct CoherentStateResult {
  FockVector state;  ///< normalized on the truncated basis
  CoherentMethod method = CoherentMethod::AnnihilationEigenstate;
  Complex parameter;  ///< alpha, or zeta for the closed-form displacement state
  /// N_f for annihilation eigenstates (relative to c_0 = 1); (1 - |zeta|^2)^k
  /// for displacement states.
  double normalization_constant = 1.0;
  double tail_mass = 0.0;
  /// | ||raw truncated state|| - 1 | before renormalization.
  double norm_defect = 0.0;
  ModelParams model;

  std::size_t cutoff() const { return state.cutoff(); }
};

// ---------------------------------------------------------------------------
// Annihilation-operator eigenstates

/// Raw recurrence c_0 = 1, c_n = alpha c_{n-1} / (sqrt(n) f(n)), unnormalized.
Eigen::VectorXcd annihilation_recurrence_coefficients(const DeformationFunction& f, Complex alpha,
                                                      std::size_t cutoff);

/// Normalized eigenstate of the deformed annihilation operator. The cutoff is
/// doubled (up to policy.max_cutoff) until |c_{N-1}|^2 / sum |c|^2 <=
/// policy.tail_tol; throws TruncationError otherwise.
CoherentStateResult annihilation_eigenstate(const DeformationFunction& f, Complex alpha,
                                            const TruncationPolicy& policy = {});

/// Ladder-operator closed form, C_0 = 1:
///   TPT:            alpha^n sqrt((2 lambda)^n Gamma(2 lambda) / (n! Gamma(2 lambda + n)))
///   pseudoharmonic: alpha^n sqrt(Gamma(2s + 1) / (n! Gamma(2s + n + 1)))
Eigen::VectorXcd closed_form_bg_terms(const ModelParams& p, Complex alpha, std::size_t cutoff);

/// closed_form_bg_terms, normalized over the truncated basis.
FockVector closed_form_bg_coefficients(const ModelParams& p, Complex alpha, std::size_t cutoff);

/// Deformed-operator route: alpha^n / (sqrt(n!) f(n)!), with
/// f(n)! = f(n) f(n-1) ... f(1) (empty product 1). Unnormalized.
Eigen::VectorXcd deformed_bg_terms(const DeformationFunction& f, Complex alpha,
                                   std::size_t cutoff);

// ---------------------------------------------------------------------------
// Displacement-operator states

/// zeta = e^{i phi} tanh(|alpha| / sqrt(2 lambda_eff)), alpha = |alpha| e^{i phi}.
Complex zeta_from_alpha(Complex alpha, double lambda_eff);

/// Bargmann index k of the su(1,1) realization: lambda (TPT), s + 1/2
/// (pseudoharmonic). Throws DomainError for the harmonic model.
double bargmann_index(const ModelParams& p);

/// Exact coefficients (1 - |zeta|^2)^k sqrt(Gamma(n + 2k) / (n! Gamma(2k))) zeta^n
/// for n < cutoff, not renormalized.
Eigen::VectorXcd displacement_terms(const ModelParams& p, Complex zeta, std::size_t cutoff);

/// Deformed-operator route:
///   (1 - |zeta|^2)^k (2 lambda_eff)^{n/2} zeta^n f(n)! / sqrt(n!)
/// with the same f(n)! convention as deformed_bg_terms.
Eigen::VectorXcd deformed_displacement_terms(const DeformationFunction& f, Complex zeta,
                                             std::size_t cutoff);

/// Probability mass above the cutoff, sum_{n >= N} |c_n|^2, from the
/// negative-binomial identity sum_n Gamma(n+2k)/(n! Gamma(2k)) x^n = (1-x)^{-2k}:
/// the regularized incomplete beta I_{|zeta|^2}(N, 2k).
double displacement_tail_mass(double bargmann_k, double zeta_abs2, std::size_t cutoff);

/// Closed-form displacement state. Throws DomainError unless |zeta| < 1.
CoherentStateResult displacement_state_closed_form(const ModelParams& p, Complex zeta,
                                                   std::size_t cutoff);

/// exp(alpha A^+ - alpha^* A)|0> through the Pade kernel. tail_mass is
/// |c_{N-1}|^2; throws TruncationError when it exceeds policy.tail_tol.
CoherentStateResult displacement_state_direct(const DeformationFunction& f, Complex alpha,
                                              const TruncationPolicy& policy = {});

/// Ordered factors of the disentangled displacement operator:
///   D = exp(c_+ A^+) * middle * exp(c_- A)
/// su(1,1) deformations: c_+ = zeta / sqrt(slope), middle = (1-|zeta|^2)^{k+n},
/// c_- = -zeta^* / sqrt(slope). Constant f^2 = b: c_+ = alpha,
/// middle = exp(-b |alpha|^2 / 2), c_- = -alpha^*.
struct FactoredDisplacement {
  OperatorMatrix raise_exponential;
  OperatorMatrix middle;
  OperatorMatrix lower_exponential;
  Complex zeta;

  FockVector apply_to(const FockVector& v) const;
};

FactoredDisplacement factored_displacement_matrices(const DeformationFunction& f, Complex alpha,
                                                    std::size_t cutoff);

/// Factored product applied to |0>.
CoherentStateResult displacement_state_factored(const DeformationFunction& f, Complex alpha,
                                                std::size_t cutoff);

// ---------------------------------------------------------------------------
// Diagnostics

struct StateComparison {
  double max_abs_coeff_diff = 0.0;
  double infidelity = 0.0;
};

/// Phase-aligned coefficient distance (phase fixed on the largest |u_n|)
/// and 1 - |<u|v>|^2. Throws SizeError on mismatched cutoffs.
StateComparison compare_states(const FockVector& u, const FockVector& v);

struct PhotonStatistics {
  double mean = 0.0;
  double variance = 0.0;
  std::optional<double> mandel_q;  ///< absent when mean == 0
};

PhotonStatistics photon_statistics(const FockVector& v);

/// e^{-|alpha|^2/2} alpha^n / sqrt(n!) for n < cutoff.
Eigen::VectorXcd glauber_coefficients(Complex alpha, std::size_t cutoff);

/// max_n |c_n(lambda) - g_n| between the normalized TPT annihilation
/// eigenstate and the Glauber state, one entry per lambda.
std::vector<double> harmonic_limit_deviation(Complex alpha, std::span<const double> lambdas,
                                             std::size_t cutoff);

/// max_{n < n_max} over both ladder matrices of |b_{-/+}(n) - sqrt(n)|, one
/// entry per lambda.
std::vector<double> harmonic_limit_operator_deviation(std::span<const double> lambdas,
                                                      std::size_t n_max);

}  // namespace fdosc
