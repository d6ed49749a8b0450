#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fdosc/fock_algebra.hpp"
#include "fdosc/model_catalog.hpp"

namespace fdosc {

/// Integration measure of a grid.
///   TptDuOverSqrt: dx = du / (a sqrt(1 - u^2)), nodes in u = sin(ax)
///   RadialDrho:    r dr = d rho / 2 (2-D radial measure, rho = r^2)
enum class Measure { TptDuOverSqrt, RadialDrho };

/// Nodes and weights of a Gauss-Legendre rule carried to the model's
/// coordinate; weights include the measure. `reference_nodes` and
/// `reference_weights` are the underlying rule on [-1, 1].
struct QuadratureGrid {
  Measure measure = Measure::TptDuOverSqrt;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> reference_nodes;
  std::vector<double> reference_weights;

  std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre in theta = a x over (-pi/2, pi/2), mapped to u = sin(theta).
std::shared_ptr<const QuadratureGrid> make_tpt_grid(std::size_t node_count, const ModelParams& p);

/// Gauss-Legendre in r = sqrt(rho) over (0, sqrt(rho_max)).
std::shared_ptr<const QuadratureGrid> make_radial_grid(std::size_t node_count, double rho_max);

template <class T>
struct GridFunction {
  std::shared_ptr<const QuadratureGrid> grid;
  std::vector<T> values;

  Measure measure() const { return grid->measure; }
  std::span<const double> nodes() const { return grid->nodes; }
};

using RealGridFunction = GridFunction<double>;
using ComplexGridFunction = GridFunction<std::complex<double>>;

// ---------------------------------------------------------------------------
// Eigenfunctions

/// psi_0(u) = N_0 (1 - u^2)^{lambda/2}. Throws DomainError for |u| >= 1.
double tpt_ground(double u, const ModelParams& p);

/// psi_n(u) from the derivative-free three-term recurrence.
double tpt_eigenfunction(std::size_t n, double u, const ModelParams& p);

/// psi_0..psi_{n_max} at u.
std::vector<double> tpt_eigenfunctions(std::size_t n_max, double u, const ModelParams& p);

/// R_n(rho) = N_n rho^s e^{-rho/2} L_n^{2s}(rho), N_n = sqrt(2 n! / Gamma(n+2s+1)).
/// Throws DomainError for rho <= 0.
double pseudoharmonic_radial(std::size_t n, double s, double rho);

std::vector<double> pseudoharmonic_radials(std::size_t n_max, double s, double rho);

RealGridFunction tpt_eigenfunction_on_grid(std::size_t n,
                                           std::shared_ptr<const QuadratureGrid> grid,
                                           const ModelParams& p);
RealGridFunction radial_on_grid(std::size_t n, double s,
                                std::shared_ptr<const QuadratureGrid> grid);

// ---------------------------------------------------------------------------
// Finite-difference ladder checks

/// Least-squares coefficients c_-/+ of M_-/+ psi_n ~ c psi_{n-/+1} over a
/// node set, and the largest pointwise residual of each fit. For n = 0 the
/// lowering coefficient is 0 and residual_minus is max |M_- psi_0|.
struct LadderFit {
  double coeff_minus = 0.0;
  double coeff_plus = 0.0;
  double residual_minus = 0.0;
  double residual_plus = 0.0;
};

/// M_+ = (1-u^2)(-d/du + eps u/(1-u^2)) sqrt((eps+1)/eps),
/// M_- = (1-u^2)( d/du + eps u/(1-u^2)) sqrt((eps-1)/eps), eps = lambda + n,
/// with central differences of step h. Nodes must satisfy |u| + h < 1.
LadderFit ladder_action_fd(std::size_t n, const ModelParams& p, std::span<const double> nodes,
                           double h = 1e-5);

/// L_- = -rho d/drho + s + n - rho/2, L_+ = rho d/drho + s + n + 1 - rho/2,
/// with the number operator taken as the level n of the state acted on.
/// Nodes must satisfy rho - h > 0.
LadderFit pseudoharmonic_ladder_fd(std::size_t n, double s, std::span<const double> nodes,
                                   double h = 1e-5);

/// Uniformly spaced nodes on [lo, hi].
std::vector<double> uniform_nodes(double lo, double hi, std::size_t count);

// ---------------------------------------------------------------------------
// Quadrature

struct QuadratureEstimate {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// int fa fb dmu on the shared grid. The error estimate is the size of the
/// highest discrete Legendre coefficients of the integrand in the reference
/// variable. Throws QuadratureError when the grids differ.
QuadratureEstimate overlap_quadrature(const RealGridFunction& fa, const RealGridFunction& fb);

/// int conj(fa) fb dmu.
std::complex<double> overlap_quadrature(const ComplexGridFunction& fa,
                                        const ComplexGridFunction& fb);

struct GramResult {
  Eigen::MatrixXd gram;
  std::size_t nodes = 0;
  /// max-entry change between the last two node counts
  double convergence = 0.0;
  /// radial grids: integral of R_n^2 beyond rho_max (max over n); 0 otherwise
  double tail_bound = 0.0;
  double rho_max = 0.0;
};

/// Gram matrix of psi_0..psi_{n_max}; node count doubled from `start_nodes`
/// until successive estimates agree to `tol`. Throws QuadratureError if
/// `max_nodes` is reached first.
GramResult tpt_gram_matrix(const ModelParams& p, std::size_t n_max, double tol = 1e-12,
                           std::size_t start_nodes = 32, std::size_t max_nodes = 16384);

/// Same for R_0..R_{n_max}. The domain (0, rho_max) is widened in steps until
/// the tail integral is below tail_tol.
GramResult radial_gram_matrix(double s, std::size_t n_max, double tol = 1e-12,
                              double tail_tol = 1e-12, std::size_t start_nodes = 32,
                              std::size_t max_nodes = 16384);

/// Smallest rho_max (in steps of 5 from 20) with
/// max_n int_{rho_max}^inf R_n^2 d rho / 2 < tail_tol; the bound is written
/// to `tail`.
double radial_domain_max(double s, std::size_t n_max, double tail_tol, double* tail = nullptr);

/// sum_n c_n psi_n on the grid (TPT or radial according to p.model).
ComplexGridFunction coherent_wavefunction(const FockVector& c,
                                          std::shared_ptr<const QuadratureGrid> grid,
                                          const ModelParams& p);

}  // namespace fdosc
