#pragma once

// Data-parallel grid kernels. Each has a serial twin in fdosc::kernels::serial
// that performs the same per-item arithmetic in a plain loop; the OpenMP
// versions only distribute independent items (nodes or Gram rows) across
// threads, so both return bit-identical results.

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fdosc/model_catalog.hpp"

namespace fdosc::kernels {

/// Column j holds psi_0..psi_{n_max} at nodes[j] (u coordinate, |u| < 1).
Eigen::MatrixXd tpt_basis_table(const ModelParams& p, std::size_t n_max,
                                std::span<const double> nodes);

/// Column j holds R_0..R_{n_max} at nodes[j] (rho > 0).
Eigen::MatrixXd radial_basis_table(double s, std::size_t n_max, std::span<const double> nodes);

/// G(m, n) = sum_j weights[j] T(m, j) T(n, j).
Eigen::MatrixXd weighted_gram(const Eigen::MatrixXd& table, std::span<const double> weights);

/// out(j) = sum_n coeffs(n) T(n, j).
Eigen::VectorXcd synthesize(const Eigen::VectorXcd& coeffs, const Eigen::MatrixXd& table);

namespace serial {

Eigen::MatrixXd tpt_basis_table(const ModelParams& p, std::size_t n_max,
                                std::span<const double> nodes);
Eigen::MatrixXd radial_basis_table(double s, std::size_t n_max, std::span<const double> nodes);
Eigen::MatrixXd weighted_gram(const Eigen::MatrixXd& table, std::span<const double> weights);
Eigen::VectorXcd synthesize(const Eigen::VectorXcd& coeffs, const Eigen::MatrixXd& table);

}  // namespace serial

/// N_0 = sqrt(a Gamma(lambda+1) / (sqrt(pi) Gamma(lambda+1/2))).
double tpt_ground_norm(const ModelParams& p);

/// N_n = sqrt(2 n! / Gamma(n + 2s + 1)), n = 0..n_max.
std::vector<double> radial_norms(double s, std::size_t n_max);

}  // namespace fdosc::kernels
