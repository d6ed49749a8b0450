#include "fdosc/kernels.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "fdosc/detail/eigenfunction_recurrence.hpp"
#include "fdosc/detail/special.hpp"
#include "fdosc/errors.hpp"

namespace fdosc::kernels {

using detail::log_gamma;

double tpt_ground_norm(const ModelParams& p) {
  return std::sqrt(p.a * std::exp(log_gamma(p.lambda + 1.0) - log_gamma(p.lambda + 0.5)) /
                   std::sqrt(std::numbers::pi));
}

std::vector<double> radial_norms(double s, std::size_t n_max) {
  std::vector<double> norms(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const double x = static_cast<double>(n);
    norms[n] = std::exp(0.5 * (std::log(2.0) + log_gamma(x + 1.0) - log_gamma(x + 2.0 * s + 1.0)));
  }
  return norms;
}

namespace {

inline void tpt_column(const ModelParams& p, double norm0, double u, double* col,
                       std::size_t levels) {
  detail::tpt_recurrence<double>(u, p.lambda, norm0, std::span<double>(col, levels));
}

inline void radial_column(double s, const std::vector<double>& norms, double rho, double* col,
                          std::size_t levels) {
  detail::radial_recurrence<double>(rho, s, norms, std::span<double>(col, levels));
}

inline double gram_entry(const Eigen::MatrixXd& t, std::span<const double> w, Eigen::Index m,
                         Eigen::Index n) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < t.cols(); ++j) acc += w[static_cast<std::size_t>(j)] * t(m, j) * t(n, j);
  return acc;
}

inline std::complex<double> synth_entry(const Eigen::VectorXcd& c, const Eigen::MatrixXd& t, Eigen::Index j) {
  std::complex<double> acc = 0.0;
  for (Eigen::Index n = 0; n < t.rows(); ++n) acc += c(n) * t(n, j);
  return acc;
}

void check_gram_args(const Eigen::MatrixXd& table, std::span<const double> weights) {
  if (static_cast<std::size_t>(table.cols()) != weights.size())
    throw SizeError("weighted_gram: weight count does not match node count");
}

void check_synth_args(const Eigen::VectorXcd& coeffs, const Eigen::MatrixXd& table) {
  if (coeffs.size() != table.rows())
    throw SizeError("synthesize: coefficient count does not match table rows");
}

}  // namespace

Eigen::MatrixXd tpt_basis_table(const ModelParams& p, std::size_t n_max,
                                std::span<const double> nodes) {
  const double norm0 = tpt_ground_norm(p);
  const std::size_t levels = n_max + 1;
  Eigen::MatrixXd t(static_cast<Eigen::Index>(levels), static_cast<Eigen::Index>(nodes.size()));
  const auto count = static_cast<std::ptrdiff_t>(nodes.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    tpt_column(p, norm0, nodes[static_cast<std::size_t>(j)], t.col(j).data(), levels);
  }
  return t;
}

Eigen::MatrixXd radial_basis_table(double s, std::size_t n_max, std::span<const double> nodes) {
  const auto norms = radial_norms(s, n_max);
  const std::size_t levels = n_max + 1;
  Eigen::MatrixXd t(static_cast<Eigen::Index>(levels), static_cast<Eigen::Index>(nodes.size()));
  const auto count = static_cast<std::ptrdiff_t>(nodes.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    radial_column(s, norms, nodes[static_cast<std::size_t>(j)], t.col(j).data(), levels);
  }
  return t;
}

Eigen::MatrixXd weighted_gram(const Eigen::MatrixXd& table, std::span<const double> weights) {
  check_gram_args(table, weights);
  const Eigen::Index levels = table.rows();
  Eigen::MatrixXd g(levels, levels);
#pragma omp parallel for schedule(dynamic)
  for (Eigen::Index m = 0; m < levels; ++m) {
    for (Eigen::Index n = m; n < levels; ++n) {
      const double v = gram_entry(table, weights, m, n);
      g(m, n) = v;
      g(n, m) = v;
    }
  }
  return g;
}

Eigen::VectorXcd synthesize(const Eigen::VectorXcd& coeffs, const Eigen::MatrixXd& table) {
  check_synth_args(coeffs, table);
  Eigen::VectorXcd out(table.cols());
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < table.cols(); ++j) out(j) = synth_entry(coeffs, table, j);
  return out;
}

namespace serial {

Eigen::MatrixXd tpt_basis_table(const ModelParams& p, std::size_t n_max,
                                std::span<const double> nodes) {
  const double norm0 = tpt_ground_norm(p);
  const std::size_t levels = n_max + 1;
  Eigen::MatrixXd t(static_cast<Eigen::Index>(levels), static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    tpt_column(p, norm0, nodes[j], t.col(static_cast<Eigen::Index>(j)).data(), levels);
  }
  return t;
}

Eigen::MatrixXd radial_basis_table(double s, std::size_t n_max, std::span<const double> nodes) {
  const auto norms = radial_norms(s, n_max);
  const std::size_t levels = n_max + 1;
  Eigen::MatrixXd t(static_cast<Eigen::Index>(levels), static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    radial_column(s, norms, nodes[j], t.col(static_cast<Eigen::Index>(j)).data(), levels);
  }
  return t;
}

Eigen::MatrixXd weighted_gram(const Eigen::MatrixXd& table, std::span<const double> weights) {
  check_gram_args(table, weights);
  const Eigen::Index levels = table.rows();
  Eigen::MatrixXd g(levels, levels);
  for (Eigen::Index m = 0; m < levels; ++m) {
    for (Eigen::Index n = m; n < levels; ++n) {
      const double v = gram_entry(table, weights, m, n);
      g(m, n) = v;
      g(n, m) = v;
    }
  }
  return g;
}

Eigen::VectorXcd synthesize(const Eigen::VectorXcd& coeffs, const Eigen::MatrixXd& table) {
  check_synth_args(coeffs, table);
  Eigen::VectorXcd out(table.cols());
  for (Eigen::Index j = 0; j < table.cols(); ++j) out(j) = synth_entry(coeffs, table, j);
  return out;
}

}  // namespace serial

}  // namespace fdosc::kernels
