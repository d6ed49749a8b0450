#include "fdosc/position_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fdosc/detail/eigenfunction_recurrence.hpp"
#include "fdosc/errors.hpp"
#include "fdosc/kernels.hpp"
#include "fdosc/quadrature.hpp"

namespace fdosc {

namespace {

void require_tpt(const ModelParams& p) {
  if (p.model != Model::TPT) throw DomainError("TPT eigenfunctions need TPT parameters");
}

void require_open_interval(double u) {
  if (!(std::abs(u) < 1.0)) throw DomainError("TPT coordinate u must satisfy |u| < 1");
}

void require_positive_rho(double rho) {
  if (!(rho > 0.0)) throw DomainError("radial coordinate rho must be positive");
}

void require_same_grid(const QuadratureGrid& a, const QuadratureGrid& b) {
  if (&a == &b) return;
  if (a.measure != b.measure || a.nodes != b.nodes || a.weights != b.weights)
    throw QuadratureError("overlap_quadrature: grid functions live on different grids");
}

struct Fit {
  double coeff = 0.0;
  double residual = 0.0;
};

Fit least_squares(const std::vector<double>& y, const std::vector<double>& target) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    num += y[i] * target[i];
    den += target[i] * target[i];
  }
  if (!(den > 0.0)) throw FitError("ladder fit: target function vanishes on the grid");
  Fit f;
  f.coeff = num / den;
  for (std::size_t i = 0; i < y.size(); ++i)
    f.residual = std::max(f.residual, std::abs(y[i] - f.coeff * target[i]));
  return f;
}

std::vector<double> shifted(std::span<const double> nodes, double h) {
  std::vector<double> out(nodes.begin(), nodes.end());
  for (double& x : out) x += h;
  return out;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::shared_ptr<const QuadratureGrid> make_tpt_grid(std::size_t node_count, const ModelParams& p) {
  require_tpt(p);
  const auto rule = gauss_legendre(node_count);
  auto grid = std::make_shared<QuadratureGrid>();
  grid->measure = Measure::TptDuOverSqrt;
  grid->reference_nodes = rule.nodes;
  grid->reference_weights = rule.weights;
  grid->nodes.resize(node_count);
  grid->weights.resize(node_count);
  const double half_pi = 0.5 * std::numbers::pi;
  for (std::size_t i = 0; i < node_count; ++i) {
    grid->nodes[i] = std::sin(half_pi * rule.nodes[i]);
    grid->weights[i] = half_pi * rule.weights[i] / p.a;
  }
  return grid;
}

std::shared_ptr<const QuadratureGrid> make_radial_grid(std::size_t node_count, double rho_max) {
  if (!(rho_max > 0.0)) throw DomainError("radial grid needs rho_max > 0");
  const auto rule = gauss_legendre(node_count);
  auto grid = std::make_shared<QuadratureGrid>();
  grid->measure = Measure::RadialDrho;
  grid->reference_nodes = rule.nodes;
  grid->reference_weights = rule.weights;
  grid->nodes.resize(node_count);
  grid->weights.resize(node_count);
  const double half_r = 0.5 * std::sqrt(rho_max);
  for (std::size_t i = 0; i < node_count; ++i) {
    const double r = half_r * (rule.nodes[i] + 1.0);
    grid->nodes[i] = r * r;
    grid->weights[i] = half_r * rule.weights[i] * r;  // r dr
  }
  return grid;
}

double tpt_ground(double u, const ModelParams& p) {
  require_tpt(p);
  require_open_interval(u);
  return kernels::tpt_ground_norm(p) * std::pow(1.0 - u * u, 0.5 * p.lambda);
}

std::vector<double> tpt_eigenfunctions(std::size_t n_max, double u, const ModelParams& p) {
  require_tpt(p);
  require_open_interval(u);
  std::vector<double> out(n_max + 1);
  detail::tpt_recurrence<double>(u, p.lambda, kernels::tpt_ground_norm(p), out);
  return out;
}

double tpt_eigenfunction(std::size_t n, double u, const ModelParams& p) {
  return tpt_eigenfunctions(n, u, p).back();
}

std::vector<double> pseudoharmonic_radials(std::size_t n_max, double s, double rho) {
  if (!(s > 0.0)) throw DomainError("pseudoharmonic eigenfunctions need s > 0");
  require_positive_rho(rho);
  const auto norms = kernels::radial_norms(s, n_max);
  std::vector<double> out(n_max + 1);
  detail::radial_recurrence<double>(rho, s, norms, out);
  return out;
}

double pseudoharmonic_radial(std::size_t n, double s, double rho) {
  return pseudoharmonic_radials(n, s, rho).back();
}

RealGridFunction tpt_eigenfunction_on_grid(std::size_t n,
                                           std::shared_ptr<const QuadratureGrid> grid,
                                           const ModelParams& p) {
  require_tpt(p);
  if (grid->measure != Measure::TptDuOverSqrt) throw QuadratureError("TPT function needs a TPT grid");
  const Eigen::MatrixXd t = kernels::tpt_basis_table(p, n, grid->nodes);
  RealGridFunction f{std::move(grid), {}};
  f.values.resize(static_cast<std::size_t>(t.cols()));
  for (Eigen::Index j = 0; j < t.cols(); ++j) f.values[static_cast<std::size_t>(j)] = t(t.rows() - 1, j);
  return f;
}

RealGridFunction radial_on_grid(std::size_t n, double s,
                                std::shared_ptr<const QuadratureGrid> grid) {
  if (grid->measure != Measure::RadialDrho) throw QuadratureError("radial function needs a radial grid");
  const Eigen::MatrixXd t = kernels::radial_basis_table(s, n, grid->nodes);
  RealGridFunction f{std::move(grid), {}};
  f.values.resize(static_cast<std::size_t>(t.cols()));
  for (Eigen::Index j = 0; j < t.cols(); ++j) f.values[static_cast<std::size_t>(j)] = t(t.rows() - 1, j);
  return f;
}

std::vector<double> uniform_nodes(double lo, double hi, std::size_t count) {
  if (count < 2 || !(hi > lo)) throw SizeError("uniform_nodes needs count >= 2 and hi > lo");
  std::vector<double> out(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + step * static_cast<double>(i);
  return out;
}

LadderFit ladder_action_fd(std::size_t n, const ModelParams& p, std::span<const double> nodes,
                           double h) {
  require_tpt(p);
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  for (double u : nodes)
    if (!(std::abs(u) + h < 1.0)) throw DomainError("finite-difference nodes must satisfy |u| + h < 1");

  const auto up = shifted(nodes, h);
  const auto down = shifted(nodes, -h);
  const Eigen::MatrixXd t0 = kernels::tpt_basis_table(p, n + 1, nodes);
  const Eigen::MatrixXd tp = kernels::tpt_basis_table(p, n, up);
  const Eigen::MatrixXd tm = kernels::tpt_basis_table(p, n, down);
  const auto row = static_cast<Eigen::Index>(n);
  const double eps = p.lambda + static_cast<double>(n);

  std::vector<double> raised(nodes.size()), lowered(nodes.size());
  std::vector<double> above(nodes.size()), below(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto j = static_cast<Eigen::Index>(i);
    const double u = nodes[i];
    const double psi = t0(row, j);
    const double dpsi = (tp(row, j) - tm(row, j)) / (2.0 * h);
    raised[i] = (-(1.0 - u * u) * dpsi + eps * u * psi);
    lowered[i] = ((1.0 - u * u) * dpsi + eps * u * psi);
    above[i] = t0(row + 1, j);
    if (n > 0) below[i] = t0(row - 1, j);
  }
  for (double& v : raised) v *= std::sqrt((eps + 1.0) / eps);

  LadderFit out;
  const Fit plus = least_squares(raised, above);
  out.coeff_plus = plus.coeff;
  out.residual_plus = plus.residual;
  if (n == 0) {
    out.residual_minus = max_abs(lowered);
  } else {
    for (double& v : lowered) v *= std::sqrt((eps - 1.0) / eps);
    const Fit minus = least_squares(lowered, below);
    out.coeff_minus = minus.coeff;
    out.residual_minus = minus.residual;
  }
  return out;
}

LadderFit pseudoharmonic_ladder_fd(std::size_t n, double s, std::span<const double> nodes,
                                   double h) {
  if (!(s > 0.0)) throw DomainError("pseudoharmonic eigenfunctions need s > 0");
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  for (double rho : nodes)
    if (!(rho - h > 0.0)) throw DomainError("finite-difference nodes must satisfy rho - h > 0");

  const auto up = shifted(nodes, h);
  const auto down = shifted(nodes, -h);
  const Eigen::MatrixXd t0 = kernels::radial_basis_table(s, n + 1, nodes);
  const Eigen::MatrixXd tp = kernels::radial_basis_table(s, n, up);
  const Eigen::MatrixXd tm = kernels::radial_basis_table(s, n, down);
  const auto row = static_cast<Eigen::Index>(n);
  const double level = static_cast<double>(n);

  std::vector<double> raised(nodes.size()), lowered(nodes.size());
  std::vector<double> above(nodes.size()), below(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto j = static_cast<Eigen::Index>(i);
    const double rho = nodes[i];
    const double r = t0(row, j);
    const double rho_dr = rho * (tp(row, j) - tm(row, j)) / (2.0 * h);
    lowered[i] = -rho_dr + (s + level - 0.5 * rho) * r;
    raised[i] = rho_dr + (s + level + 1.0 - 0.5 * rho) * r;
    above[i] = t0(row + 1, j);
    if (n > 0) below[i] = t0(row - 1, j);
  }

  LadderFit out;
  const Fit plus = least_squares(raised, above);
  out.coeff_plus = plus.coeff;
  out.residual_plus = plus.residual;
  if (n == 0) {
    out.residual_minus = max_abs(lowered);
  } else {
    const Fit minus = least_squares(lowered, below);
    out.coeff_minus = minus.coeff;
    out.residual_minus = minus.residual;
  }
  return out;
}

QuadratureEstimate overlap_quadrature(const RealGridFunction& fa, const RealGridFunction& fb) {
  require_same_grid(*fa.grid, *fb.grid);
  const QuadratureGrid& g = *fa.grid;
  const std::size_t n = g.size();
  if (fa.values.size() != n || fb.values.size() != n)
    throw QuadratureError("overlap_quadrature: value count does not match grid");

  QuadratureEstimate out;
  std::vector<double> integrand(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double prod = fa.values[i] * fb.values[i];
    out.value += g.weights[i] * prod;
    integrand[i] = prod * g.weights[i] / g.reference_weights[i];
  }

  // Discrete Legendre coefficients a_k of the pulled-back integrand for the
  // top few k; a resolved integrand leaves them at round-off level.
  const std::size_t top = std::min<std::size_t>(4, n);
  std::vector<double> top_coeffs(top, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = g.reference_nodes[i];
    double p0 = 1.0;
    double p1 = t;
    for (std::size_t k = 0; k < n; ++k) {
      const double pk = k == 0 ? p0 : p1;
      if (k + top >= n) {
        top_coeffs[k + top - n] += g.reference_weights[i] * integrand[i] * pk;
      }
      if (k >= 1) {
        const double dk = static_cast<double>(k);
        const double p2 = ((2.0 * dk + 1.0) * t * p1 - dk * p0) / (dk + 1.0);
        p0 = p1;
        p1 = p2;
      }
    }
  }
  for (std::size_t j = 0; j < top; ++j) {
    const double k = static_cast<double>(n - top + j);
    out.error_estimate = std::max(out.error_estimate, std::abs((2.0 * k + 1.0) * top_coeffs[j]));
  }
  return out;
}

std::complex<double> overlap_quadrature(const ComplexGridFunction& fa,
                                        const ComplexGridFunction& fb) {
  require_same_grid(*fa.grid, *fb.grid);
  const QuadratureGrid& g = *fa.grid;
  if (fa.values.size() != g.size() || fb.values.size() != g.size())
    throw QuadratureError("overlap_quadrature: value count does not match grid");
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += g.weights[i] * std::conj(fa.values[i]) * fb.values[i];
  return acc;
}

namespace {

template <class TableFn>
GramResult converge_gram(TableFn&& gram_at, std::size_t start_nodes, std::size_t max_nodes,
                         double tol) {
  std::size_t nodes = std::max<std::size_t>(start_nodes, 2);
  Eigen::MatrixXd previous = gram_at(nodes);
  while (nodes * 2 <= max_nodes) {
    nodes *= 2;
    Eigen::MatrixXd current = gram_at(nodes);
    const double change = (current - previous).cwiseAbs().maxCoeff();
    if (change <= tol) {
      GramResult r;
      r.gram = std::move(current);
      r.nodes = nodes;
      r.convergence = change;
      return r;
    }
    previous = std::move(current);
  }
  throw QuadratureError("Gram matrix did not converge to " + std::to_string(tol) + " within " +
                        std::to_string(max_nodes) + " nodes");
}

}  // namespace

GramResult tpt_gram_matrix(const ModelParams& p, std::size_t n_max, double tol,
                           std::size_t start_nodes, std::size_t max_nodes) {
  require_tpt(p);
  return converge_gram(
      [&](std::size_t nodes) {
        const auto grid = make_tpt_grid(nodes, p);
        return kernels::weighted_gram(kernels::tpt_basis_table(p, n_max, grid->nodes), grid->weights);
      },
      start_nodes, max_nodes, tol);
}

double radial_domain_max(double s, std::size_t n_max, double tail_tol, double* tail) {
  // Beyond rho_max + 200 the integrand carries a factor below e^{-200}.
  const auto rule = gauss_legendre(256);
  for (double rho_max = 20.0; rho_max <= 2000.0; rho_max += 5.0) {
    std::vector<double> nodes(rule.nodes.size()), weights(rule.nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      nodes[i] = rho_max + 100.0 * (rule.nodes[i] + 1.0);
      weights[i] = 0.5 * 100.0 * rule.weights[i];  // d rho / 2
    }
    const Eigen::MatrixXd g = kernels::weighted_gram(kernels::radial_basis_table(s, n_max, nodes), weights);
    const double bound = g.diagonal().maxCoeff();
    if (bound < tail_tol) {
      if (tail) *tail = bound;
      return rho_max;
    }
  }
  throw QuadratureError("radial domain: tail bound not reached below rho = 2000");
}

GramResult radial_gram_matrix(double s, std::size_t n_max, double tol, double tail_tol,
                              std::size_t start_nodes, std::size_t max_nodes) {
  if (!(s > 0.0)) throw DomainError("pseudoharmonic eigenfunctions need s > 0");
  double tail = 0.0;
  const double rho_max = radial_domain_max(s, n_max, tail_tol, &tail);
  GramResult r = converge_gram(
      [&](std::size_t nodes) {
        const auto grid = make_radial_grid(nodes, rho_max);
        return kernels::weighted_gram(kernels::radial_basis_table(s, n_max, grid->nodes), grid->weights);
      },
      start_nodes, max_nodes, tol);
  r.tail_bound = tail;
  r.rho_max = rho_max;
  return r;
}

ComplexGridFunction coherent_wavefunction(const FockVector& c,
                                          std::shared_ptr<const QuadratureGrid> grid,
                                          const ModelParams& p) {
  if (c.cutoff() < 1) throw SizeError("coherent_wavefunction: empty coefficient vector");
  const std::size_t n_max = c.cutoff() - 1;
  Eigen::MatrixXd table;
  switch (p.model) {
    case Model::TPT:
      if (grid->measure != Measure::TptDuOverSqrt) throw QuadratureError("TPT state needs a TPT grid");
      table = kernels::tpt_basis_table(p, n_max, grid->nodes);
      break;
    case Model::Pseudoharmonic:
      if (grid->measure != Measure::RadialDrho) throw QuadratureError("pseudoharmonic state needs a radial grid");
      table = kernels::radial_basis_table(p.s, n_max, grid->nodes);
      break;
    case Model::Harmonic:
      throw DomainError("coherent_wavefunction supports the TPT and pseudoharmonic models");
  }
  const Eigen::VectorXcd values = kernels::synthesize(c.coeffs, table);
  ComplexGridFunction out{std::move(grid), {}};
  out.values.assign(values.data(), values.data() + values.size());
  return out;
}

}  // namespace fdosc
