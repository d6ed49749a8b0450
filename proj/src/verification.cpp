#include "fdosc/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fdosc/errors.hpp"
#include "fdosc/fock_algebra.hpp"
#include "fdosc/position_space.hpp"

namespace fdosc::verify {

namespace {

using Mat = Eigen::MatrixXcd;

/// Interior deviation of lhs from rhs, relative to max(1, |rhs|) entrywise.
/// Products of ladder matrices carry rounding of order ulp(n^2), so an
/// absolute bound would grow with the cutoff.
double interior_rel(const Mat& lhs, const Mat& rhs) {
  const Eigen::Index k = lhs.rows() - 1;
  if (k <= 0) return 0.0;
  const Eigen::ArrayXXd diff = (lhs - rhs).topLeftCorner(k, k).cwiseAbs().array();
  const Eigen::ArrayXXd scale = rhs.topLeftCorner(k, k).cwiseAbs().array().max(1.0);
  return (diff / scale).maxCoeff();
}

std::string last_index(std::size_t cutoff) {
  return "n = N-1 = " + std::to_string(cutoff - 1);
}

CheckResult make(std::string id, nlohmann::json params, double deviation, double tol,
                 std::string excluded = {}) {
  CheckResult c;
  c.id = std::move(id);
  c.parameters = std::move(params);
  c.max_deviation = deviation;
  c.tolerance = tol;
  // NaN deviations fail
  c.passed = deviation <= tol;
  c.excluded = std::move(excluded);
  return c;
}

nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

void to_json(nlohmann::json& j, const CheckResult& c) {
  j = nlohmann::json{{"id", c.id},
                     {"parameters", c.parameters},
                     {"max_deviation", c.max_deviation},
                     {"tolerance", c.tolerance},
                     {"passed", c.passed},
                     {"excluded_indices", c.excluded}};
}

nlohmann::json describe(const ModelParams& p) {
  nlohmann::json j{{"model", std::string(to_string(p.model))}};
  switch (p.model) {
    case Model::TPT:
      j["lambda"] = p.lambda;
      j["a"] = p.a;
      j["omega"] = p.omega;
      break;
    case Model::Pseudoharmonic: j["s"] = p.s; break;
    case Model::Harmonic: j["omega"] = p.omega; break;
  }
  return j;
}

CheckResult spectrum_identity(const ModelParams& p, std::size_t n_max, double tol) {
  const auto f = deformation_for(p);
  const std::size_t cutoff = n_max + 1;
  const OperatorMatrix h = p.model == Model::Pseudoharmonic
                               ? deformed_hamiltonian_antisymmetric(f, cutoff)
                               : deformed_hamiltonian_symmetric(f, cutoff, deformation_frequency(p));
  double worst = 0.0;
  for (std::size_t n = 0; n < cutoff; ++n) {
    const double e = energy(n, p);
    worst = std::max(worst, std::abs(h(n, n).real() - e) / std::abs(e));
  }
  auto params = describe(p);
  params["n_max"] = n_max;
  params["form"] = p.model == Model::Pseudoharmonic ? "antisymmetric" : "symmetric";
  return make("spectrum-identity", params, worst, tol);
}

std::vector<CheckResult> commutator_suite(const ModelParams& p, std::size_t cutoff, double tol) {
  const auto f = deformation_for(p);
  const auto [lower, raise] = ladder_matrices(f, cutoff);
  const Mat& a = lower.entries;
  const Mat& ad = raise.entries;
  const Mat number = number_matrix(cutoff).entries;
  const Mat ident = Mat::Identity(a.rows(), a.cols());
  const Mat aad = commutator(lower, raise).entries;
  auto params = describe(p);
  params["cutoff"] = cutoff;
  const std::string excl = last_index(cutoff);

  std::vector<CheckResult> out;
  switch (p.model) {
    case Model::TPT: {
      const double inv = 1.0 / p.lambda;
      const Mat b0 = ident + inv * number;
      out.push_back(make("[b,b+]=b0", params, interior_rel(aad, b0), tol, excl));
      out.push_back(make("[b,b0]=b/lambda", params, interior_rel(a * b0 - b0 * a, inv * a), tol, excl));
      out.push_back(make("[b+,b0]=-b+/lambda", params, interior_rel(ad * b0 - b0 * ad, -inv * ad), tol, excl));
      break;
    }
    case Model::Pseudoharmonic: {
      const Mat a0 = number + (p.s + 0.5) * ident;
      out.push_back(make("[A,A+]=2A0", params, interior_rel(aad, 2.0 * a0), tol, excl));
      out.push_back(make("[A0,A]=-A", params, interior_rel(a0 * a - a * a0, -a), tol, excl));
      out.push_back(make("[A0,A+]=A+", params, interior_rel(a0 * ad - ad * a0, ad), tol, excl));
      break;
    }
    case Model::Harmonic:
      out.push_back(make("[a,a+]=1", params, interior_rel(aad, ident), tol, excl));
      break;
  }
  out.push_back(make("raise=transpose(lower)", params, (ad - a.transpose()).cwiseAbs().maxCoeff(), tol));
  return out;
}

CheckResult eigenstate_property(const ModelParams& p, Complex alpha, std::size_t cutoff,
                                double tol) {
  const auto f = deformation_for(p);
  const FockVector state = p.model == Model::Harmonic
                               ? annihilation_eigenstate(f, alpha, {cutoff, 1.0, cutoff}).state
                               : closed_form_bg_coefficients(p, alpha, cutoff);
  const auto ladder = ladder_matrices(f, cutoff);
  const Eigen::VectorXcd image = apply(ladder.lower, state).coeffs;
  const Eigen::Index k = static_cast<Eigen::Index>(cutoff) - 1;
  const double dev = (image.head(k) - alpha * state.coeffs.head(k)).cwiseAbs().maxCoeff();
  auto params = describe(p);
  params["alpha"] = complex_json(alpha);
  params["cutoff"] = cutoff;
  return make("annihilation-eigenstate", params, dev, tol, last_index(cutoff));
}

std::vector<CheckResult> structural_identity(const ModelParams& p, Complex alpha,
                                             std::size_t cutoff, double tol) {
  if (p.model == Model::Harmonic)
    throw DomainError("structural identity compares TPT or pseudoharmonic routes");
  const auto f = deformation_for(p);
  auto params = describe(p);
  params["alpha"] = complex_json(alpha);
  params["cutoff"] = cutoff;

  const Eigen::VectorXcd ladder_bg = closed_form_bg_coefficients(p, alpha, cutoff).coeffs;
  Eigen::VectorXcd deformed_bg = deformed_bg_terms(f, alpha, cutoff);
  deformed_bg /= deformed_bg.norm();
  const Eigen::VectorXcd recurrence =
      annihilation_eigenstate(f, alpha, {cutoff, 1.0, cutoff}).state.coeffs;

  const Complex zeta = zeta_from_alpha(alpha, f.lambda_eff());
  const Eigen::VectorXcd ladder_disp = displacement_terms(p, zeta, cutoff);
  const Eigen::VectorXcd deformed_disp = deformed_displacement_terms(f, zeta, cutoff);
  auto disp_params = params;
  disp_params["zeta"] = complex_json(zeta);

  return {
      make("bg-ladder-vs-deformed", params, (ladder_bg - deformed_bg).cwiseAbs().maxCoeff(), tol),
      make("bg-closed-form-vs-recurrence", params, (ladder_bg - recurrence).cwiseAbs().maxCoeff(), tol),
      make("displacement-ladder-vs-deformed", disp_params,
           (ladder_disp - deformed_disp).cwiseAbs().maxCoeff(), tol),
  };
}

std::vector<CheckResult> displacement_suite(const ModelParams& p, Complex alpha,
                                            std::size_t cutoff, double tol, double tail_tol) {
  const auto f = deformation_for(p);
  TruncationPolicy policy{cutoff, tail_tol, cutoff};
  const auto direct = displacement_state_direct(f, alpha, policy);
  const auto factors = factored_displacement_matrices(f, alpha, cutoff);
  const Eigen::VectorXcd factored = factors.apply_to(FockVector::vacuum(cutoff)).coeffs;
  const Eigen::VectorXcd& direct_raw = direct.state.coeffs;

  Eigen::VectorXcd closed;
  if (p.model == Model::Harmonic) {
    closed = glauber_coefficients(alpha, cutoff);
  } else {
    closed = displacement_terms(p, factors.zeta, cutoff);
  }

  auto params = describe(p);
  params["alpha"] = complex_json(alpha);
  params["zeta"] = complex_json(factors.zeta);
  params["cutoff"] = cutoff;
  params["direct_tail_mass"] = direct.tail_mass;
  params["direct_norm_defect"] = direct.norm_defect;
  return {
      make("displacement-direct-vs-factored", params, (direct_raw - factored).cwiseAbs().maxCoeff(), tol),
      make("displacement-factored-vs-closed-form", params, (factored - closed).cwiseAbs().maxCoeff(), tol),
      make("displacement-direct-vs-closed-form", params, (direct_raw - closed).cwiseAbs().maxCoeff(), tol),
  };
}

CheckResult displacement_normalization(const ModelParams& p, Complex zeta, std::size_t cutoff,
                                       double tol) {
  const Eigen::VectorXcd c = displacement_terms(p, zeta, cutoff);
  const double tail = displacement_tail_mass(bargmann_index(p), std::norm(zeta), cutoff);
  auto params = describe(p);
  params["zeta"] = complex_json(zeta);
  params["cutoff"] = cutoff;
  params["analytic_tail"] = tail;
  return make("displacement-normalization", params, std::abs(c.squaredNorm() + tail - 1.0), tol);
}

double rate_exponent(std::span<const double> lambdas, std::span<const double> deviations) {
  const std::size_t n = lambdas.size();
  if (n < 2 || deviations.size() != n) throw SizeError("rate_exponent needs matching lists of length >= 2");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(1.0 / lambdas[i]);
    my += std::log(deviations[i]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(1.0 / lambdas[i]) - mx;
    sxy += dx * (std::log(deviations[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

HarmonicLimitData harmonic_limit_data(Complex alpha, std::span<const double> lambdas,
                                      std::size_t cutoff, std::size_t operator_levels) {
  HarmonicLimitData d;
  d.lambdas.assign(lambdas.begin(), lambdas.end());
  d.state_deviation = harmonic_limit_deviation(alpha, lambdas, cutoff);
  d.operator_deviation = harmonic_limit_operator_deviation(lambdas, operator_levels);
  if (lambdas.size() >= 2) d.rate_exponent = rate_exponent(lambdas, d.operator_deviation);
  return d;
}

std::vector<CheckResult> harmonic_limit_suite(const HarmonicLimitData& data, double final_bound,
                                              double rate_tol) {
  nlohmann::json params{{"lambdas", data.lambdas},
                        {"state_deviation", data.state_deviation},
                        {"operator_deviation", data.operator_deviation}};
  // Largest successive increment; strictly negative when the sequence decreases.
  double worst_step = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < data.state_deviation.size(); ++i)
    worst_step = std::max(worst_step, data.state_deviation[i] - data.state_deviation[i - 1]);
  CheckResult decreasing = make("harmonic-limit-decreasing", params, worst_step, 0.0);
  decreasing.passed = worst_step < 0.0;

  const double last = data.state_deviation.empty() ? 0.0 : data.state_deviation.back();
  auto rate_params = params;
  rate_params["rate_exponent"] = data.rate_exponent;
  return {decreasing, make("harmonic-limit-final-deviation", params, last, final_bound),
          make("harmonic-limit-operator-rate", rate_params, std::abs(data.rate_exponent - 1.0), rate_tol)};
}

std::vector<CheckResult> ladder_fd_suite(const ModelParams& p, std::size_t n_max, double tol,
                                         double h, std::size_t node_count) {
  double worst_plus = 0.0, worst_minus = 0.0, worst_ground = 0.0;
  auto params = describe(p);
  params["n_max"] = n_max;
  params["h"] = h;
  params["nodes"] = node_count;
  if (p.model == Model::TPT) {
    const auto nodes = uniform_nodes(-0.95, 0.95, node_count);
    params["domain"] = {-0.95, 0.95};
    const double two_lambda = 2.0 * p.lambda;
    for (std::size_t n = 0; n <= n_max; ++n) {
      const double x = static_cast<double>(n);
      const LadderFit fit = ladder_action_fd(n, p, nodes, h);
      const double m_plus = std::sqrt((x + 1.0) * (two_lambda + x));
      worst_plus = std::max(worst_plus, std::abs(fit.coeff_plus - m_plus) / m_plus);
      if (n == 0) {
        worst_ground = fit.residual_minus;
      } else {
        const double m_minus = std::sqrt(x * (two_lambda + x - 1.0));
        worst_minus = std::max(worst_minus, std::abs(fit.coeff_minus - m_minus) / m_minus);
      }
    }
  } else if (p.model == Model::Pseudoharmonic) {
    const auto nodes = uniform_nodes(0.05, 40.0, node_count);
    params["domain"] = {0.05, 40.0};
    for (std::size_t n = 0; n <= n_max; ++n) {
      const double x = static_cast<double>(n);
      const LadderFit fit = pseudoharmonic_ladder_fd(n, p.s, nodes, h);
      const double m_plus = std::sqrt((x + 1.0) * (x + 2.0 * p.s + 1.0));
      worst_plus = std::max(worst_plus, std::abs(fit.coeff_plus - m_plus) / m_plus);
      if (n == 0) {
        worst_ground = fit.residual_minus;
      } else {
        const double m_minus = std::sqrt(x * (x + 2.0 * p.s));
        worst_minus = std::max(worst_minus, std::abs(fit.coeff_minus - m_minus) / m_minus);
      }
    }
  } else {
    throw DomainError("finite-difference ladder checks cover the TPT and pseudoharmonic models");
  }
  return {make("fd-raising-coefficient", params, worst_plus, tol),
          make("fd-lowering-coefficient", params, worst_minus, tol),
          make("fd-lowering-annihilates-ground", params, worst_ground, tol)};
}

CheckResult orthonormality(const ModelParams& p, std::size_t n_max, double tol) {
  GramResult g;
  if (p.model == Model::TPT) {
    g = tpt_gram_matrix(p, n_max);
  } else if (p.model == Model::Pseudoharmonic) {
    g = radial_gram_matrix(p.s, n_max);
  } else {
    throw DomainError("orthonormality check covers the TPT and pseudoharmonic models");
  }
  const auto k = static_cast<Eigen::Index>(n_max + 1);
  const double dev = (g.gram - Eigen::MatrixXd::Identity(k, k)).cwiseAbs().maxCoeff();
  auto params = describe(p);
  params["n_max"] = n_max;
  params["quadrature_nodes"] = g.nodes;
  params["quadrature_convergence"] = g.convergence;
  if (p.model == Model::Pseudoharmonic) {
    params["rho_max"] = g.rho_max;
    params["tail_bound"] = g.tail_bound;
  }
  return make("orthonormality", params, dev, tol);
}

}  // namespace fdosc::verify
