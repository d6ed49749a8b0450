#include "fdosc/cli/runner.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include "fdosc/coherent_states.hpp"
#include "fdosc/errors.hpp"
#include "fdosc/fock_algebra.hpp"
#include "fdosc/position_space.hpp"
#include "fdosc/verification.hpp"

namespace fdosc::cli {

namespace {

using json = nlohmann::json;
using verify::CheckResult;

std::int64_t as_int(std::size_t n) { return static_cast<std::int64_t>(n); }

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

CheckResult check(std::string id, json params, double deviation, double tol,
                  std::string excluded = {}) {
  CheckResult c;
  c.id = std::move(id);
  c.parameters = std::move(params);
  c.max_deviation = deviation;
  c.tolerance = tol;
  c.passed = deviation <= tol;
  c.excluded = std::move(excluded);
  return c;
}

TruncationPolicy policy_of(const RunConfig& c) { return {c.cutoff, c.tail_tol, c.max_cutoff}; }

Complex displacement_zeta(const RunConfig& c) {
  if (c.zeta) return *c.zeta;
  return zeta_from_alpha(c.alpha, deformation_for(c.params).lambda_eff());
}

/// Reference state for comparing displacement constructions: the closed
/// form for su(1,1) models, Glauber coefficients for the harmonic one.
FockVector displacement_reference(const RunConfig& c, std::size_t cutoff) {
  if (c.params.model == Model::Harmonic) {
    const auto f = deformation_for(c.params);
    return FockVector(glauber_coefficients(c.alpha * std::sqrt(f.offset()), cutoff));
  }
  return displacement_state_closed_form(c.params, displacement_zeta(c), cutoff).state;
}

CoherentStateResult build_state(const RunConfig& c) {
  const auto f = deformation_for(c.params);
  switch (c.method) {
    case CoherentKind::Annihilation: return annihilation_eigenstate(f, c.alpha, policy_of(c));
    case CoherentKind::DisplacementClosed:
      return displacement_state_closed_form(c.params, displacement_zeta(c), c.cutoff);
    case CoherentKind::DisplacementDirect: return displacement_state_direct(f, c.alpha, policy_of(c));
    case CoherentKind::DisplacementFactored: return displacement_state_factored(f, c.alpha, c.cutoff);
  }
  throw DomainError("unknown coherent-state method");
}

Table coefficient_table(const FockVector& v) {
  Table t{{"n", "re", "im", "abs2"}, {}};
  for (std::size_t n = 0; n < v.cutoff(); ++n) {
    const Complex z = v[n];
    t.rows.push_back({as_int(n), z.real(), z.imag(), std::norm(z)});
  }
  return t;
}

void run_spectrum(const RunConfig& c, RunOutcome& out) {
  out.table.header = {"n", "energy"};
  for (std::size_t n = 0; n < c.cutoff; ++n) out.table.rows.push_back({as_int(n), energy(n, c.params)});
  out.report.checks.push_back(verify::spectrum_identity(c.params, c.cutoff - 1, c.tolerance()));
  out.report.summary["levels"] = c.cutoff;
}

void run_coherent(const RunConfig& c, RunOutcome& out) {
  const CoherentStateResult r = build_state(c);
  const double tol = c.tolerance();
  const std::size_t cutoff = r.cutoff();
  json params = verify::describe(c.params);
  params["alpha"] = complex_json(c.alpha);
  params["cutoff"] = cutoff;

  switch (c.method) {
    case CoherentKind::Annihilation: {
      const auto f = deformation_for(c.params);
      const auto ladder = ladder_matrices(f, cutoff);
      const Eigen::VectorXcd image = apply(ladder.lower, r.state).coeffs;
      const auto k = static_cast<Eigen::Index>(cutoff) - 1;
      out.report.checks.push_back(check("annihilation-eigenstate", params,
                                        (image.head(k) - c.alpha * r.state.coeffs.head(k)).cwiseAbs().maxCoeff(),
                                        tol, "n = N-1 = " + std::to_string(cutoff - 1)));
      if (c.params.model != Model::Harmonic) {
        const FockVector closed = closed_form_bg_coefficients(c.params, c.alpha, cutoff);
        out.report.checks.push_back(check("bg-closed-form-vs-recurrence", params,
                                          (closed.coeffs - r.state.coeffs).cwiseAbs().maxCoeff(), tol));
      }
      break;
    }
    case CoherentKind::DisplacementClosed:
      out.report.checks.push_back(verify::displacement_normalization(c.params, r.parameter, cutoff, tol));
      break;
    case CoherentKind::DisplacementDirect:
    case CoherentKind::DisplacementFactored: {
      const FockVector ref = displacement_reference(c, cutoff);
      out.report.checks.push_back(check("displacement-vs-reference", params,
                                        compare_states(ref, r.state).max_abs_coeff_diff, tol));
      break;
    }
  }
  out.report.checks.push_back(check("tail-mass", params, r.tail_mass, c.tail_tol,
                                    "n = N-1 = " + std::to_string(cutoff - 1)));

  const PhotonStatistics stats = photon_statistics(r.state);
  out.report.summary = {{"method", std::string(to_string(r.method))},
                        {"parameter", complex_json(r.parameter)},
                        {"cutoff", cutoff},
                        {"normalization_constant", r.normalization_constant},
                        {"tail_mass", r.tail_mass},
                        {"norm_defect", r.norm_defect},
                        {"mean_n", stats.mean},
                        {"variance_n", stats.variance},
                        {"mandel_q", stats.mandel_q ? json(*stats.mandel_q) : json(nullptr)}};
  out.table = coefficient_table(r.state);
}

void run_compare(const RunConfig& c, RunOutcome& out) {
  const std::size_t n = c.cutoff;
  FockVector bg;
  FockVector disp;
  Complex zeta;
  if (c.params.model == Model::Harmonic) {
    const auto f = deformation_for(c.params);
    bg = annihilation_eigenstate(f, c.alpha, {n, 1.0, n}).state;
    const auto d = displacement_state_factored(f, c.alpha, n);
    disp = d.state;
    zeta = c.alpha;
    json params = verify::describe(c.params);
    params["alpha"] = complex_json(c.alpha);
    out.report.checks.push_back(check("glauber-eigenstate-vs-displacement", params,
                                      compare_states(bg, disp).max_abs_coeff_diff, c.tolerance()));
  } else {
    bg = closed_form_bg_coefficients(c.params, c.alpha, n);
    zeta = displacement_zeta(c);
    disp = displacement_state_closed_form(c.params, zeta, n).state;
    out.report.checks = verify::structural_identity(c.params, c.alpha, n, c.tolerance());
  }
  const StateComparison cmp = compare_states(bg, disp);
  out.table.header = {"n", "bg_re", "bg_im", "displacement_re", "displacement_im"};
  for (std::size_t k = 0; k < n; ++k)
    out.table.rows.push_back({as_int(k), bg[k].real(), bg[k].imag(), disp[k].real(), disp[k].imag()});
  out.report.summary = {{"zeta", complex_json(zeta)},
                        {"max_abs_coeff_diff", cmp.max_abs_coeff_diff},
                        {"infidelity", cmp.infidelity}};
}

void run_commutators(const RunConfig& c, RunOutcome& out) {
  const auto f = deformation_for(c.params);
  const auto ladder = ladder_matrices(f, c.cutoff);
  const OperatorMatrix comm = commutator(ladder.lower, ladder.raise);
  out.table.header = {"n", "commutator", "expected", "deviation", "interior"};
  for (std::size_t n = 0; n < c.cutoff; ++n) {
    const double x = static_cast<double>(n);
    const double expected = f.slope() * (2.0 * x + 1.0) + f.offset();
    const double value = comm(n, n).real();
    out.table.rows.push_back({as_int(n), value, expected, std::abs(value - expected),
                              std::int64_t{n + 1 < c.cutoff ? 1 : 0}});
  }
  out.report.checks = verify::commutator_suite(c.params, c.cutoff, c.tolerance());
}

void run_displacement_check(const RunConfig& c, RunOutcome& out) {
  const double tol = c.tolerance();
  out.report.checks = verify::displacement_suite(c.params, c.alpha, c.cutoff, tol, c.tail_tol);
  const auto f = deformation_for(c.params);
  const auto factors = factored_displacement_matrices(f, c.alpha, c.cutoff);
  if (c.params.model != Model::Harmonic)
    out.report.checks.push_back(verify::displacement_normalization(c.params, factors.zeta, c.cutoff, tol));

  const FockVector direct =
      displacement_state_direct(f, c.alpha, {c.cutoff, c.tail_tol, c.cutoff}).state;
  const FockVector factored = factors.apply_to(FockVector::vacuum(c.cutoff));
  const Eigen::VectorXcd closed = c.params.model == Model::Harmonic
                                      ? glauber_coefficients(c.alpha, c.cutoff)
                                      : displacement_terms(c.params, factors.zeta, c.cutoff);
  out.table.header = {"n", "direct_re", "direct_im", "factored_re", "factored_im", "closed_re", "closed_im"};
  for (std::size_t n = 0; n < c.cutoff; ++n) {
    const auto i = static_cast<Eigen::Index>(n);
    out.table.rows.push_back({as_int(n), direct[n].real(), direct[n].imag(), factored[n].real(),
                              factored[n].imag(), closed(i).real(), closed(i).imag()});
  }
  out.report.summary = {{"zeta", complex_json(factors.zeta)}};
}

void run_wavefunction(const RunConfig& c, RunOutcome& out) {
  if (c.params.model == Model::Harmonic)
    throw DomainError("the wavefunction task covers the TPT and pseudoharmonic models");
  const CoherentStateResult r = build_state(c);
  std::shared_ptr<const QuadratureGrid> grid;
  double rho_max = 0.0;
  if (c.params.model == Model::TPT) {
    grid = make_tpt_grid(c.grid.nodes, c.params);
  } else {
    rho_max = c.grid.rho_max ? *c.grid.rho_max : radial_domain_max(c.params.s, r.cutoff() - 1, 1e-12);
    grid = make_radial_grid(c.grid.nodes, rho_max);
  }
  const ComplexGridFunction psi = coherent_wavefunction(r.state, grid, c.params);
  const double norm = overlap_quadrature(psi, psi).real();

  json params = verify::describe(c.params);
  params["alpha"] = complex_json(c.alpha);
  params["cutoff"] = r.cutoff();
  params["grid_nodes"] = c.grid.nodes;
  out.report.checks.push_back(check("wavefunction-norm", params, std::abs(norm - 1.0), c.tolerance()));
  out.report.checks.push_back(verify::orthonormality(c.params, 10, 1e-8));

  const bool radial = c.params.model == Model::Pseudoharmonic;
  out.table.header = {radial ? "rho" : "u", "re", "im", "abs2"};
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const Complex z = psi.values[i];
    out.table.rows.push_back({grid->nodes[i], z.real(), z.imag(), std::norm(z)});
  }
  out.report.summary = {{"method", std::string(to_string(r.method))},
                        {"measure", radial ? "r dr = d rho / 2" : "dx = du / (a sqrt(1 - u^2))"},
                        {"grid_nodes", grid->size()},
                        {"quadrature_norm", norm}};
  if (radial) out.report.summary["rho_max"] = rho_max;
}

void run_harmonic_limit(const RunConfig& c, RunOutcome& out) {
  const auto data = verify::harmonic_limit_data(c.alpha, c.lambdas, c.cutoff);
  out.table.header = {"lambda", "state_deviation", "operator_deviation"};
  for (std::size_t i = 0; i < data.lambdas.size(); ++i)
    out.table.rows.push_back({data.lambdas[i], data.state_deviation[i], data.operator_deviation[i]});
  out.report.checks = verify::harmonic_limit_suite(data, c.final_bound, c.rate_tol);
  out.report.summary = {{"rate_exponent", data.rate_exponent}};
}

json error_json(std::string_view kind, const std::string& message, int status) {
  return json{{"kind", std::string(kind)}, {"message", message}, {"exit_status", status}};
}

}  // namespace

RunOutcome execute(const RunConfig& config) {
  RunOutcome out;
  out.report.task = std::string(to_string(config.task));
  out.report.config = to_json(config);
  switch (config.task) {
    case Task::Spectrum: run_spectrum(config, out); break;
    case Task::Coherent: run_coherent(config, out); break;
    case Task::Compare: run_compare(config, out); break;
    case Task::Commutators: run_commutators(config, out); break;
    case Task::DisplacementCheck: run_displacement_check(config, out); break;
    case Task::Wavefunction: run_wavefunction(config, out); break;
    case Task::HarmonicLimit: run_harmonic_limit(config, out); break;
  }
  out.report.outputs = {std::string(to_string(config.task)) + ".csv", "report.json"};
  return out;
}

int run(const RunConfig& config, std::ostream& err) {
  const std::filesystem::path dir = config.out_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    err << "error: cannot create output directory '" << dir.string() << "': " << ec.message() << '\n';
    return kIoError;
  }

  VerificationReport failure;
  failure.task = std::string(to_string(config.task));
  failure.config = to_json(config);
  auto fail = [&](std::string_view kind, const std::string& message, int status) {
    err << "error (" << kind << "): " << message << '\n';
    failure.error = error_json(kind, message, status);
    try {
      write_report(failure, dir / "report.json");
    } catch (const IoError&) {
    }
    return status;
  };

  try {
    RunOutcome out = execute(config);
    emit_csv(out.table, dir / (std::string(to_string(config.task)) + ".csv"));
    write_report(out.report, dir / "report.json");
    for (const auto& c : out.report.checks) {
      if (!c.passed)
        err << "check failed: " << c.id << " (deviation " << c.max_deviation << " > tolerance "
            << c.tolerance << ")\n";
    }
    return out.report.all_passed() ? kOk : kCheckFailed;
  } catch (const IoError& e) {
    err << "error (io): " << e.what() << '\n';
    return kIoError;
  } catch (const TruncationError& e) {
    return fail("truncation", e.what(), kTruncationError);
  } catch (const QuadratureError& e) {
    return fail("quadrature", e.what(), kQuadratureError);
  } catch (const ConfigError& e) {
    return fail("config", e.what(), kConfigError);
  } catch (const std::exception& e) {
    return fail("numeric", e.what(), kNumericError);
  }
}

int run_command(std::string_view task, const std::optional<std::filesystem::path>& config_file,
                const std::vector<std::string>& overrides, const std::filesystem::path& out_dir,
                std::ostream& err) {
  RunConfig config;
  try {
    const Task t = task_from_string(task);
    nlohmann::json doc = config_file ? load_config_file(*config_file) : nlohmann::json::object();
    apply_overrides(doc, overrides);
    config = parse_config(t, doc);
  } catch (const ConfigError& e) {
    err << "error (config): " << e.what() << '\n';
    return kConfigError;
  }
  config.out_dir = out_dir;
  return run(config, err);
}

}  // namespace fdosc::cli
