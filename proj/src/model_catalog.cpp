#include "fdosc/model_catalog.hpp"

#include <cmath>
#include <string>

#include "fdosc/errors.hpp"

namespace fdosc {

std::string_view to_string(Model m) {
  switch (m) {
    case Model::TPT: return "tpt";
    case Model::Pseudoharmonic: return "pseudoharmonic";
    case Model::Harmonic: return "harmonic";
  }
  return "unknown";
}

Model model_from_string(std::string_view name) {
  if (name == "tpt") return Model::TPT;
  if (name == "pseudoharmonic") return Model::Pseudoharmonic;
  if (name == "harmonic") return Model::Harmonic;
  throw DomainError("unknown model '" + std::string(name) + "'");
}

ModelParams ModelParams::tpt(double lambda, double a) {
  if (!(lambda > 0.5)) throw DomainError("TPT requires lambda > 1/2");
  if (!(a > 0.0)) throw DomainError("TPT requires a > 0");
  ModelParams p;
  p.model = Model::TPT;
  p.lambda = lambda;
  p.a = a;
  p.omega = lambda * a * a;
  return p;
}

ModelParams ModelParams::tpt_with_frequency(double lambda, double omega) {
  if (!(omega > 0.0)) throw DomainError("harmonic-limit parametrization requires omega > 0");
  if (!(lambda > 0.5)) throw DomainError("TPT requires lambda > 1/2");
  return tpt(lambda, std::sqrt(omega / lambda));
}

ModelParams ModelParams::pseudoharmonic(double s) {
  if (!(s > 0.0)) throw DomainError("pseudoharmonic model requires s > 0");
  ModelParams p;
  p.model = Model::Pseudoharmonic;
  p.s = s;
  p.omega = 1.0;
  return p;
}

ModelParams ModelParams::harmonic(double omega) {
  if (!(omega > 0.0)) throw DomainError("harmonic model requires omega > 0");
  ModelParams p;
  p.model = Model::Harmonic;
  p.omega = omega;
  return p;
}

double solve_lambda(double U0, double a) {
  if (!(U0 > 0.0) || !(a > 0.0)) throw DomainError("solve_lambda requires U0 > 0 and a > 0");
  const double c = 2.0 * U0 / (a * a);
  // Rationalized root: c / ((1 + sqrt(1 + 4c)) / 2) avoids cancellation for small c.
  return 2.0 * c / (1.0 + std::sqrt(1.0 + 4.0 * c));
}

double tpt_energy(std::size_t n, const ModelParams& p) {
  const double x = static_cast<double>(n);
  return 0.5 * p.a * p.a * (x * x + 2.0 * x * p.lambda + p.lambda);
}

double pseudoharmonic_energy(std::size_t n, double s) {
  return 2.0 * (static_cast<double>(n) + s + 0.5);
}

double harmonic_energy(std::size_t n, double omega) {
  return omega * (static_cast<double>(n) + 0.5);
}

double energy(std::size_t n, const ModelParams& p) {
  switch (p.model) {
    case Model::TPT: return tpt_energy(n, p);
    case Model::Pseudoharmonic: return pseudoharmonic_energy(n, p.s);
    case Model::Harmonic: return harmonic_energy(n, p.omega);
  }
  return 0.0;
}

DeformationFunction::DeformationFunction(Model model, double slope, double offset,
                                         ModelParams params)
    : model_(model), slope_(slope), offset_(offset), params_(params) {
  if (!std::isfinite(slope) || !std::isfinite(offset))
    throw DomainError("deformation function coefficients must be finite");
  // f^2(n) > 0 for every n >= 1
  if (!(slope >= 0.0) || !(slope + offset > 0.0))
    throw DomainError("deformation function must satisfy f^2(n) > 0 for n >= 1");
}

DeformationFunction DeformationFunction::affine(double slope, double offset) {
  const Model tag = slope > 0.0 ? Model::Pseudoharmonic : Model::Harmonic;
  return {tag, slope, offset, ModelParams{}};
}

double DeformationFunction::bargmann_index() const {
  if (!is_su11()) throw DomainError("Bargmann index requires a deformation with slope > 0");
  return 0.5 * (offset_ / slope_ + 1.0);
}

double DeformationFunction::ladder_scale() const { return std::sqrt(slope_); }

double DeformationFunction::lambda_eff() const {
  if (!is_su11()) throw DomainError("lambda_eff requires a deformation with slope > 0");
  return 0.5 / slope_;
}

DeformationFunction tpt_deformation(const ModelParams& p) {
  if (p.model != Model::TPT) throw DomainError("tpt_deformation requires TPT parameters");
  if (!(p.lambda > 0.5)) throw DomainError("TPT deformation requires lambda > 1/2");
  const double two_lambda = 2.0 * p.lambda;
  return {Model::TPT, 1.0 / two_lambda, (two_lambda - 1.0) / two_lambda, p};
}

DeformationFunction pseudoharmonic_deformation(double s) {
  if (!(s > 0.0)) throw DomainError("pseudoharmonic deformation requires s > 0");
  return {Model::Pseudoharmonic, 1.0, 2.0 * s, ModelParams::pseudoharmonic(s)};
}

DeformationFunction harmonic_deformation() {
  return {Model::Harmonic, 0.0, 1.0, ModelParams::harmonic(1.0)};
}

DeformationFunction deformation_for(const ModelParams& p) {
  switch (p.model) {
    case Model::TPT: return tpt_deformation(p);
    case Model::Pseudoharmonic: return pseudoharmonic_deformation(p.s);
    case Model::Harmonic: {
      auto f = harmonic_deformation();
      return {Model::Harmonic, f.slope(), f.offset(), p};
    }
  }
  throw DomainError("unknown model");
}

double deformation_frequency(const ModelParams& p) {
  switch (p.model) {
    case Model::TPT: return p.lambda * p.a * p.a;
    case Model::Pseudoharmonic: return 1.0;
    case Model::Harmonic: return p.omega;
  }
  return 1.0;
}

}  // namespace fdosc
