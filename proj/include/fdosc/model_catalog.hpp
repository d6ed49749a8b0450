#pragma once

#include <cstddef>
#include <string_view>

namespace fdosc {

enum class Model { TPT, Pseudoharmonic, Harmonic };

std::string_view to_string(Model m);
Model model_from_string(std::string_view name);

/// Parameters of one potential, in units hbar = mu = 1 (and omega = 1 for
/// the pseudoharmonic case).
///
/// Only the fields relevant to `model` are meaningful: (lambda, a) for the
/// trigonometric Poschl-Teller well, s for the pseudoharmonic oscillator and
/// omega for the harmonic reference. Use the named constructors, which
/// validate.
struct ModelParams {
  Model model = Model::Harmonic;
  double lambda = 0.0;
  double a = 0.0;
  double s = 0.0;
  double omega = 1.0;

  /// lambda > 1/2, a > 0. omega is set to lambda * a^2.
  static ModelParams tpt(double lambda, double a);
  /// s > 0.
  static ModelParams pseudoharmonic(double s);
  /// omega > 0.
  static ModelParams harmonic(double omega = 1.0);

  /// TPT in the harmonic-limit parametrization a^2 = omega / lambda.
  static ModelParams tpt_with_frequency(double lambda, double omega);
};

/// Positive root of lambda (lambda + 1) = 2 U0 / a^2.
double solve_lambda(double U0, double a);

/// (a^2 / 2)(n^2 + 2 n lambda + lambda).
double tpt_energy(std::size_t n, const ModelParams& p);

/// 2 (n + s + 1/2).
double pseudoharmonic_energy(std::size_t n, double s);

/// omega (n + 1/2).
double harmonic_energy(std::size_t n, double omega);

/// Energy of level n for whichever model `p` describes.
double energy(std::size_t n, const ModelParams& p);

/// f^2(n) for an f-deformed oscillator, restricted to the affine family
/// f^2(n) = slope * n + offset, which covers every model in the catalog.
///
/// The ladder operators built from it are
///   A |n>  = sqrt(n f^2(n)) |n-1>,   A^+ |n> = sqrt((n+1) f^2(n+1)) |n+1>,
/// so [A, A^+] = slope (2n + 1) + offset on the truncation interior. For
/// slope > 0 the triple {A, A^+, [A, A^+]} closes on su(1,1) with
///   A = sqrt(slope) K_-,   Bargmann index k = (offset / slope + 1) / 2.
class DeformationFunction {
 public:
  DeformationFunction(Model model, double slope, double offset, ModelParams params);

  /// Generic f^2(n) = slope * n + offset (tagged with the closest model).
  static DeformationFunction affine(double slope, double offset);

  double operator()(std::size_t n) const { return slope_ * static_cast<double>(n) + offset_; }

  Model model() const { return model_; }
  const ModelParams& params() const { return params_; }
  double slope() const { return slope_; }
  double offset() const { return offset_; }

  bool is_su11() const { return slope_ > 0.0; }
  /// Requires is_su11().
  double bargmann_index() const;
  /// sqrt(slope); A = ladder_scale() * K_-.
  double ladder_scale() const;
  /// 1 / (2 slope); the lambda that enters zeta = e^{i phi} tanh(|alpha| / sqrt(2 lambda)).
  double lambda_eff() const;

 private:
  Model model_;
  double slope_;
  double offset_;
  ModelParams params_;
};

/// f^2(n) = (n + 2 lambda - 1) / (2 lambda), the gauge Omega = lambda a^2.
DeformationFunction tpt_deformation(const ModelParams& p);

/// f^2(n) = n + 2 s.
DeformationFunction pseudoharmonic_deformation(double s);

/// f^2(n) = 1.
DeformationFunction harmonic_deformation();

/// Deformation function of the catalog model `p` describes.
DeformationFunction deformation_for(const ModelParams& p);

/// Frequency Omega multiplying the symmetric deformed Hamiltonian:
/// lambda a^2 for TPT, omega for the harmonic reference.
double deformation_frequency(const ModelParams& p);

}  // namespace fdosc
