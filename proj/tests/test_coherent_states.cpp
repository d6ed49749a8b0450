#include <doctest.h>

#include <cmath>
#include <random>

#include <boost/math/special_functions/gamma.hpp>

#include "fdosc/coherent_states.hpp"
#include "fdosc/errors.hpp"
#include "oracles.hpp"

using namespace fdosc;
using doctest::Approx;

namespace {
const auto kP2 = ModelParams::tpt(2.0, 1.0);
const auto kF2 = tpt_deformation(kP2);

double max_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}
}  // namespace

TEST_CASE("annihilation recurrence") {
  const auto c = annihilation_recurrence_coefficients(kF2, 0.5, 8);
  CHECK(std::abs(c(1) / c(0) - 0.5) < 1e-15);
  CHECK(std::abs(c(2) / c(0) - 0.25 / (std::sqrt(2.0) * std::sqrt(1.25))) < 1e-15);
  CHECK(std::abs(c(2) / c(0) - 0.1581139) < 1e-7);

  const auto vac = annihilation_eigenstate(kF2, 0.0);
  CHECK(vac.state[0] == Complex(1.0));
  CHECK(vac.state.coeffs.tail(vac.cutoff() - 1).norm() == 0.0);
}

TEST_CASE("annihilation eigenstate: cutoff doubling and truncation error") {
  TruncationPolicy pol{8, 1e-20, 4096};
  const auto r = annihilation_eigenstate(kF2, 3.0, pol);
  CHECK(r.cutoff() > 8);
  CHECK(r.tail_mass <= 1e-20);
  CHECK(std::abs(r.state.norm() - 1.0) < 1e-12);

  TruncationPolicy tight{8, 1e-20, 16};
  CHECK_THROWS_AS(annihilation_eigenstate(kF2, 3.0, tight), TruncationError);
  try {
    annihilation_eigenstate(kF2, 3.0, tight);
  } catch (const TruncationError& e) {
    CHECK(e.cutoff() == 16);
    CHECK(e.tail_mass() > 1e-20);
  }
}

TEST_CASE("closed-form BG coefficients") {
  const auto t = closed_form_bg_terms(kP2, 0.5, 4);
  CHECK(std::abs(t(1) / t(0) - 0.5) < 1e-15);
  const auto ps = closed_form_bg_terms(ModelParams::pseudoharmonic(1.0), 1.0, 4);
  CHECK(std::abs(ps(1) / ps(0) - 1.0 / std::sqrt(3.0)) < 1e-15);
  const auto z = closed_form_bg_coefficients(kP2, 0.0, 5);
  CHECK(z[0] == Complex(1.0));
  CHECK(z.coeffs.tail(4).norm() == 0.0);
  CHECK_THROWS_AS(closed_form_bg_coefficients(ModelParams::harmonic(1.0), 0.5, 5), DomainError);
}

TEST_CASE("recurrence equals closed form") {
  for (double lam : {0.75, 2.0, 10.0}) {
    for (Complex alpha : {Complex(0.3, 0), Complex(-1.2, 2.1), Complex(0, 4.0), Complex(2.8, -2.8)}) {
      if (std::abs(alpha) > 4.0) continue;
      const auto pt = ModelParams::tpt(lam, 1.3);
      const auto rec = annihilation_eigenstate(tpt_deformation(pt), alpha);
      const auto cf = closed_form_bg_coefficients(pt, alpha, rec.cutoff());
      CHECK(max_diff(rec.state.coeffs, cf.coeffs) < 1e-12);

      const auto pp = ModelParams::pseudoharmonic(lam);
      const auto rp = annihilation_eigenstate(deformation_for(pp), alpha);
      const auto cp = closed_form_bg_coefficients(pp, alpha, rp.cutoff());
      CHECK(max_diff(rp.state.coeffs, cp.coeffs) < 1e-12);
    }
  }
}

TEST_CASE("deformed-factorial route equals ladder route") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> lam(0.6, 50.0), mag(0.0, 4.0), ph(-M_PI, M_PI);
  for (int i = 0; i < 50; ++i) {
    const auto p = ModelParams::tpt(lam(rng), 1.0);
    const Complex alpha = std::polar(mag(rng), ph(rng));
    const auto a = closed_form_bg_terms(p, alpha, 40);
    const auto b = deformed_bg_terms(tpt_deformation(p), alpha, 40);
    for (int n = 0; n < 40; ++n) CHECK(std::abs(a(n) - b(n)) <= 1e-12 * std::max(1.0, std::abs(a(n))));
  }
}

TEST_CASE("zeta_from_alpha") {
  CHECK(std::abs(zeta_from_alpha(0.5, 2.0) - std::tanh(0.25)) < 1e-16);
  CHECK(std::abs(zeta_from_alpha(0.5, 2.0) - 0.2449187) < 1e-7);
  CHECK(zeta_from_alpha(0.0, 2.0) == Complex(0.0));
  CHECK(std::abs(zeta_from_alpha(1e3, 2.0)) <= 1.0);
  CHECK(std::abs(zeta_from_alpha(40.0, 2.0)) > 0.999999);
  const Complex z = zeta_from_alpha(std::polar(1.0, 1.1), 3.0);
  CHECK(std::arg(z) == Approx(1.1));
  CHECK_THROWS_AS(zeta_from_alpha(1.0, 0.0), DomainError);
}

TEST_CASE("closed-form displacement state") {
  const auto r = displacement_state_closed_form(kP2, 0.5, 64);
  const auto raw = displacement_terms(kP2, 0.5, 4);
  CHECK(raw(0).real() == Approx(0.5625));
  CHECK(raw(1).real() == Approx(0.5625));
  CHECK(r.normalization_constant == Approx(0.5625));
  CHECK(std::abs(r.state.norm() - 1.0) < 1e-12);

  const auto z = displacement_state_closed_form(kP2, 0.0, 6);
  CHECK(z.state[0] == Complex(1.0));
  CHECK_THROWS_AS(displacement_state_closed_form(kP2, 1.0, 6), DomainError);
  CHECK_THROWS_AS(displacement_state_closed_form(kP2, Complex(0.8, 0.8), 6), DomainError);
  CHECK_THROWS_AS(displacement_state_closed_form(ModelParams::harmonic(1.0), 0.5, 6), DomainError);
}

TEST_CASE("displacement tail mass matches the summed series") {
  for (double k : {0.75, 2.0, 3.5, 20.0}) {
    for (double z2 : {0.01, 0.25, 0.81}) {
      const auto p = ModelParams::tpt(k, 1.0);
      const auto t = displacement_terms(p, std::sqrt(z2), 4000);
      double head = 0.0;
      for (int n = 0; n < 30; ++n) head += std::norm(t(n));
      double rest = 0.0;
      for (int n = 3999; n >= 30; --n) rest += std::norm(t(n));
      CHECK(std::abs(displacement_tail_mass(k, z2, 30) - rest) < 1e-14);
      CHECK(std::abs(head + displacement_tail_mass(k, z2, 30) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("direct exponential and factored product") {
  const auto zeta = zeta_from_alpha(0.5, 2.0);
  const auto direct = displacement_state_direct(kF2, 0.5, {64, 1e-20, 4096});
  const auto closed = displacement_state_closed_form(kP2, zeta, direct.cutoff());
  CHECK(compare_states(direct.state, closed.state).max_abs_coeff_diff < 1e-9);

  const auto g = displacement_state_direct(harmonic_deformation(), 1.0, {64, 1e-20, 4096});
  const auto gl = oracle::glauber(1.0, g.cutoff());
  for (std::size_t n = 0; n < g.cutoff(); ++n) CHECK(std::abs(g.state[n] - gl[n]) < 1e-12);

  const auto v = displacement_state_direct(kF2, 0.0, {16, 1e-20, 64});
  CHECK(std::abs(v.state[0] - 1.0) < 1e-15);

  CHECK_THROWS_AS(displacement_state_direct(kF2, 3.0, {8, 1e-30, 16}), TruncationError);
}

TEST_CASE("factored factors") {
  const double lam = 2.0;
  // alpha giving zeta = 0.5
  const double alpha = std::atanh(0.5) * std::sqrt(2.0 * lam);
  const auto f = factored_displacement_matrices(kF2, alpha, 16);
  CHECK(std::abs(f.zeta - 0.5) < 1e-15);
  CHECK(f.middle(0, 0).real() == Approx(0.5625));
  CHECK(f.middle(1, 1).real() == Approx(0.421875));
  CHECK(std::abs(f.middle(0, 1)) == 0.0);

  const auto id = factored_displacement_matrices(kF2, 0.0, 8);
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(8, 8);
  CHECK(id.raise_exponential.entries == I);
  CHECK(id.middle.entries == I);
  CHECK(id.lower_exponential.entries == I);
  CHECK_THROWS_AS(factored_displacement_matrices(kF2, 0.5, 1), SizeError);
}

TEST_CASE("factored state on |0> equals the closed form for random parameters") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> lam(0.6, 30.0), mag(0.0, 3.0), ph(-M_PI, M_PI);
  for (int i = 0; i < 40; ++i) {
    const bool tpt = i % 2 == 0;
    const auto p = tpt ? ModelParams::tpt(lam(rng), 0.8) : ModelParams::pseudoharmonic(lam(rng));
    const auto f = deformation_for(p);
    const Complex alpha = std::polar(mag(rng), ph(rng));
    const auto fac = displacement_state_factored(f, alpha, 96);
    const auto closed = displacement_terms(p, zeta_from_alpha(alpha, f.lambda_eff()), 96);
    const auto deformed = deformed_displacement_terms(f, zeta_from_alpha(alpha, f.lambda_eff()), 96);
    // unnormalized factored coefficients are the closed-form terms themselves
    const auto raw = factored_displacement_matrices(f, alpha, 96).apply_to(FockVector::vacuum(96));
    CHECK(max_diff(raw.coeffs, closed) < 1e-13);
    CHECK(max_diff(deformed, closed) < 1e-13);
    CHECK(std::abs(fac.state.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("compare_states") {
  const auto v = closed_form_bg_coefficients(kP2, Complex(0.3, 0.4), 20);
  auto c = compare_states(v, v);
  CHECK(c.max_abs_coeff_diff == 0.0);
  CHECK(c.infidelity == 0.0);

  FockVector rotated(v.coeffs * std::polar(1.0, 0.7));
  c = compare_states(v, rotated);
  CHECK(c.max_abs_coeff_diff < 1e-15);
  CHECK(c.infidelity < 1e-15);

  c = compare_states(FockVector::basis(1, 5), FockVector::basis(2, 5));
  CHECK(c.infidelity == Approx(1.0));

  const auto bg = closed_form_bg_coefficients(kP2, 0.5, 64);
  const auto ds = displacement_state_closed_form(kP2, zeta_from_alpha(0.5, 2.0), 64).state;
  CHECK(compare_states(bg, ds).max_abs_coeff_diff > 1e-3);

  CHECK_THROWS_AS(compare_states(FockVector::vacuum(3), FockVector::vacuum(4)), SizeError);
}

TEST_CASE("photon statistics") {
  const auto s0 = photon_statistics(FockVector::vacuum(8));
  CHECK(s0.mean == 0.0);
  CHECK(s0.variance == 0.0);
  CHECK_FALSE(s0.mandel_q.has_value());

  const auto g = photon_statistics(FockVector(glauber_coefficients(1.0, 80)));
  CHECK(std::abs(g.mean - 1.0) < 1e-10);
  CHECK(std::abs(g.variance - 1.0) < 1e-10);
  CHECK(std::abs(*g.mandel_q) < 1e-10);

  // negative binomial with r = 2 lambda, p = |zeta|^2: Q = p / (1 - p)
  const auto d = photon_statistics(displacement_state_closed_form(kP2, 0.5, 200).state);
  CHECK(*d.mandel_q > 0.0);
  CHECK(*d.mandel_q == Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(d.mean == Approx(4.0 * 0.25 / 0.75).epsilon(1e-12));
}

TEST_CASE("harmonic-limit deviations") {
  const std::vector<double> lambdas{1e2, 1e3, 1e4};
  const auto dev = harmonic_limit_deviation(1.0, lambdas, 64);
  CHECK(dev[0] > dev[1]);
  CHECK(dev[1] > dev[2]);
  CHECK(dev[2] < 1e-2);

  for (double d : harmonic_limit_deviation(0.0, lambdas, 32)) CHECK(d == 0.0);

  const std::vector<double> one{50.0};
  const double single = harmonic_limit_deviation(1.0, one, 64)[0];
  const auto bg = closed_form_bg_coefficients(ModelParams::tpt_with_frequency(50.0, 1.0), 1.0, 64);
  const auto gl = oracle::glauber(1.0, 64);
  double ref = 0.0;
  for (int n = 0; n < 64; ++n) ref = std::max(ref, std::abs(bg.coeffs(n) - gl[n]));
  CHECK(single == Approx(ref).epsilon(1e-12));
}
