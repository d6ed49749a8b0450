#include <doctest.h>

#include <cmath>
#include <random>

#include "fdosc/errors.hpp"
#include "fdosc/model_catalog.hpp"
#include "oracles.hpp"

using namespace fdosc;
using doctest::Approx;

TEST_CASE("solve_lambda") {
  CHECK(solve_lambda(1.0, 1.0) == Approx(1.0).epsilon(1e-15));
  CHECK(solve_lambda(3.0, 1.0) == Approx(2.0).epsilon(1e-15));

  const double c = 2.0 * 0.5 / (0.7 * 0.7);
  const double root = oracle::bisect([c](double l) { return l * (l + 1.0) - c; }, 0.0, 10.0);
  CHECK(solve_lambda(0.5, 0.7) == Approx(root).epsilon(1e-14));
  CHECK(solve_lambda(0.5, 0.7) == Approx(1.0135442928869351).epsilon(1e-14));

  CHECK_THROWS_AS(solve_lambda(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(solve_lambda(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(solve_lambda(1.0, 0.0), DomainError);
}

TEST_CASE("solve_lambda property: lambda(lambda+1) = 2 U0 / a^2") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u0(1e-6, 1e6), a(1e-3, 1e2);
  for (int i = 0; i < 500; ++i) {
    const double U = u0(rng), A = a(rng);
    const double l = solve_lambda(U, A);
    CHECK(l * (l + 1.0) == Approx(2.0 * U / (A * A)).epsilon(1e-13));
  }
}

TEST_CASE("energies") {
  const auto p = ModelParams::tpt(2.0, 1.0);
  CHECK(tpt_energy(0, p) == Approx(1.0));
  CHECK(tpt_energy(1, p) == Approx(3.5));
  CHECK(tpt_energy(2, p) == Approx(7.0));

  CHECK(pseudoharmonic_energy(0, 1.0) == Approx(3.0));
  CHECK(pseudoharmonic_energy(1, 1.0) == Approx(5.0));
  CHECK(pseudoharmonic_energy(0, 0.5) == Approx(2.0));

  CHECK(harmonic_energy(3, 2.0) == Approx(7.0));
  CHECK(energy(2, p) == tpt_energy(2, p));
  CHECK(energy(1, ModelParams::pseudoharmonic(1.0)) == 5.0);
}

TEST_CASE("TPT energy approaches the harmonic one monotonically") {
  for (std::size_t n : {1u, 3u, 7u}) {
    double previous = INFINITY;
    for (double lambda : {1e2, 1e3, 1e4}) {
      const auto p = ModelParams::tpt_with_frequency(lambda, 1.0);
      const double dev = std::abs(tpt_energy(n, p) - (n + 0.5));
      const double nn = static_cast<double>(n);
      CHECK(dev == Approx(nn * nn / (2.0 * lambda)).epsilon(1e-9));
      CHECK(dev < previous);
      previous = dev;
    }
  }
}

TEST_CASE("deformation functions") {
  const auto f = tpt_deformation(ModelParams::tpt(2.0, 1.0));
  CHECK(f(0) == Approx(0.75));
  CHECK(f(1) == Approx(1.0));
  const auto big = tpt_deformation(ModelParams::tpt(1e12, 1.0));
  CHECK(big(5) == Approx(1.0).epsilon(1e-10));

  const auto g = pseudoharmonic_deformation(1.0);
  CHECK(g(0) == 2.0);
  CHECK(g(2) == 4.0);
  CHECK(pseudoharmonic_deformation(0.5)(0) == 1.0);

  const auto h = harmonic_deformation();
  CHECK(h(0) == 1.0);
  CHECK(h(7) == 1.0);
  CHECK(h(100) == 1.0);
  CHECK_FALSE(h.is_su11());
}

TEST_CASE("su(1,1) data of the deformations") {
  const auto f = tpt_deformation(ModelParams::tpt(3.5, 0.4));
  CHECK(f.is_su11());
  CHECK(f.bargmann_index() == Approx(3.5));
  CHECK(f.lambda_eff() == Approx(3.5));
  const auto g = pseudoharmonic_deformation(1.25);
  CHECK(g.bargmann_index() == Approx(1.75));
  CHECK(g.lambda_eff() == Approx(0.5));
  CHECK_THROWS_AS(harmonic_deformation().bargmann_index(), DomainError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ModelParams::tpt(0.5, 1.0), DomainError);
  CHECK_THROWS_AS(ModelParams::tpt(0.25, 1.0), DomainError);
  CHECK_THROWS_AS(ModelParams::tpt(2.0, 0.0), DomainError);
  CHECK_THROWS_AS(ModelParams::pseudoharmonic(0.0), DomainError);
  CHECK_THROWS_AS(ModelParams::pseudoharmonic(-1.0), DomainError);
  CHECK_THROWS_AS(pseudoharmonic_deformation(0.0), DomainError);
  CHECK_THROWS_AS(ModelParams::harmonic(0.0), DomainError);
  CHECK_THROWS_AS(DeformationFunction::affine(-1.0, 2.0), DomainError);
  CHECK_THROWS_AS(model_from_string("morse"), DomainError);
  CHECK(model_from_string("tpt") == Model::TPT);
}

TEST_CASE("gauge: deformation frequency reproduces the TPT spectrum") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lam(0.51, 80.0), a(0.1, 3.0);
  for (int i = 0; i < 200; ++i) {
    const auto p = ModelParams::tpt(lam(rng), a(rng));
    const auto f = tpt_deformation(p);
    const double w = deformation_frequency(p);
    for (std::size_t n = 0; n < 20; ++n) {
      const double sym = 0.5 * w * ((n + 1.0) * f(n + 1) + n * f(n));
      CHECK(sym == Approx(tpt_energy(n, p)).epsilon(1e-13));
    }
  }
}
