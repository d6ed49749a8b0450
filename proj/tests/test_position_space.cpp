#include <doctest.h>

#include <cmath>
#include <random>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/gegenbauer.hpp>
#include <boost/math/special_functions/laguerre.hpp>

#include "fdosc/coherent_states.hpp"
#include "fdosc/errors.hpp"
#include "fdosc/position_space.hpp"
#include "oracles.hpp"

using namespace fdosc;
using doctest::Approx;

namespace {

const auto kP2 = ModelParams::tpt(2.0, 1.0);

/// Normalized eigenfunction from the Gegenbauer polynomial C_n^lambda:
/// psi_n = sqrt(a / h_n) (1-u^2)^{lambda/2} C_n^lambda(u) with
/// h_n = pi 2^{1-2 lambda} Gamma(n + 2 lambda) / (n! (n + lambda) Gamma(lambda)^2).
double gegenbauer_psi(unsigned n, double u, double lambda, double a) {
  using boost::math::lgamma;
  const double log_h = std::log(M_PI) + (1.0 - 2.0 * lambda) * std::log(2.0) + lgamma(n + 2.0 * lambda) -
                       lgamma(n + 1.0) - std::log(n + lambda) - 2.0 * lgamma(lambda);
  return std::sqrt(a) * std::exp(-0.5 * log_h) * std::pow(1.0 - u * u, 0.5 * lambda) *
         boost::math::gegenbauer(n, lambda, u);
}

/// Ground state written with the prefactor of the associated-Legendre form,
/// using P_nu^{-nu}(u) = (1-u^2)^{nu/2} / (2^nu Gamma(nu+1)), nu = lambda - 1/2.
double legendre_form_ground(double u, double lambda, double a) {
  const double nu = lambda - 0.5;
  const double prefactor = std::sqrt(a * lambda * std::tgamma(2.0 * lambda));
  return prefactor * std::pow(1.0 - u * u, 0.25) * std::pow(1.0 - u * u, 0.5 * nu) /
         (std::pow(2.0, nu) * std::tgamma(nu + 1.0));
}

}  // namespace

TEST_CASE("TPT ground state") {
  CHECK(tpt_ground(0.0, kP2) == Approx(std::sqrt(2.0 / (std::sqrt(M_PI) * std::tgamma(2.5)))));
  CHECK(tpt_ground(0.0, kP2) == Approx(0.9213177).epsilon(1e-7));
  CHECK(std::abs(tpt_ground(1.0 - 1e-12, kP2)) < 1e-10);
  CHECK_THROWS_AS(tpt_ground(1.0, kP2), DomainError);
  CHECK_THROWS_AS(tpt_ground(-1.5, kP2), DomainError);
  CHECK_THROWS_AS(tpt_eigenfunction(3, 1.0, kP2), DomainError);

  // normalization: int psi_0^2 dx over x in (-pi/2a, pi/2a), Simpson in x
  for (double a : {0.5, 1.0, 2.0}) {
    const auto p = ModelParams::tpt(2.0, a);
    const double half = M_PI / (2.0 * a);
    const double norm = oracle::simpson(
        [&](double x) {
          const double u = std::sin(a * x);
          if (std::abs(u) >= 1.0) return 0.0;
          const double g = tpt_ground(u, p);
          return g * g;
        },
        -half, half, 4000);
    CHECK(std::abs(norm - 1.0) < 1e-10);
  }
}

TEST_CASE("ground-state constant equals the associated-Legendre prefactor") {
  for (double lambda : {0.6, 0.75, 1.0, 2.0, 3.3, 10.0, 40.0}) {
    for (double a : {0.3, 1.0, 2.5}) {
      const auto p = ModelParams::tpt(lambda, a);
      for (double u : {-0.7, 0.0, 0.2, 0.95}) {
        const double ours = tpt_ground(u, p);
        CHECK(legendre_form_ground(u, lambda, a) / ours == Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("TPT eigenfunctions") {
  for (double u : {-0.9, -0.3, 0.0, 0.45, 0.8})
    CHECK(tpt_eigenfunction(1, u, kP2) == Approx(std::sqrt(6.0) * u * tpt_ground(u, kP2)));

  for (double lambda : {0.75, 2.0, 7.5}) {
    const auto p = ModelParams::tpt(lambda, 1.4);
    for (double u : {-0.9, -0.5, 0.1, 0.6, 0.85}) {
      const auto psi = tpt_eigenfunctions(20, u, p);
      double scale = 0.0;
      for (double v : psi) scale = std::max(scale, std::abs(v));
      for (unsigned n = 0; n <= 20; ++n) {
        CHECK(std::abs(psi[n] - gegenbauer_psi(n, u, lambda, 1.4)) < 1e-12 * scale);
        CHECK(psi[n] == tpt_eigenfunction(n, u, p));
      }
    }
  }
}

TEST_CASE("parity is exact") {
  const auto p = ModelParams::tpt(3.7, 0.9);
  const auto grid = make_tpt_grid(128, p);
  const auto& x = grid->nodes;
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i] == -x[x.size() - 1 - i]);
  for (std::size_t i = 0; i < x.size() / 2; ++i) {
    const auto a = tpt_eigenfunctions(25, x[i], p);
    const auto b = tpt_eigenfunctions(25, x[x.size() - 1 - i], p);
    for (std::size_t n = 0; n <= 25; ++n) CHECK(a[n] == (n % 2 ? -b[n] : b[n]));
  }
}

TEST_CASE("pseudoharmonic radial functions") {
  CHECK(pseudoharmonic_radial(0, 1.0, 1.0) == Approx(std::exp(-0.5)));
  CHECK(pseudoharmonic_radial(0, 1.0, 1.0) == Approx(0.6065307).epsilon(1e-7));
  CHECK_THROWS_AS(pseudoharmonic_radial(0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(pseudoharmonic_radial(2, 1.0, -1.0), DomainError);

  // L_1^{2s}(rho) = 2s + 1 - rho
  for (double s : {0.5, 1.0, 2.2}) {
    for (double rho : {0.3, 1.0, 4.0}) {
      const double n0 = std::sqrt(2.0 / std::tgamma(2.0 * s + 1.0));
      const double n1 = std::sqrt(2.0 / std::tgamma(2.0 * s + 2.0));
      const double r0 = pseudoharmonic_radial(0, s, rho);
      CHECK(pseudoharmonic_radial(1, s, rho) == Approx(r0 / n0 * n1 * (2 * s + 1 - rho)));
    }
  }

  // integer order: compare with the library Laguerre polynomials
  for (double s : {0.5, 1.0, 3.0}) {
    const unsigned m = static_cast<unsigned>(2 * s);
    for (double rho : {0.1, 2.0, 9.0, 25.0}) {
      const auto r = pseudoharmonic_radials(15, s, rho);
      for (unsigned n = 0; n <= 15; ++n) {
        const double norm = std::sqrt(2.0 * std::tgamma(n + 1.0) / std::tgamma(n + 2 * s + 1));
        const double ref = norm * std::pow(rho, s) * std::exp(-rho / 2) * boost::math::laguerre(n, m, rho);
        CHECK(r[n] == Approx(ref).epsilon(1e-11).scale(1e-12));
      }
    }
  }
}

TEST_CASE("finite-difference ladder fits: TPT") {
  const auto nodes = uniform_nodes(-0.95, 0.95, 201);
  CHECK(nodes.size() == 201);
  auto f0 = ladder_action_fd(0, kP2, nodes);
  CHECK(f0.coeff_plus == Approx(2.0).epsilon(1e-6));
  CHECK(f0.coeff_minus == 0.0);
  CHECK(f0.residual_minus < 1e-8);
  auto f1 = ladder_action_fd(1, kP2, nodes);
  CHECK(f1.coeff_minus == Approx(2.0).epsilon(1e-6));
  CHECK(f1.coeff_plus == Approx(std::sqrt(10.0)).epsilon(1e-6));

  const std::vector<double> bad{0.5, 1.0};
  CHECK_THROWS(ladder_action_fd(1, kP2, bad));
}

TEST_CASE("finite-difference ladder fits: pseudoharmonic") {
  const auto nodes = uniform_nodes(0.05, 40.0, 201);
  const auto f2 = pseudoharmonic_ladder_fd(2, 1.0, nodes);
  CHECK(f2.coeff_minus == Approx(std::sqrt(8.0)).epsilon(1e-6));
  const auto f0 = pseudoharmonic_ladder_fd(0, 1.0, nodes);
  CHECK(f0.coeff_plus == Approx(std::sqrt(3.0)).epsilon(1e-6));
  CHECK(f0.coeff_minus == 0.0);
  const std::vector<double> bad{0.0, 1.0};
  CHECK_THROWS(pseudoharmonic_ladder_fd(1, 1.0, bad));
}

TEST_CASE("overlaps by quadrature") {
  const auto grid = make_tpt_grid(256, kP2);
  CHECK(grid->measure == Measure::TptDuOverSqrt);
  const auto g0 = tpt_eigenfunction_on_grid(0, grid, kP2);
  const auto g1 = tpt_eigenfunction_on_grid(1, grid, kP2);
  const auto q00 = overlap_quadrature(g0, g0);
  CHECK(std::abs(q00.value - 1.0) < 1e-10);
  CHECK(q00.error_estimate < 1e-10);
  CHECK(std::abs(overlap_quadrature(g0, g1).value) < 1e-10);

  const double rho_max = radial_domain_max(1.0, 6, 1e-12);
  const auto rg = make_radial_grid(512, rho_max);
  CHECK(rg->measure == Measure::RadialDrho);
  const auto r0 = radial_on_grid(0, 1.0, rg);
  const auto r1 = radial_on_grid(1, 1.0, rg);
  CHECK(std::abs(overlap_quadrature(r0, r1).value) < 1e-8);
  CHECK(std::abs(overlap_quadrature(r0, r0).value - 1.0) < 1e-8);

  CHECK_THROWS_AS(overlap_quadrature(g0, r0), QuadratureError);
  const auto other = make_tpt_grid(128, kP2);
  CHECK_THROWS_AS(overlap_quadrature(g0, tpt_eigenfunction_on_grid(0, other, kP2)), QuadratureError);
}

TEST_CASE("Gram matrices") {
  for (double lambda : {0.75, 2.0, 10.0}) {
    const auto g = tpt_gram_matrix(ModelParams::tpt(lambda, 1.7), 10);
    CHECK((g.gram - Eigen::MatrixXd::Identity(11, 11)).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(g.convergence <= 1e-12);
  }
  for (double s : {0.5, 1.0, 3.0}) {
    const auto g = radial_gram_matrix(s, 10);
    CHECK((g.gram - Eigen::MatrixXd::Identity(11, 11)).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(g.tail_bound < 1e-12);
    CHECK(g.rho_max >= 20.0);
  }
  CHECK_THROWS_AS(tpt_gram_matrix(kP2, 10, 1e-12, 8, 16), QuadratureError);
}

TEST_CASE("coherent wavefunctions") {
  const auto grid = make_tpt_grid(256, kP2);
  const auto vac = coherent_wavefunction(FockVector::vacuum(8), grid, kP2);
  const auto one = coherent_wavefunction(FockVector::basis(1, 8), grid, kP2);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    CHECK(vac.values[i].real() == tpt_ground(grid->nodes[i], kP2));
    CHECK(one.values[i].real() == tpt_eigenfunction(1, grid->nodes[i], kP2));
  }
  const auto bg = closed_form_bg_coefficients(kP2, 0.5, 64);
  const auto psi = coherent_wavefunction(bg, grid, kP2);
  CHECK(std::abs(overlap_quadrature(psi, psi).real() - 1.0) < 1e-6);

  const auto ps = ModelParams::pseudoharmonic(1.5);
  const auto c = closed_form_bg_coefficients(ps, Complex(0.4, 0.9), 48);
  const auto rg = make_radial_grid(512, radial_domain_max(1.5, 47, 1e-12));
  const auto w = coherent_wavefunction(c, rg, ps);
  CHECK(std::abs(overlap_quadrature(w, w).real() - 1.0) < 1e-6);
}
