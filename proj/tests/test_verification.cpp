#include <doctest.h>

#include <cmath>
#include <vector>

#include "fdosc/errors.hpp"
#include "fdosc/verification.hpp"

using namespace fdosc;

TEST_CASE("rate exponent of a pure power law") {
  const std::vector<double> lambdas{1e2, 1e3, 1e4};
  for (double k : {0.5, 1.0, 2.0}) {
    std::vector<double> dev;
    for (double l : lambdas) dev.push_back(3.0 * std::pow(l, -k));
    CHECK(verify::rate_exponent(lambdas, dev) == doctest::Approx(k).epsilon(1e-12));
  }
}

TEST_CASE("check results record exclusions and fail on tight tolerances") {
  const auto p = ModelParams::tpt(2.0, 1.0);
  const auto ok = verify::commutator_suite(p, 32, 1e-12);
  for (const auto& c : ok) CHECK(c.passed);
  CHECK(ok.front().excluded == "n = N-1 = 31");

  const auto tight = verify::displacement_suite(p, 0.5, 64, 1e-300);
  bool any_failed = false;
  for (const auto& c : tight) any_failed = any_failed || !c.passed;
  CHECK(any_failed);

  nlohmann::json j = ok.front();
  CHECK(j.contains("id"));
  CHECK(j.contains("max_deviation"));
  CHECK(j.contains("tolerance"));
  CHECK(j.contains("passed"));
}

TEST_CASE("harmonic limit suite on the default sequence") {
  const std::vector<double> lambdas{1e2, 1e3, 1e4};
  const auto data = verify::harmonic_limit_data(1.0, lambdas, 64);
  CHECK(std::abs(data.rate_exponent - 1.0) < 0.1);
  for (const auto& c : verify::harmonic_limit_suite(data, 1e-2, 0.1)) CHECK(c.passed);
  const std::vector<double> rising{1e4, 1e3};
  const auto bad = verify::harmonic_limit_data(1.0, rising, 64);
  CHECK_FALSE(verify::harmonic_limit_suite(bad, 1e-2, 0.1).front().passed);
}

TEST_CASE("structural identity is not defined for the harmonic model") {
  CHECK_THROWS_AS(verify::structural_identity(ModelParams::harmonic(1.0), 0.5, 16, 1e-12), DomainError);
}
