#include "fdosc/fock_algebra.hpp"

#include <cmath>
#include <string>

#include "fdosc/errors.hpp"

namespace fdosc {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

void require_same_cutoff(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw SizeError(std::string(what) + ": cutoff mismatch (" + std::to_string(a) + " vs " +
                    std::to_string(b) + ")");
}

}  // namespace

FockVector FockVector::basis(std::size_t n, std::size_t cutoff) {
  if (n >= cutoff) throw SizeError("basis state index must be below the cutoff");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(idx(cutoff));
  c(idx(n)) = 1.0;
  return FockVector(std::move(c));
}

OperatorMatrix OperatorMatrix::identity(std::size_t cutoff) {
  return OperatorMatrix(Eigen::MatrixXcd::Identity(idx(cutoff), idx(cutoff)));
}

OperatorMatrix OperatorMatrix::diagonal(const Eigen::VectorXcd& d) {
  return OperatorMatrix(d.asDiagonal().toDenseMatrix());
}

OperatorMatrix operator*(const OperatorMatrix& x, const OperatorMatrix& y) {
  require_same_cutoff(x.cutoff(), y.cutoff(), "operator product");
  return OperatorMatrix(x.entries * y.entries);
}

OperatorMatrix operator+(const OperatorMatrix& x, const OperatorMatrix& y) {
  require_same_cutoff(x.cutoff(), y.cutoff(), "operator sum");
  return OperatorMatrix(x.entries + y.entries);
}

OperatorMatrix operator-(const OperatorMatrix& x, const OperatorMatrix& y) {
  require_same_cutoff(x.cutoff(), y.cutoff(), "operator difference");
  return OperatorMatrix(x.entries - y.entries);
}

OperatorMatrix operator*(Complex c, const OperatorMatrix& x) {
  return OperatorMatrix(c * x.entries);
}

LadderPair ladder_matrices(const DeformationFunction& f, std::size_t cutoff) {
  if (cutoff < 2) throw SizeError("ladder matrices need a cutoff of at least 2");
  Eigen::MatrixXcd lower = Eigen::MatrixXcd::Zero(idx(cutoff), idx(cutoff));
  for (std::size_t n = 1; n < cutoff; ++n) {
    lower(idx(n - 1), idx(n)) = std::sqrt(static_cast<double>(n) * f(n));
  }
  Eigen::MatrixXcd raise = lower.transpose();
  return {OperatorMatrix(std::move(lower)), OperatorMatrix(std::move(raise))};
}

OperatorMatrix number_matrix(std::size_t cutoff) {
  Eigen::VectorXcd d(idx(cutoff));
  for (std::size_t n = 0; n < cutoff; ++n) d(idx(n)) = static_cast<double>(n);
  return OperatorMatrix::diagonal(d);
}

OperatorMatrix commutator(const OperatorMatrix& x, const OperatorMatrix& y) {
  require_same_cutoff(x.cutoff(), y.cutoff(), "commutator");
  return OperatorMatrix(x.entries * y.entries - y.entries * x.entries);
}

OperatorMatrix deformed_hamiltonian_symmetric(const DeformationFunction& f, std::size_t cutoff,
                                              double omega) {
  if (cutoff < 1) throw SizeError("Hamiltonian needs a cutoff of at least 1");
  Eigen::VectorXcd d(idx(cutoff));
  for (std::size_t n = 0; n < cutoff; ++n) {
    const double x = static_cast<double>(n);
    d(idx(n)) = 0.5 * omega * (x * f(n) + (x + 1.0) * f(n + 1));
  }
  return OperatorMatrix::diagonal(d);
}

OperatorMatrix deformed_hamiltonian_antisymmetric(const DeformationFunction& f,
                                                  std::size_t cutoff) {
  if (cutoff < 1) throw SizeError("Hamiltonian needs a cutoff of at least 1");
  Eigen::VectorXcd d(idx(cutoff));
  for (std::size_t n = 0; n < cutoff; ++n) {
    const double x = static_cast<double>(n);
    d(idx(n)) = (x + 1.0) * f(n + 1) - x * f(n);
  }
  return OperatorMatrix::diagonal(d);
}

OperatorMatrix matrix_exponential(const OperatorMatrix& m) {
  return OperatorMatrix(expm(m.entries));
}

FockVector apply(const OperatorMatrix& m, const FockVector& v) {
  require_same_cutoff(m.cutoff(), v.cutoff(), "apply");
  return FockVector(m.entries * v.coeffs);
}

}  // namespace fdosc
