#pragma once

#include <complex>
#include <cstddef>
#include <utility>

#include <Eigen/Dense>

#include "fdosc/model_catalog.hpp"

namespace fdosc {

using Complex = std::complex<double>;

/// Coefficients on the truncated number basis |0>, ..., |N-1>.
struct FockVector {
  Eigen::VectorXcd coeffs;
  /// |c_{N-1}|^2 / sum |c_n|^2 at construction; 0 for exact basis states.
  double tail_mass = 0.0;

  FockVector() = default;
  explicit FockVector(Eigen::VectorXcd c, double tail = 0.0)
      : coeffs(std::move(c)), tail_mass(tail) {}

  std::size_t cutoff() const { return static_cast<std::size_t>(coeffs.size()); }
  double norm() const { return coeffs.norm(); }
  Complex operator[](std::size_t n) const { return coeffs(static_cast<Eigen::Index>(n)); }

  static FockVector basis(std::size_t n, std::size_t cutoff);
  static FockVector vacuum(std::size_t cutoff) { return basis(0, cutoff); }
};

/// Dense N x N operator on the truncated number basis.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;

  OperatorMatrix() = default;
  explicit OperatorMatrix(Eigen::MatrixXcd m) : entries(std::move(m)) {}

  std::size_t cutoff() const { return static_cast<std::size_t>(entries.rows()); }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  static OperatorMatrix identity(std::size_t cutoff);
  static OperatorMatrix diagonal(const Eigen::VectorXcd& d);
};

OperatorMatrix operator*(const OperatorMatrix& x, const OperatorMatrix& y);
OperatorMatrix operator+(const OperatorMatrix& x, const OperatorMatrix& y);
OperatorMatrix operator-(const OperatorMatrix& x, const OperatorMatrix& y);
OperatorMatrix operator*(Complex c, const OperatorMatrix& x);

struct LadderPair {
  OperatorMatrix lower;
  OperatorMatrix raise;
};

/// lower[n-1, n] = sqrt(n f^2(n)), raise[n+1, n] = sqrt((n+1) f^2(n+1)).
/// Throws SizeError for cutoff < 2.
LadderPair ladder_matrices(const DeformationFunction& f, std::size_t cutoff);

/// diag(0, 1, ..., N-1).
OperatorMatrix number_matrix(std::size_t cutoff);

/// XY - YX. Throws SizeError on mismatched cutoffs.
OperatorMatrix commutator(const OperatorMatrix& x, const OperatorMatrix& y);

/// (Omega/2)(A^+ A + A A^+) = (Omega/2)(n f^2(n) + (n+1) f^2(n+1)), evaluated
/// on the untruncated algebra so every diagonal entry is exact.
OperatorMatrix deformed_hamiltonian_symmetric(const DeformationFunction& f, std::size_t cutoff,
                                              double omega);

/// A A^+ - A^+ A = (n+1) f^2(n+1) - n f^2(n), untruncated.
OperatorMatrix deformed_hamiltonian_antisymmetric(const DeformationFunction& f,
                                                  std::size_t cutoff);

/// exp(M) by scaling and squaring with diagonal Pade approximants of degree
/// 3..13. Throws std::overflow_error when the input is not finite or the
/// result overflows.
OperatorMatrix matrix_exponential(const OperatorMatrix& m);

/// Eigen-level entry point of the same kernel.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m);

/// M v, no normalization. Throws SizeError on mismatched cutoffs.
FockVector apply(const OperatorMatrix& m, const FockVector& v);

}  // namespace fdosc
