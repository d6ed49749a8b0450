// Scaling and squaring with diagonal Pade approximants (Higham, SIAM J.
// Matrix Anal. Appl. 26 (2005) 1179). The degree is the smallest of
// 3, 5, 7, 9, 13 whose theta bound covers ||M||_1; beyond theta_13 the
// matrix is scaled by 2^-s and the result squared s times.

#include <array>
#include <cmath>
#include <stdexcept>

#include "fdosc/fock_algebra.hpp"

namespace fdosc {

namespace {

using Mat = Eigen::MatrixXcd;

constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                           302702400.0,   30270240.0,   2162160.0,
                                           110880.0,      3960.0,       90.0,
                                           1.0};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

constexpr std::array<double, 5> kTheta = {1.495585217958292e-2, 2.539398330063230e-1,
                                          9.504178996162932e-1, 2.097847961257068e0,
                                          5.371920351148152e0};

double one_norm(const Mat& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

// Numerator / denominator halves for degrees <= 9: U collects odd powers,
// V even powers.
template <std::size_t K>
Mat pade_low(const Mat& a, const std::array<double, K>& b) {
  const auto n = a.rows();
  const Mat ident = Mat::Identity(n, n);
  const Mat a2 = a * a;
  Mat power = ident;
  Mat u_inner = b[1] * ident;
  Mat v = b[0] * ident;
  for (std::size_t j = 2; j < K; j += 2) {
    power = power * a2;
    v += b[j] * power;
    u_inner += b[j + 1] * power;
  }
  const Mat u = a * u_inner;
  return (v - u).partialPivLu().solve(v + u);
}

Mat pade13(const Mat& a) {
  const auto& b = kPade13;
  const auto n = a.rows();
  const Mat ident = Mat::Identity(n, n);
  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  const Mat u_tail = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
  const Mat u = a * (u_tail + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  const Mat v_tail = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
  const Mat v = v_tail + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
  return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("expm: matrix must be square");
  if (m.size() == 0) return m;
  if (!m.allFinite()) throw std::overflow_error("expm: non-finite input entries");

  const double norm = one_norm(m);
  if (norm <= kTheta[0]) return pade_low(m, kPade3);
  if (norm <= kTheta[1]) return pade_low(m, kPade5);
  if (norm <= kTheta[2]) return pade_low(m, kPade7);
  if (norm <= kTheta[3]) return pade_low(m, kPade9);

  const int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta[4]))));
  Mat result = pade13(std::ldexp(1.0, -squarings) * m);
  for (int i = 0; i < squarings; ++i) {
    result = result * result;
  }
  if (!result.allFinite()) throw std::overflow_error("expm: result overflows double precision");
  return result;
}

}  // namespace fdosc
