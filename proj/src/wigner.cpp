#include "sgl/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "sgl/specfun.hpp"

namespace sgl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

}  // namespace

EulerZYZ EulerZYZ::canonical() const {
  if (!(beta >= 0.0 && beta <= std::numbers::pi)) throw DomainError("EulerZYZ: beta outside [0, pi]");
  return {wrap_angle(alpha), beta, wrap_angle(gamma)};
}

Eigen::Matrix3d rotation_z(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Eigen::Matrix3d r;
  r << c, -s, 0, s, c, 0, 0, 0, 1;
  return r;
}

Eigen::Matrix3d rotation_y(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Eigen::Matrix3d r;
  r << c, 0, s, 0, 1, 0, -s, 0, c;
  return r;
}

Eigen::Matrix3d rotation_matrix(const EulerZYZ& e) {
  return rotation_z(e.gamma) * rotation_y(e.beta) * rotation_z(e.alpha);
}

EulerZYZ euler_from_matrix(const Eigen::Matrix3d& r) {
  const double sin_beta = std::hypot(r(2, 0), r(2, 1));
  const double beta = std::atan2(sin_beta, r(2, 2));
  EulerZYZ e;
  if (sin_beta > 1e-12) {
    e.alpha = std::atan2(r(2, 1), -r(2, 0));
    e.beta = beta;
    e.gamma = std::atan2(r(1, 2), r(0, 2));
  } else if (r(2, 2) > 0.0) {
    e.alpha = std::atan2(r(1, 0), r(0, 0));
    e.beta = 0.0;
  } else {
    e.alpha = std::atan2(r(1, 0), r(1, 1));
    e.beta = std::numbers::pi;
  }
  return e.canonical();
}

double wigner3j(int l1, int l2, int l3, int m1, int m2, int m3) {
  if (l1 < 0 || l2 < 0 || l3 < 0) throw DomainError("wigner3j: negative degree");
  if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m3) > l3) throw DomainError("wigner3j: |m| exceeds l");
  if (m1 + m2 + m3 != 0) return 0.0;
  if (l3 < std::abs(l1 - l2) || l3 > l1 + l2) return 0.0;
  if (m1 == 0 && m2 == 0 && m3 == 0 && (l1 + l2 + l3) % 2 != 0) return 0.0;

  const double log_prefactor =
      0.5 * (log_factorial(l1 + l2 - l3) + log_factorial(l1 - l2 + l3) + log_factorial(-l1 + l2 + l3) -
             log_factorial(l1 + l2 + l3 + 1) + log_factorial(l1 + m1) + log_factorial(l1 - m1) +
             log_factorial(l2 + m2) + log_factorial(l2 - m2) + log_factorial(l3 + m3) + log_factorial(l3 - m3));
  const int t_min = std::max({0, l2 - l3 - m1, l1 - l3 + m2});
  const int t_max = std::min({l1 + l2 - l3, l1 - m1, l2 + m2});
  KahanSum sum;
  for (int t = t_min; t <= t_max; ++t) {
    const double log_den = log_factorial(t) + log_factorial(l3 - l2 + t + m1) + log_factorial(l3 - l1 + t - m2) +
                           log_factorial(l1 + l2 - l3 - t) + log_factorial(l1 - t - m1) + log_factorial(l2 - t + m2);
    const double term = std::exp(log_prefactor - log_den);
    sum.add((t % 2 == 0) ? term : -term);
  }
  const int phase_exp = l1 - l2 - m3;
  return (phase_exp % 2 == 0 ? 1.0 : -1.0) * sum.value();
}

double wigner_small_d(int l, int m, int m_p, double beta) {
  if (l < 0 || std::abs(m) > l || std::abs(m_p) > l) throw DomainError("wigner_small_d: |m| exceeds l");
  // Factorial sum of the standard d^l_{ab} with a = m', b = m.
  const int a = m_p;
  const int b = m;
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  const double log_root =
      0.5 * (log_factorial(l + a) + log_factorial(l - a) + log_factorial(l + b) + log_factorial(l - b));
  const int s_min = std::max(0, b - a);
  const int s_max = std::min(l + b, l - a);
  KahanSum sum;
  for (int k = s_min; k <= s_max; ++k) {
    const double log_den = log_factorial(l + b - k) + log_factorial(k) + log_factorial(a - b + k) + log_factorial(l - a - k);
    const double mag = std::exp(log_root - log_den) * std::pow(c, 2 * l + b - a - 2 * k) * std::pow(s, a - b + 2 * k);
    sum.add(((a - b + k) % 2 == 0) ? mag : -mag);
  }
  return sum.value();
}

Eigen::MatrixXcd wigner_d_matrix(int l, const EulerZYZ& euler) {
  if (l < 0) throw DomainError("wigner_d_matrix: negative degree");
  const int dim = 2 * l + 1;
  Eigen::MatrixXcd d(dim, dim);
  for (int m = -l; m <= l; ++m) {
    for (int mp = -l; mp <= l; ++mp) {
      d(m + l, mp + l) = std::polar(1.0, -m * euler.alpha) * wigner_small_d(l, m, mp, euler.beta) *
                         std::polar(1.0, -mp * euler.gamma);
    }
  }
  return d;
}

}  // namespace sgl
