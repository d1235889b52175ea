#pragma once

#include <Eigen/Dense>

namespace sgl {

/// zyz Euler angles. The rotation is R = Rz(gamma) Ry(beta) Rz(alpha): alpha is
/// applied first, all rotations active about fixed axes. With this reading
/// <R H_nlm, H_nlm'>_H = D^{(l)}_{mm'}(R) for the D matrix below.
struct EulerZYZ {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  /// Same rotation with alpha, gamma wrapped into [0, 2pi); beta must lie in [0, pi].
  EulerZYZ canonical() const;
  static EulerZYZ identity() { return {}; }
};

Eigen::Matrix3d rotation_matrix(const EulerZYZ& euler);
/// Inverse of rotation_matrix on canonical angles (gimbal lock puts everything in alpha).
EulerZYZ euler_from_matrix(const Eigen::Matrix3d& rotation);
Eigen::Matrix3d rotation_z(double angle);
Eigen::Matrix3d rotation_y(double angle);

/// Wigner 3j symbol via Racah's single sum, products in log domain.
double wigner3j(int l1, int l2, int l3, int m1, int m2, int m3);

/// d^{(l)}_{mm'}(beta) in the index order matching the D matrix below.
double wigner_small_d(int l, int m, int m_p, double beta);

/// (2l+1)x(2l+1) matrix, entry (m+l, m'+l) = e^{-i m alpha} d_{mm'}(beta) e^{-i m' gamma}.
Eigen::MatrixXcd wigner_d_matrix(int l, const EulerZYZ& euler);

}  // namespace sgl
