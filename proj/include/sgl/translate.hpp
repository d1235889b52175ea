#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

#include "sgl/sgl.hpp"
#include "sgl/wigner.hpp"

namespace sgl {

/// Coupling weight A_k^{(l l' m)} of the spherical Bessel addition theorem.
/// Exact zero when l - l' + k is odd; independent of the sign of m.
double a_coeff(int l, int l_p, int m, int k);

/// mu = n' + (l - l' + k)/2; requires l - l' + k even.
int mu_of(int n_p, int l, int l_p, int k);

/// The polynomial C_j^{(n n' l l' k)}(nu) (empty sum, hence 0, when n < mu).
double c_poly(int n, int n_p, int l, int l_p, int k, int j, double nu);

/// Closed-form translation matrix element T_{nn'll'}^{(|m|)}(nu) for a shift
/// by +nu along z, nu > 0.
double t_element(int n, int n_p, int l, int l_p, int m_abs, double nu);

/// Same element for a signed shift along z; negative values translate
/// towards -z. Zero is rejected.
double t_element_signed(int n, int n_p, int l, int l_p, int m_abs, double nu_signed);

struct TableEntry {
  int n;
  int n_p;
  int l;
  int l_p;
  int m_abs;
  double value;
};

/// All T elements for one nu with n, n' <= B and m_abs <= min(l, l').
class TranslationTable {
public:
  TranslationTable(int bandwidth, double nu);

  int bandwidth() const { return bandwidth_; }
  double nu() const { return nu_; }

  double at(int n, int n_p, int l, int l_p, int m_abs) const;
  double& at(int n, int n_p, int l, int l_p, int m_abs);

  /// Entries sorted by (n, n', l, l', m_abs).
  std::vector<TableEntry> entries() const;
  std::size_t entry_count() const;

private:
  std::size_t slot(int n, int n_p, int l, int l_p, int m_abs) const;

  int bandwidth_;
  double nu_;
  std::vector<double> values_;
};

/// Fills every entry with t_element; entries are distributed over OpenMP workers.
TranslationTable build_table(int bandwidth, double nu, int workers = 0);
/// Serial reference for build_table.
TranslationTable build_table_serial(int bandwidth, double nu);

/// Rigid pose: rotation applied first, then translation t = nu * (direction).
struct Pose {
  EulerZYZ rotation;
  double nu = 0.0;
  double theta_t = 0.0;
  double phi_t = 0.0;

  static Pose from_cartesian(const EulerZYZ& rotation, const Eigen::Vector3d& translation);
  Eigen::Vector3d translation() const;
};

/// Rotation R~ = Ry(-theta_t) Rz(-phi_t) that maps the translation direction onto +z.
Eigen::Matrix3d alignment_rotation(const Pose& pose);

/// <T(t) R H_idx, H_idx_p>_H via Wigner-D coupling and a z-translation table.
/// nu must match pose.nu (the table is only consulted when pose.nu > 0).
std::complex<double> coupled_element(const SglIndex& idx, const SglIndex& idx_p, const Pose& pose,
                                     const TranslationTable& table);
/// Same, computing the needed T values directly.
std::complex<double> coupled_element(const SglIndex& idx, const SglIndex& idx_p, const Pose& pose);
/// Same, with an explicit alignment rotation (must send the translation to +z).
std::complex<double> coupled_element(const SglIndex& idx, const SglIndex& idx_p, const Pose& pose,
                                     const Eigen::Matrix3d& alignment);

}  // namespace sgl
