#include "sgl/translate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sgl/parallel.hpp"

namespace sgl {

namespace {

inline int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

void validate_pair(int n, int n_p, int l, int l_p, int m_abs) {
  SglIndex{n, l, 0}.validate();
  SglIndex{n_p, l_p, 0}.validate();
  if (m_abs < 0 || m_abs > std::min(l, l_p))
    throw DomainError("translation element: m_abs must lie in [0, min(l, l')]");
}

// Closed-form sum. The (-1)^k factor of a +z shift cancels against the extra
// (-1)^k of a -z shift.
double t_element_impl(int n, int n_p, int l, int l_p, int m_abs, double nu, bool toward_negative_z) {
  validate_pair(n, n_p, l, l_p, m_abs);
  if (!(nu > 0.0) || !std::isfinite(nu)) throw DomainError("t_element: nu must be positive and finite");
  const int a = n - l - 1;
  const SignedLogReal prefactor = SignedLogReal(parity_sign(a), 0.5 * std::log(std::numbers::pi) - std::log(4.0)) *
                                  normalization(n, l) * normalization(n_p, l_p) / factorial_slr(n_p - l_p - 1);
  const double log_nu = std::log(nu);
  KahanSum total;
  for (int k = std::abs(l - l_p); k <= l + l_p; ++k) {
    if ((l - l_p + k) % 2 != 0) continue;
    const int mu = mu_of(n_p, l, l_p, k);
    if (n < mu) continue;
    const double ak = a_coeff(l, l_p, m_abs, k);
    if (ak == 0.0) continue;
    const int k_sign = toward_negative_z ? 1 : parity_sign(k);
    const SignedLogReal outer = prefactor * SignedLogReal::from_double(k_sign * ak) * SignedLogReal(1, k * log_nu) /
                                gamma_half(k + 1);
    for (int j = 0; j <= a; ++j) {
      const SignedLogReal wj = outer * SignedLogReal(parity_sign(j), -log_factorial(j)) *
                               binom_general_slr(n - 0.5, a - j) * gamma_half(mu + j);
      for (int p = 0; p <= n - mu; ++p) {
        const double h = hyp2f1_finite(j, n - mu - p, p);
        if (h == 0.0) continue;
        const SignedLogReal term = wj * SignedLogReal::from_double(h) * pochhammer_slr(-mu + k - j + 1, p) /
                                   factorial_slr(p) / pochhammer_slr(k + 1.5, p) * SignedLogReal(1, 2 * p * log_nu);
        total.add(term.value());
      }
    }
  }
  return total.value();
}

inline std::size_t pair_index(int n, int l) { return static_cast<std::size_t>(n * (n - 1) / 2 + l); }

std::vector<TableEntry> table_layout(int bandwidth) {
  std::vector<TableEntry> out;
  for (int n = 1; n <= bandwidth; ++n)
    for (int n_p = 1; n_p <= bandwidth; ++n_p)
      for (int l = 0; l < n; ++l)
        for (int l_p = 0; l_p < n_p; ++l_p)
          for (int m = 0; m <= std::min(l, l_p); ++m) out.push_back({n, n_p, l, l_p, m, 0.0});
  return out;
}

}  // namespace

double a_coeff(int l, int l_p, int m, int k) {
  if (l < 0 || l_p < 0) throw DomainError("a_coeff: negative degree");
  const int m_abs = std::abs(m);
  if (m_abs > std::min(l, l_p)) throw DomainError("a_coeff: |m| must not exceed min(l, l')");
  if (k < std::abs(l - l_p) || k > l + l_p) throw DomainError("a_coeff: k outside the triangle range");
  if ((l - l_p + k) % 2 != 0) return 0.0;
  const double w = wigner3j(l, l_p, k, 0, 0, 0) * wigner3j(l, l_p, k, m_abs, -m_abs, 0);
  return parity_sign((k - l + l_p) / 2 + m_abs) * std::sqrt((2.0 * l + 1.0) * (2.0 * l_p + 1.0)) * (2.0 * k + 1.0) * w;
}

int mu_of(int n_p, int l, int l_p, int k) {
  if ((l - l_p + k) % 2 != 0) throw DomainError("mu_of: l - l' + k must be even");
  return n_p + (l - l_p + k) / 2;
}

double c_poly(int n, int n_p, int l, int l_p, int k, int j, double nu) {
  const int mu = mu_of(n_p, l, l_p, k);
  if (j < 0 || j > n - l - 1) throw DomainError("c_poly: j must lie in [0, n-l-1]");
  if (!(nu > 0.0)) throw DomainError("c_poly: nu must be positive");
  KahanSum sum;
  for (int p = 0; p <= n - mu; ++p) {
    sum.add(hyp2f1_finite(j, n - mu - p, p) * pochhammer(-mu + k - j + 1, p) /
            (std::exp(log_factorial(p)) * pochhammer(k + 1.5, p)) * std::pow(nu, 2 * p));
  }
  return sum.value();
}

double t_element(int n, int n_p, int l, int l_p, int m_abs, double nu) {
  return t_element_impl(n, n_p, l, l_p, m_abs, nu, false);
}

double t_element_signed(int n, int n_p, int l, int l_p, int m_abs, double nu_signed) {
  if (nu_signed == 0.0) throw DomainError("t_element_signed: zero shift");
  return t_element_impl(n, n_p, l, l_p, m_abs, std::abs(nu_signed), nu_signed < 0.0);
}

TranslationTable::TranslationTable(int bandwidth, double nu) : bandwidth_(bandwidth), nu_(nu) {
  if (bandwidth < 1) throw DomainError("TranslationTable: bandwidth must be >= 1");
  const std::size_t pairs = pair_index(bandwidth + 1, 0);
  values_.assign(pairs * pairs * static_cast<std::size_t>(bandwidth), std::numeric_limits<double>::quiet_NaN());
}

std::size_t TranslationTable::slot(int n, int n_p, int l, int l_p, int m_abs) const {
  validate_pair(n, n_p, l, l_p, m_abs);
  if (n > bandwidth_ || n_p > bandwidth_) throw DomainError("TranslationTable: order exceeds bandwidth");
  const std::size_t pairs = pair_index(bandwidth_ + 1, 0);
  return (pair_index(n, l) * pairs + pair_index(n_p, l_p)) * static_cast<std::size_t>(bandwidth_) +
         static_cast<std::size_t>(m_abs);
}

double TranslationTable::at(int n, int n_p, int l, int l_p, int m_abs) const {
  return values_[slot(n, n_p, l, l_p, m_abs)];
}

double& TranslationTable::at(int n, int n_p, int l, int l_p, int m_abs) { return values_[slot(n, n_p, l, l_p, m_abs)]; }

std::vector<TableEntry> TranslationTable::entries() const {
  auto out = table_layout(bandwidth_);
  for (auto& e : out) e.value = at(e.n, e.n_p, e.l, e.l_p, e.m_abs);
  return out;
}

std::size_t TranslationTable::entry_count() const { return table_layout(bandwidth_).size(); }

TranslationTable build_table(int bandwidth, double nu, int workers) {
  if (!(nu > 0.0)) throw DomainError("build_table: nu must be positive (use the identity coupling at nu = 0)");
  TranslationTable table(bandwidth, nu);
  auto layout = table_layout(bandwidth);
  const int threads = resolve_workers(workers);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(layout.size()); ++i) {
    auto& e = layout[static_cast<std::size_t>(i)];
    e.value = t_element(e.n, e.n_p, e.l, e.l_p, e.m_abs, nu);
  }
  for (const auto& e : layout) table.at(e.n, e.n_p, e.l, e.l_p, e.m_abs) = e.value;
  return table;
}

TranslationTable build_table_serial(int bandwidth, double nu) {
  if (!(nu > 0.0)) throw DomainError("build_table: nu must be positive (use the identity coupling at nu = 0)");
  TranslationTable table(bandwidth, nu);
  for (const auto& e : table_layout(bandwidth))
    table.at(e.n, e.n_p, e.l, e.l_p, e.m_abs) = t_element(e.n, e.n_p, e.l, e.l_p, e.m_abs, nu);
  return table;
}

Pose Pose::from_cartesian(const EulerZYZ& rotation, const Eigen::Vector3d& translation) {
  Pose pose;
  pose.rotation = rotation;
  const SphericalPoint s = to_spherical(translation);
  pose.nu = s.r;
  pose.theta_t = s.theta;
  pose.phi_t = s.r > 0.0 ? s.phi : 0.0;
  return pose;
}

Eigen::Vector3d Pose::translation() const { return to_cartesian({nu, theta_t, phi_t}); }

Eigen::Matrix3d alignment_rotation(const Pose& pose) { return rotation_y(-pose.theta_t) * rotation_z(-pose.phi_t); }

namespace {

template <typename TLookup>
std::complex<double> coupled_impl(const SglIndex& idx, const SglIndex& idx_p, const Pose& pose,
                                  const Eigen::Matrix3d& alignment, TLookup&& t_value) {
  idx.validate();
  idx_p.validate();
  if (pose.nu == 0.0) {
    if (idx.n != idx_p.n || idx.l != idx_p.l) return {0.0, 0.0};
    const auto d = wigner_d_matrix(idx.l, pose.rotation);
    return d(idx.m + idx.l, idx_p.m + idx.l);
  }
  const Eigen::Matrix3d combined = alignment * rotation_matrix(pose.rotation);
  const auto d_combined = wigner_d_matrix(idx.l, euler_from_matrix(combined));
  const auto d_align = wigner_d_matrix(idx_p.l, euler_from_matrix(alignment));
  const int m_max = std::min(idx.l, idx_p.l);
  std::complex<double> acc{0.0, 0.0};
  for (int mm = -m_max; mm <= m_max; ++mm) {
    acc += d_combined(idx.m + idx.l, mm + idx.l) * std::conj(d_align(idx_p.m + idx_p.l, mm + idx_p.l)) *
           t_value(std::abs(mm));
  }
  return acc;
}

}  // namespace

std::complex<double> coupled_element(const SglIndex& idx, const SglIndex& idx_p, const Pose& pose,
                                     const TranslationTable& table) {
  if (pose.nu > 0.0 && table.nu() != pose.nu)
    throw DomainError("coupled_element: table nu does not match the pose translation length");
  return coupled_impl(idx, idx_p, pose, alignment_rotation(pose),
                      [&](int m_abs) { return table.at(idx.n, idx_p.n, idx.l, idx_p.l, m_abs); });
}

std::complex<double> coupled_element(const SglIndex& idx, const SglIndex& idx_p, const Pose& pose) {
  return coupled_element(idx, idx_p, pose, alignment_rotation(pose));
}

std::complex<double> coupled_element(const SglIndex& idx, const SglIndex& idx_p, const Pose& pose,
                                     const Eigen::Matrix3d& alignment) {
  return coupled_impl(idx, idx_p, pose, alignment,
                      [&](int m_abs) { return t_element(idx.n, idx_p.n, idx.l, idx_p.l, m_abs, pose.nu); });
}

}  // namespace sgl
