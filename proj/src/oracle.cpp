#include "sgl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sgl/quadrature.hpp"
#include "sgl/specfun.hpp"

namespace sgl::oracle {

namespace {

// Integrals over [0, inf) are cut where the Gaussian factor drops below this.
constexpr double kGaussianCut = 1e-18;
constexpr int kPanels = 2048;
constexpr int kPanelNodes = 8;

template <typename F>
double composite_legendre(F&& f, double upper) {
  static const Rule1D gl = gauss_legendre(kPanelNodes);
  const double h = upper / kPanels;
  KahanSum sum;
  for (int p = 0; p < kPanels; ++p) {
    const double mid = (p + 0.5) * h;
    for (int i = 0; i < kPanelNodes; ++i) sum.add(0.5 * h * gl.weights[i] * f(mid + 0.5 * h * gl.nodes[i]));
  }
  return sum.value();
}

}  // namespace

std::complex<double> inner_product_h(const Evaluable& f, const Evaluable& g, int points_per_axis) {
  const QuadratureRule rule = hermite_rule(points_per_axis);
  KahanSum re;
  KahanSum im;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto c = rule.node(i);
    const Eigen::Vector3d x(c[0], c[1], c[2]);
    const std::complex<double> v = rule.weights[i] * f(x) * std::conj(g(x));
    re.add(v.real());
    im.add(v.imag());
  }
  return {re.value(), im.value()};
}

Evaluable basis_function(const SglIndex& idx) {
  idx.validate();
  return [idx](const Eigen::Vector3d& x) { return eval_basis(idx, x); };
}

Evaluable spectrum_function(const SglSpectrum& spectrum) {
  return [spectrum](const Eigen::Vector3d& x) {
    const SphericalPoint p = to_spherical(x);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
      const auto c = spectrum.coefficients()[i];
      if (c != 0.0) acc += c * eval_basis(index_at(i), p);
    }
    return acc;
  };
}

Evaluable moved(Evaluable f, const Pose& pose) {
  const Eigen::Matrix3d inverse = rotation_matrix(pose.rotation).transpose();
  const Eigen::Vector3d t = pose.translation();
  return [f = std::move(f), inverse, t](const Eigen::Vector3d& x) { return f(Eigen::Vector3d(inverse * (x - t))); };
}

std::complex<double> t_element_numeric(int n, int n_p, int l, int l_p, int m, int m_p, double nu_signed) {
  const SglIndex idx{n, l, m};
  const SglIndex idx_p{n_p, l_p, m_p};
  idx.validate();
  idx_p.validate();
  const Eigen::Vector3d shift(0.0, 0.0, nu_signed);
  const Evaluable f = [idx, shift](const Eigen::Vector3d& x) { return eval_basis(idx, Eigen::Vector3d(x - shift)); };
  return inner_product_h(f, basis_function(idx_p), 2 * std::max(n, n_p));
}

std::complex<double> rotation_element_numeric(int n, int l, int m, int n_p, int l_p, int m_p, const EulerZYZ& euler) {
  Pose pose;
  pose.rotation = euler;
  return pose_element_numeric({n, l, m}, {n_p, l_p, m_p}, pose);
}

std::complex<double> pose_element_numeric(const SglIndex& idx, const SglIndex& idx_p, const Pose& pose) {
  return inner_product_h(moved(basis_function(idx), pose), basis_function(idx_p), 2 * std::max(idx.n, idx_p.n));
}

TranslationTable table_numeric(int bandwidth, double nu) {
  TranslationTable table(bandwidth, nu);
  const QuadratureRule rule = hermite_rule(2 * bandwidth);
  const std::size_t count = spectrum_size(bandwidth);
  const std::size_t nodes = rule.size();
  // Row i: H_i at the shifted nodes (times the weight) and at the plain nodes.
  std::vector<std::complex<double>> shifted(count * nodes);
  std::vector<std::complex<double>> plain(count * nodes);
  for (std::size_t q = 0; q < nodes; ++q) {
    const auto c = rule.node(q);
    const SphericalPoint ps = to_spherical(Eigen::Vector3d(c[0], c[1], c[2] - nu));
    const SphericalPoint pp = to_spherical(Eigen::Vector3d(c[0], c[1], c[2]));
    for (std::size_t i = 0; i < count; ++i) {
      const SglIndex idx = index_at(i);
      shifted[i * nodes + q] = rule.weights[q] * eval_basis(idx, ps);
      plain[i * nodes + q] = eval_basis(idx, pp);
    }
  }
  for (const auto& e : table.entries()) {
    const std::size_t a = storage_offset({e.n, e.l, e.m_abs});
    const std::size_t b = storage_offset({e.n_p, e.l_p, e.m_abs});
    KahanSum sum;
    for (std::size_t q = 0; q < nodes; ++q) sum.add((shifted[a * nodes + q] * std::conj(plain[b * nodes + q])).real());
    table.at(e.n, e.n_p, e.l, e.l_p, e.m_abs) = sum.value();
  }
  return table;
}

double bessel_transform_numeric(int n, int l, double gamma, double beta) {
  SglIndex{n, l, 0}.validate();
  if (!(gamma > 0.0 && gamma <= 1.0)) throw DomainError("bessel_transform_numeric: gamma must lie in (0, 1]");
  const double norm = normalization(n, l).value();
  const double upper = std::sqrt(-std::log(kGaussianCut) / gamma);
  const double integral = composite_legendre(
      [&](double xi) {
        return norm * radial(n, l, xi) * sph_bessel(l, beta * xi) * xi * xi * std::exp(-gamma * xi * xi);
      },
      upper);
  return std::sqrt(2.0 / std::numbers::pi) * integral;
}

double inversion_numeric(int n, int l, double gamma, double xi) {
  SglIndex{n, l, 0}.validate();
  if (!(gamma > 0.0 && gamma <= 1.0)) throw DomainError("inversion_numeric: gamma must lie in (0, 1]");
  if (!(xi > 0.0)) throw DomainError("inversion_numeric: xi must be positive");
  // Both closed-form branches decay like exp(-beta^2 / (4 gamma)).
  const double upper = std::sqrt(-4.0 * gamma * std::log(kGaussianCut));
  const double integral = composite_legendre(
      [&](double beta) { return weighted_bessel_closed(n, l, gamma, beta) * sph_bessel(l, beta * xi) * beta * beta; },
      upper);
  // The transform was taken of N_nl R_nl.
  return std::exp(gamma * xi * xi) * std::sqrt(2.0 / std::numbers::pi) * integral / normalization(n, l).value();
}

DpqValue d_pq(int n, int n_p, int l, int l_p, int k, int p, int q) {
  SglIndex{n, l, 0}.validate();
  SglIndex{n_p, l_p, 0}.validate();
  if (p < 0 || q < 0) throw DomainError("d_pq: p and q must be non-negative");
  const int mu = mu_of(n_p, l, l_p, k);
  KahanSum sum;
  double magnitude = 0.0;
  for (int j = 0; j <= n - l - 1; ++j) {
    const double h = hyp2f1_finite(j, q, p);
    if (h == 0.0) continue;
    const SignedLogReal term = SignedLogReal((j % 2 == 0) ? 1 : -1, -log_factorial(j)) *
                               binom_general_slr(n - 0.5, n - l - 1 - j) * gamma_half(mu + j) *
                               pochhammer_slr(-mu + k - j + 1, p) * SignedLogReal::from_double(h);
    const double v = term.value();
    sum.add(v);
    magnitude += std::abs(v);
  }
  return {sum.value(), magnitude};
}

double addition_theorem_residual(int l, int m, double beta, double nu, const SphericalPoint& point, int l_max) {
  if (l < 0 || std::abs(m) > l) throw DomainError("addition_theorem_residual: need |m| <= l");
  if (!(point.r > 0.0)) throw DomainError("addition_theorem_residual: point must have r > 0");
  if (l_max < l) throw DomainError("addition_theorem_residual: l_max must be >= l");
  const std::complex<double> lhs = sph_bessel(l, beta * point.r) * sph_harm(l, m, point.theta, point.phi);
  const Eigen::Vector3d x = to_cartesian(point);
  const SphericalPoint xp = to_spherical(Eigen::Vector3d(x.x(), x.y(), x.z() - nu));
  std::complex<double> rhs{0.0, 0.0};
  for (int lp = std::abs(m); lp <= l_max; ++lp) {
    double radial_sum = 0.0;
    for (int k = std::abs(l - lp); k <= l + lp; ++k) {
      const double a = a_coeff(l, lp, m, k);
      if (a == 0.0) continue;
      radial_sum += a * sph_bessel(k, beta * nu);
    }
    rhs += radial_sum * sph_bessel(lp, beta * xp.r) * sph_harm(lp, m, xp.theta, xp.phi);
  }
  return std::abs(lhs - rhs);
}

OracleReport make_report(std::string case_id, std::complex<double> closed_form, std::complex<double> oracle_value,
                         double tolerance, double floor) {
  OracleReport r;
  r.case_id = std::move(case_id);
  r.closed_form = closed_form;
  r.oracle_value = oracle_value;
  r.abs_err = std::abs(closed_form - oracle_value);
  const double scale = std::abs(oracle_value);
  if (scale > 0.0)
    r.rel_err = r.abs_err / scale;
  else
    r.rel_err = r.abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::max();
  r.passed = r.rel_err <= tolerance || r.abs_err <= floor;
  return r;
}

}  // namespace sgl::oracle
