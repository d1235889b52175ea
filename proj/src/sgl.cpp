#include "sgl/sgl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sgl/parallel.hpp"

namespace sgl {

namespace {

std::size_t block_start(int n) {
  const auto nn = static_cast<std::size_t>(n);
  return (nn - 1) * nn * (2 * nn - 1) / 6;
}

// Index of the (l, m) pair in l-major order, l < bandwidth.
inline std::size_t lm_index(int l, int m) { return static_cast<std::size_t>(l * l + l + m); }

}  // namespace

void SglIndex::validate() const {
  if (!valid())
    throw DomainError("invalid SGL index (" + std::to_string(n) + ", " + std::to_string(l) + ", " +
                      std::to_string(m) + ")");
}

std::size_t spectrum_size(int bandwidth) {
  if (bandwidth < 0) throw DomainError("spectrum_size: negative bandwidth");
  return block_start(bandwidth + 1);
}

std::size_t storage_offset(const SglIndex& idx) {
  idx.validate();
  return block_start(idx.n) + static_cast<std::size_t>(idx.l * idx.l + idx.m + idx.l);
}

SglIndex index_at(std::size_t offset) {
  int n = 1;
  while (block_start(n + 1) <= offset) ++n;
  const auto rem = static_cast<int>(offset - block_start(n));
  int l = static_cast<int>(std::sqrt(static_cast<double>(rem)));
  while (l * l > rem) --l;
  while ((l + 1) * (l + 1) <= rem) ++l;
  return {n, l, rem - l * l - l};
}

SphericalPoint to_spherical(const Eigen::Vector3d& x) {
  SphericalPoint p;
  p.r = x.norm();
  p.theta = p.r > 0.0 ? std::acos(std::clamp(x.z() / p.r, -1.0, 1.0)) : 0.0;
  p.phi = std::atan2(x.y(), x.x());
  if (p.phi < 0.0) p.phi += 2.0 * std::numbers::pi;
  return p;
}

Eigen::Vector3d to_cartesian(const SphericalPoint& p) {
  const double s = std::sin(p.theta);
  return {p.r * s * std::cos(p.phi), p.r * s * std::sin(p.phi), p.r * std::cos(p.theta)};
}

SglSpectrum::SglSpectrum(int bandwidth) : bandwidth_(bandwidth) {
  if (bandwidth < 1) throw DomainError("SglSpectrum: bandwidth must be >= 1");
  coeffs_.assign(spectrum_size(bandwidth), {0.0, 0.0});
}

SglSpectrum::SglSpectrum(int bandwidth, std::vector<std::complex<double>> coefficients)
    : bandwidth_(bandwidth), coeffs_(std::move(coefficients)) {
  if (bandwidth < 1) throw DomainError("SglSpectrum: bandwidth must be >= 1");
  if (coeffs_.size() != spectrum_size(bandwidth))
    throw InputError("SglSpectrum: expected " + std::to_string(spectrum_size(bandwidth)) + " coefficients, got " +
                     std::to_string(coeffs_.size()));
}

std::complex<double>& SglSpectrum::at(const SglIndex& idx) {
  if (idx.n > bandwidth_) throw DomainError("SglSpectrum: order n exceeds bandwidth");
  return coeffs_[storage_offset(idx)];
}

const std::complex<double>& SglSpectrum::at(const SglIndex& idx) const {
  if (idx.n > bandwidth_) throw DomainError("SglSpectrum: order n exceeds bandwidth");
  return coeffs_[storage_offset(idx)];
}

SglSpectrum SglSpectrum::padded(int bandwidth) const {
  if (bandwidth < bandwidth_) throw DomainError("SglSpectrum::padded: cannot shrink bandwidth");
  SglSpectrum out(bandwidth);
  std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin());
  return out;
}

double SglSpectrum::norm_squared() const {
  KahanSum s;
  for (const auto& c : coeffs_) s.add(std::norm(c));
  return s.value();
}

SignedLogReal normalization(int n, int l) {
  SglIndex{n, l, 0}.validate();
  const double log_sq = std::log(2.0) + log_factorial(n - l - 1) - gamma_half(n).log_magnitude();
  return {1, 0.5 * log_sq};
}

double radial(int n, int l, double r) {
  SglIndex{n, l, 0}.validate();
  if (r < 0.0) throw DomainError("radial: negative radius");
  return laguerre(n - l - 1, HalfInteger::half_odd(l), r * r) * std::pow(r, l);
}

std::complex<double> eval_basis(const SglIndex& idx, const SphericalPoint& point) {
  idx.validate();
  return normalization(idx.n, idx.l).value() * radial(idx.n, idx.l, point.r) *
         sph_harm(idx.l, idx.m, point.theta, point.phi);
}

std::complex<double> eval_basis(const SglIndex& idx, const Eigen::Vector3d& x) {
  return eval_basis(idx, to_spherical(x));
}

double weighted_bessel_closed(int n, int l, double gamma, double beta) {
  SglIndex{n, l, 0}.validate();
  if (!(gamma > 0.0 && gamma <= 1.0)) throw DomainError("weighted_bessel_closed: gamma must lie in (0, 1]");
  if (!(beta > 0.0)) throw DomainError("weighted_bessel_closed: beta must be positive");
  const int k = n - l - 1;
  const double norm = normalization(n, l).value();
  if (gamma == 1.0) {
    return norm * std::exp(-log_factorial(k)) * std::pow(beta, 2 * n - l - 2) * std::exp(-beta * beta / 4.0) *
           std::pow(0.5, 2.0 * n - l - 0.5);
  }
  const double x = beta * beta / (4.0 * gamma * (1.0 - gamma));
  return norm * std::pow(gamma - 1.0, k) / std::pow(gamma, n + 0.5) * std::pow(beta, l) *
         laguerre(k, HalfInteger::half_odd(l), x) * std::exp(-beta * beta / (4.0 * gamma)) * std::pow(0.5, l + 1.5);
}

std::vector<SphericalPoint> sample_grid(int bandwidth) {
  const QuadratureRule radial_q = radial_rule(bandwidth);
  const QuadratureRule angular_q = angular_rule(bandwidth);
  std::vector<SphericalPoint> grid;
  grid.reserve(radial_q.size() * angular_q.size());
  for (std::size_t ir = 0; ir < radial_q.size(); ++ir) {
    const double r = std::sqrt(radial_q.node(ir)[0]);
    for (std::size_t ia = 0; ia < angular_q.size(); ++ia) {
      const auto a = angular_q.node(ia);
      grid.push_back({r, a[0], a[1]});
    }
  }
  return grid;
}

SglSpectrum forward_transform(const SphericalFunction& f, int bandwidth, int workers) {
  const auto grid = sample_grid(bandwidth);
  std::vector<std::complex<double>> samples(grid.size());
  // std::function may wrap non-thread-safe callables; sample serially.
  for (std::size_t i = 0; i < grid.size(); ++i) samples[i] = f(grid[i]);
  return forward_transform(samples, bandwidth, workers);
}

SglSpectrum forward_transform(std::span<const std::complex<double>> samples, int bandwidth, int workers) {
  const QuadratureRule radial_q = radial_rule(bandwidth);
  const QuadratureRule angular_q = angular_rule(bandwidth);
  const std::size_t n_rad = radial_q.size();
  const std::size_t n_ang = angular_q.size();
  if (samples.size() != n_rad * n_ang)
    throw InputError("forward_transform: expected " + std::to_string(n_rad * n_ang) + " samples on the rule grid, got " +
                     std::to_string(samples.size()));
  const int threads = resolve_workers(workers);
  const std::size_t n_lm = static_cast<std::size_t>(bandwidth) * bandwidth;

  // conj(Y_lm) at every angular node.
  std::vector<std::complex<double>> ylm_conj(n_ang * n_lm);
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::ptrdiff_t ia = 0; ia < static_cast<std::ptrdiff_t>(n_ang); ++ia) {
    const auto a = angular_q.node(static_cast<std::size_t>(ia));
    for (int l = 0; l < bandwidth; ++l)
      for (int m = -l; m <= l; ++m) ylm_conj[ia * n_lm + lm_index(l, m)] = std::conj(sph_harm(l, m, a[0], a[1]));
  }

  // Angular projection per radial node.
  std::vector<std::complex<double>> projected(n_rad * n_lm);
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(n_rad * n_lm); ++t) {
    const std::size_t ir = static_cast<std::size_t>(t) / n_lm;
    const std::size_t lm = static_cast<std::size_t>(t) % n_lm;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t ia = 0; ia < n_ang; ++ia)
      acc += angular_q.weights[ia] * samples[ir * n_ang + ia] * ylm_conj[ia * n_lm + lm];
    projected[static_cast<std::size_t>(t)] = acc;
  }

  SglSpectrum out(bandwidth);
  auto coeffs = out.coefficients();
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(coeffs.size()); ++c) {
    const SglIndex idx = index_at(static_cast<std::size_t>(c));
    const double norm = normalization(idx.n, idx.l).value();
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t ir = 0; ir < n_rad; ++ir) {
      const double r = std::sqrt(radial_q.node(ir)[0]);
      // r^2 dr = s^{1/2} ds / 2
      acc += 0.5 * radial_q.weights[ir] * norm * radial(idx.n, idx.l, r) * projected[ir * n_lm + lm_index(idx.l, idx.m)];
    }
    coeffs[static_cast<std::size_t>(c)] = acc;
  }
  return out;
}

SglSpectrum forward_transform_serial(std::span<const std::complex<double>> samples, int bandwidth) {
  const QuadratureRule radial_q = radial_rule(bandwidth);
  const QuadratureRule angular_q = angular_rule(bandwidth);
  const auto grid = sample_grid(bandwidth);
  if (samples.size() != grid.size())
    throw InputError("forward_transform: expected " + std::to_string(grid.size()) + " samples on the rule grid, got " +
                     std::to_string(samples.size()));
  SglSpectrum out(bandwidth);
  auto coeffs = out.coefficients();
  for (std::size_t c = 0; c < coeffs.size(); ++c) {
    const SglIndex idx = index_at(c);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double w = 0.5 * radial_q.weights[i / angular_q.size()] * angular_q.weights[i % angular_q.size()];
      acc += w * samples[i] * std::conj(eval_basis(idx, grid[i]));
    }
    coeffs[c] = acc;
  }
  return out;
}

std::vector<std::complex<double>> synthesize(const SglSpectrum& spectrum, std::span<const SphericalPoint> points,
                                             int workers) {
  const int bandwidth = spectrum.bandwidth();
  const auto coeffs = spectrum.coefficients();
  std::vector<double> norms(coeffs.size());
  for (std::size_t c = 0; c < coeffs.size(); ++c) {
    const SglIndex idx = index_at(c);
    norms[c] = normalization(idx.n, idx.l).value();
  }
  std::vector<std::complex<double>> values(points.size());
  const int threads = resolve_workers(workers);
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(points.size()); ++i) {
    const SphericalPoint& p = points[static_cast<std::size_t>(i)];
    std::vector<std::complex<double>> ylm(static_cast<std::size_t>(bandwidth) * bandwidth);
    for (int l = 0; l < bandwidth; ++l)
      for (int m = -l; m <= l; ++m) ylm[lm_index(l, m)] = sph_harm(l, m, p.theta, p.phi);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
      if (coeffs[c] == std::complex<double>{0.0, 0.0}) continue;
      const SglIndex idx = index_at(c);
      acc += coeffs[c] * norms[c] * radial(idx.n, idx.l, p.r) * ylm[lm_index(idx.l, idx.m)];
    }
    values[static_cast<std::size_t>(i)] = acc;
  }
  return values;
}

}  // namespace sgl
