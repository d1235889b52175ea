#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sgl/quadrature.hpp"
#include "sgl/specfun.hpp"

namespace sgl {

/// Orders (n, l, m) of one SGL basis function: n >= 1, 0 <= l < n, |m| <= l.
struct SglIndex {
  int n = 1;
  int l = 0;
  int m = 0;

  bool valid() const { return n >= 1 && l >= 0 && l < n && m >= -l && m <= l; }
  void validate() const;
  auto operator<=>(const SglIndex&) const = default;
};

/// Number of basis functions with n <= B: B(B+1)(2B+1)/6.
std::size_t spectrum_size(int bandwidth);
/// Position of idx in lexicographic (n, l, m) order, m ascending from -l.
std::size_t storage_offset(const SglIndex& idx);
SglIndex index_at(std::size_t offset);

/// Point in spherical coordinates: r >= 0, theta in [0, pi], phi in [0, 2pi).
struct SphericalPoint {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

SphericalPoint to_spherical(const Eigen::Vector3d& x);
Eigen::Vector3d to_cartesian(const SphericalPoint& p);

/// Bandlimited coefficient vector, one entry per basis function with n <= B.
class SglSpectrum {
public:
  explicit SglSpectrum(int bandwidth);
  SglSpectrum(int bandwidth, std::vector<std::complex<double>> coefficients);

  int bandwidth() const { return bandwidth_; }
  std::size_t size() const { return coeffs_.size(); }

  std::complex<double>& at(const SglIndex& idx);
  const std::complex<double>& at(const SglIndex& idx) const;
  std::span<std::complex<double>> coefficients() { return coeffs_; }
  std::span<const std::complex<double>> coefficients() const { return coeffs_; }

  /// Same function expressed at a larger bandwidth (new entries zero).
  SglSpectrum padded(int bandwidth) const;
  /// Weighted norm squared: sum |c|^2 (Parseval).
  double norm_squared() const;

private:
  int bandwidth_;
  std::vector<std::complex<double>> coeffs_;
};

/// N_nl = sqrt(2 (n-l-1)! / Gamma(n+1/2)).
SignedLogReal normalization(int n, int l);
/// R_nl(r) = L_{n-l-1}^{(l+1/2)}(r^2) r^l.
double radial(int n, int l, double r);
std::complex<double> eval_basis(const SglIndex& idx, const SphericalPoint& point);
std::complex<double> eval_basis(const SglIndex& idx, const Eigen::Vector3d& x);

/// Closed-form weighted spherical Bessel transform of N_nl R_nl, 0 < gamma <= 1.
double weighted_bessel_closed(int n, int l, double gamma, double beta);

using SphericalFunction = std::function<std::complex<double>(const SphericalPoint&)>;

/// Nodes of radial_rule(B) x angular_rule(B): radial index outermost, then
/// theta, then phi.
std::vector<SphericalPoint> sample_grid(int bandwidth);

/// SGL Fourier coefficients by product quadrature, exact for bandwidth <= B.
/// Separable evaluation parallelized with OpenMP; workers <= 0 uses the default.
SglSpectrum forward_transform(const SphericalFunction& f, int bandwidth, int workers = 0);
/// Samples given on sample_grid(B) in the same order.
SglSpectrum forward_transform(std::span<const std::complex<double>> samples, int bandwidth, int workers = 0);
/// Direct triple sum over nodes and coefficients; serial reference.
SglSpectrum forward_transform_serial(std::span<const std::complex<double>> samples, int bandwidth);

std::vector<std::complex<double>> synthesize(const SglSpectrum& spectrum, std::span<const SphericalPoint> points,
                                             int workers = 0);

}  // namespace sgl
