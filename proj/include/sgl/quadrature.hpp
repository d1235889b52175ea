#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sgl {

/// One-dimensional Gaussian rule.
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Weight 1 on [-1, 1].
Rule1D gauss_legendre(int count);
/// Weight exp(-x^2) on the real line.
Rule1D gauss_hermite(int count);
/// Weight x^alpha exp(-x) on [0, inf).
Rule1D gauss_laguerre(int count, double alpha);

enum class RuleKind {
  Radial,   ///< nodes s = r^2, weight s^{1/2} e^{-s} ds
  Angular,  ///< nodes (theta, phi), surface measure on the unit sphere
  Hermite,  ///< nodes (x, y, z), weight exp(-|x|^2)
};

struct QuadratureRule {
  RuleKind kind = RuleKind::Radial;
  int dimension = 1;
  std::vector<double> coords;  ///< dimension entries per node
  std::vector<double> weights;
  /// Radial: polynomial degree in s. Angular: spherical polynomial degree.
  /// Hermite: polynomial degree per axis.
  int exact_degree = 0;

  std::size_t size() const { return weights.size(); }
  std::span<const double> node(std::size_t i) const {
    return {coords.data() + i * static_cast<std::size_t>(dimension), static_cast<std::size_t>(dimension)};
  }
};

/// B generalized Gauss-Laguerre nodes in s = r^2 with weight s^{1/2} e^{-s}.
QuadratureRule radial_rule(int bandwidth);
/// Gauss-Legendre in cos(theta) (B nodes) times 2B uniform azimuths.
QuadratureRule angular_rule(int bandwidth);
/// Tensor Gauss-Hermite rule on R^3 with weight exp(-|x|^2).
QuadratureRule hermite_rule(int points_per_axis);

}  // namespace sgl
