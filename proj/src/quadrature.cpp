#include "sgl/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

#include "sgl/specfun.hpp"

namespace sgl {

namespace {

// Monic three-term recurrence p_{k+1} = (x - a_k) p_k - b_k^2 p_{k-1}, with
// total mass mu0 of the weight function.
struct Recurrence {
  std::vector<double> a;
  std::vector<double> b;  // b[0] unused
  double mu0 = 1.0;
};

// Golub-Welsch for starting values, then Newton on the orthonormal recurrence.
// Weights from the Christoffel function w = 1 / sum_k phat_k(x)^2.
Rule1D gauss_rule(const Recurrence& rec, int count) {
  if (count < 1) throw DomainError("gauss rule: node count must be positive");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(count, count);
  for (int i = 0; i < count; ++i) {
    jacobi(i, i) = rec.a[i];
    if (i > 0) {
      jacobi(i, i - 1) = rec.b[i];
      jacobi(i - 1, i) = rec.b[i];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  const Eigen::VectorXd start = solver.eigenvalues();

  Rule1D rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  const double p0 = 1.0 / std::sqrt(rec.mu0);
  for (int i = 0; i < count; ++i) {
    double x = start(i);
    double christoffel = 0.0;
    for (int iter = 0; iter < 8; ++iter) {
      // Orthonormal values and derivatives up to degree count.
      double p_prev = 0.0;
      double p = p0;
      double dp_prev = 0.0;
      double dp = 0.0;
      christoffel = p * p;
      for (int k = 0; k < count; ++k) {
        const double b_k = k > 0 ? rec.b[k] : 0.0;
        const double p_next = ((x - rec.a[k]) * p - b_k * p_prev) / rec.b[k + 1];
        const double dp_next = ((x - rec.a[k]) * dp + p - b_k * dp_prev) / rec.b[k + 1];
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
        if (k + 1 < count) christoffel += p * p;
      }
      const double step = p / dp;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    // Recompute the Christoffel sum at the polished node.
    double p_prev = 0.0;
    double p = p0;
    christoffel = p * p;
    for (int k = 0; k + 1 < count; ++k) {
      const double b_k = k > 0 ? rec.b[k] : 0.0;
      const double p_next = ((x - rec.a[k]) * p - b_k * p_prev) / rec.b[k + 1];
      p_prev = p;
      p = p_next;
      christoffel += p * p;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / christoffel;
  }
  return rule;
}

}  // namespace

Rule1D gauss_legendre(int count) {
  Recurrence rec;
  rec.a.assign(count + 1, 0.0);
  rec.b.assign(count + 1, 0.0);
  for (int k = 1; k <= count; ++k) rec.b[k] = k / std::sqrt(4.0 * k * k - 1.0);
  rec.mu0 = 2.0;
  return gauss_rule(rec, count);
}

Rule1D gauss_hermite(int count) {
  Recurrence rec;
  rec.a.assign(count + 1, 0.0);
  rec.b.assign(count + 1, 0.0);
  for (int k = 1; k <= count; ++k) rec.b[k] = std::sqrt(0.5 * k);
  rec.mu0 = std::sqrt(std::numbers::pi);
  return gauss_rule(rec, count);
}

Rule1D gauss_laguerre(int count, double alpha) {
  if (!(alpha > -1.0)) throw DomainError("gauss_laguerre: alpha must exceed -1");
  Recurrence rec;
  rec.a.assign(count + 1, 0.0);
  rec.b.assign(count + 1, 0.0);
  for (int k = 0; k <= count; ++k) rec.a[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k <= count; ++k) rec.b[k] = std::sqrt(k * (k + alpha));
  rec.mu0 = std::tgamma(alpha + 1.0);
  return gauss_rule(rec, count);
}

QuadratureRule radial_rule(int bandwidth) {
  if (bandwidth < 1) throw DomainError("radial_rule: bandwidth must be >= 1");
  const Rule1D r = gauss_laguerre(bandwidth, 0.5);
  QuadratureRule q;
  q.kind = RuleKind::Radial;
  q.dimension = 1;
  q.coords = r.nodes;
  q.weights = r.weights;
  q.exact_degree = 2 * bandwidth - 1;
  return q;
}

QuadratureRule angular_rule(int bandwidth) {
  if (bandwidth < 1) throw DomainError("angular_rule: bandwidth must be >= 1");
  const Rule1D gl = gauss_legendre(bandwidth);
  const int n_phi = 2 * bandwidth;
  QuadratureRule q;
  q.kind = RuleKind::Angular;
  q.dimension = 2;
  q.exact_degree = 2 * bandwidth - 1;
  // Legendre nodes ascend in cos(theta); emit theta ascending.
  for (int it = bandwidth - 1; it >= 0; --it) {
    const double theta = std::acos(gl.nodes[it]);
    for (int ip = 0; ip < n_phi; ++ip) {
      q.coords.push_back(theta);
      q.coords.push_back(2.0 * std::numbers::pi * ip / n_phi);
      q.weights.push_back(gl.weights[it] * 2.0 * std::numbers::pi / n_phi);
    }
  }
  return q;
}

QuadratureRule hermite_rule(int points_per_axis) {
  if (points_per_axis < 1) throw DomainError("hermite_rule: need at least one point per axis");
  const Rule1D gh = gauss_hermite(points_per_axis);
  QuadratureRule q;
  q.kind = RuleKind::Hermite;
  q.dimension = 3;
  q.exact_degree = 2 * points_per_axis - 1;
  const auto n = static_cast<std::size_t>(points_per_axis);
  q.coords.reserve(3 * n * n * n);
  q.weights.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        q.coords.insert(q.coords.end(), {gh.nodes[i], gh.nodes[j], gh.nodes[k]});
        q.weights.push_back(gh.weights[i] * gh.weights[j] * gh.weights[k]);
      }
    }
  }
  return q;
}

}  // namespace sgl
