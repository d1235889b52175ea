#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sgl/quadrature.hpp"
#include "sgl/specfun.hpp"

using namespace sgl;
using doctest::Approx;

TEST_CASE("radial rule moments") {
  const QuadratureRule one = radial_rule(1);
  REQUIRE(one.size() == 1);
  CHECK(one.weights[0] == Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-15));
  for (int b = 1; b <= 12; ++b) {
    const QuadratureRule r = radial_rule(b);
    CHECK(r.exact_degree == 2 * b - 1);
    for (int d = 0; d <= 2 * b - 1; ++d) {
      double sum = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) sum += r.weights[i] * std::pow(r.node(i)[0], d);
      CHECK(sum == Approx(gamma_half(d + 1).value()).epsilon(1e-13));
    }
  }
}

TEST_CASE("hermite rule exactness") {
  const QuadratureRule h2 = hermite_rule(2);
  double x2 = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < h2.size(); ++i) {
    x2 += h2.weights[i] * h2.node(i)[0] * h2.node(i)[0];
    total += h2.weights[i];
  }
  CHECK(total == Approx(std::pow(std::numbers::pi, 1.5)).epsilon(1e-15));
  CHECK(x2 == Approx(std::pow(std::numbers::pi, 1.5) / 2.0).epsilon(1e-15));
  for (int p = 1; p <= 16; ++p) {
    const Rule1D g = gauss_hermite(p);
    for (int j = 0; 2 * j <= 2 * p - 2; ++j) {
      double sum = 0.0;
      for (std::size_t i = 0; i < g.nodes.size(); ++i) sum += g.weights[i] * std::pow(g.nodes[i], 2 * j);
      CHECK(sum == Approx(gamma_half(j).value()).epsilon(1e-13));
    }
  }
}

TEST_CASE("legendre and angular rules") {
  const Rule1D g = gauss_legendre(5);
  double s = 0.0;
  for (std::size_t i = 0; i < 5; ++i) s += g.weights[i] * std::pow(g.nodes[i], 8);
  CHECK(s == Approx(2.0 / 9.0).epsilon(1e-15));
  const QuadratureRule a = angular_rule(3);
  CHECK(a.size() == 18);
  double area = 0.0;
  std::complex<double> y21{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    area += a.weights[i];
    y21 += a.weights[i] * std::norm(sph_harm(2, 1, a.node(i)[0], a.node(i)[1]));
  }
  CHECK(area == Approx(4.0 * std::numbers::pi).epsilon(1e-15));
  CHECK(std::abs(y21 - 1.0) <= 1e-14);
}

TEST_CASE("angular rule orthonormality up to degree 10") {
  const QuadratureRule a = angular_rule(11);
  for (int l = 0; l <= 10; ++l)
    for (int m = -l; m <= l; ++m)
      for (int lp = 0; lp <= 10; ++lp)
        for (int mp = -lp; mp <= lp; ++mp) {
          std::complex<double> s{0.0, 0.0};
          for (std::size_t i = 0; i < a.size(); ++i)
            s += a.weights[i] * sph_harm(l, m, a.node(i)[0], a.node(i)[1]) *
                 std::conj(sph_harm(lp, mp, a.node(i)[0], a.node(i)[1]));
          CHECK(std::abs(s - ((l == lp && m == mp) ? 1.0 : 0.0)) <= 1e-12);
        }
}

TEST_CASE("laguerre rule for integer alpha") {
  const Rule1D g = gauss_laguerre(6, 0.0);
  for (int d = 0; d <= 11; ++d) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], d);
    CHECK(s == Approx(std::tgamma(d + 1.0)).epsilon(1e-12));
  }
}
