#include <doctest.h>

#include <cfloat>
#include <cmath>
#include <numbers>

#include "sgl/oracle.hpp"

using namespace sgl;
using doctest::Approx;

TEST_CASE("weighted inner product of constants") {
  const oracle::Evaluable one = [](const Eigen::Vector3d&) { return std::complex<double>(1.0, 0.0); };
  CHECK(oracle::inner_product_h(one, one, 1).real() == Approx(std::pow(std::numbers::pi, 1.5)).epsilon(1e-14));
  const oracle::Evaluable z = [](const Eigen::Vector3d& x) { return std::complex<double>(x.z(), 0.0); };
  CHECK(oracle::inner_product_h(z, z, 2).real() == Approx(std::pow(std::numbers::pi, 1.5) / 2.0).epsilon(1e-14));
  CHECK(std::abs(oracle::inner_product_h(one, z, 2)) <= 1e-15);
}

TEST_CASE("moved evaluates at the pulled-back point") {
  const oracle::Evaluable f = [](const Eigen::Vector3d& x) { return std::complex<double>(x.x(), x.z()); };
  const Pose p = Pose::from_cartesian({0.0, 0.0, std::numbers::pi / 2.0}, Eigen::Vector3d(1.0, 0.0, 0.0));
  // R = Rz(pi/2), so (Rf)(x) = f(R^T x); moved(f)(x) = f(R^T (x - t))
  const auto v = oracle::moved(f, p)(Eigen::Vector3d(1.0, 2.0, 3.0));
  CHECK(v.real() == Approx(2.0).epsilon(1e-14));
  CHECK(v.imag() == Approx(3.0).epsilon(1e-14));
}

TEST_CASE("numeric rotation element is a D entry") {
  const EulerZYZ e{0.7, 0.5, 2.0};
  const Eigen::MatrixXcd d = wigner_d_matrix(1, e);
  for (int m = -1; m <= 1; ++m)
    for (int mp = -1; mp <= 1; ++mp)
      CHECK(std::abs(oracle::rotation_element_numeric(2, 1, m, 2, 1, mp, e) - d(m + 1, mp + 1)) <= 1e-12);
}

TEST_CASE("inversion recovers the radial function") {
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l < n; ++l)
      CHECK(oracle::inversion_numeric(n, l, 0.5, 0.9) == Approx(radial(n, l, 0.9)).epsilon(1e-9));
}

TEST_CASE("D_pq sums") {
  const auto v = oracle::d_pq(1, 1, 0, 0, 0, 0, 0);
  CHECK(v.value == Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-14));
  CHECK(v.magnitude == Approx(std::abs(v.value)).epsilon(1e-14));
  CHECK_THROWS(oracle::d_pq(1, 2, 0, 1, 0, 0, 0));
}

TEST_CASE("addition theorem residual shrinks") {
  const SphericalPoint p{0.8, 0.6, 1.1};
  double prev = oracle::addition_theorem_residual(2, 1, 0.9, 0.4, p, 4);
  for (int L : {8, 12, 16}) {
    const double r = oracle::addition_theorem_residual(2, 1, 0.9, 0.4, p, L);
    CHECK(r <= prev);
    prev = r;
  }
  CHECK(prev <= 1e-8);
}

TEST_CASE("report fields") {
  const auto ok = oracle::make_report("a", {1.0, 0.0}, {1.0 + 1e-12, 0.0}, 1e-8, 1e-12);
  CHECK(ok.passed);
  CHECK(ok.rel_err < 1e-11);
  const auto zero = oracle::make_report("b", {1e-3, 0.0}, {0.0, 0.0}, 1e-8, 1e-12);
  CHECK_FALSE(zero.passed);
  CHECK(zero.rel_err == DBL_MAX);
  const auto floor = oracle::make_report("c", {1e-14, 0.0}, {0.0, 0.0}, 1e-8, 1e-12);
  CHECK(floor.passed);
}

TEST_CASE("suites pass and the canary fails") {
  oracle::SuiteOptions o;
  o.max_order = 3;
  for (const auto& name : {std::string("translation"), std::string("parity"), std::string("rotation")}) {
    const auto reports = oracle::run_suite(name, o);
    CHECK_FALSE(reports.empty());
    for (const auto& r : reports) CHECK_MESSAGE(r.passed, r.case_id);
  }
  o.canary = true;
  bool any_failed = false;
  for (const auto& r : oracle::run_suite("translation", o)) any_failed = any_failed || !r.passed;
  CHECK(any_failed);
  CHECK_THROWS_AS(oracle::run_suite("nope", o), InputError);
}
