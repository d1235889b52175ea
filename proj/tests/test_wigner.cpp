#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sgl/exact.hpp"
#include "sgl/wigner.hpp"

using namespace sgl;
using doctest::Approx;

namespace {

EulerZYZ random_euler(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {2.0 * std::numbers::pi * u(rng), std::acos(2.0 * u(rng) - 1.0), 2.0 * std::numbers::pi * u(rng)};
}

}  // namespace

TEST_CASE("3j values") {
  CHECK(wigner3j(0, 0, 0, 0, 0, 0) == 1.0);
  CHECK(wigner3j(1, 1, 1, 0, 0, 0) == 0.0);
  CHECK(wigner3j(1, 1, 2, 0, 0, 0) == Approx(std::sqrt(2.0 / 15.0)).epsilon(1e-15));
  CHECK(wigner3j(2, 2, 5, 0, 0, 0) == 0.0);
  CHECK(wigner3j(1, 1, 1, 1, 1, 0) == 0.0);
  CHECK_THROWS_AS(wigner3j(1, 1, 1, 2, -2, 0), DomainError);
}

TEST_CASE("3j matches the exact Racah sum") {
  for (int l1 = 0; l1 <= 6; ++l1)
    for (int l2 = 0; l2 <= 6; ++l2)
      for (int l3 = std::abs(l1 - l2); l3 <= l1 + l2; ++l3)
        for (int m1 = -l1; m1 <= l1; ++m1)
          for (int m2 = -l2; m2 <= l2; ++m2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > l3) continue;
            const double ref = static_cast<double>(exact::wigner3j(l1, l2, l3, m1, m2, m3).value());
            CHECK(std::abs(wigner3j(l1, l2, l3, m1, m2, m3) - ref) <= 1e-13);
          }
}

TEST_CASE("3j column symmetries") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        for (int ma = -a; ma <= a; ++ma)
          for (int mb = -b; mb <= b; ++mb) {
            const int mc = -ma - mb;
            if (std::abs(mc) > c) continue;
            const double v = wigner3j(a, b, c, ma, mb, mc);
            CHECK(wigner3j(b, c, a, mb, mc, ma) == Approx(v).epsilon(1e-13).scale(1.0));
            const double sign = (a + b + c) % 2 == 0 ? 1.0 : -1.0;
            CHECK(wigner3j(b, a, c, mb, ma, mc) == Approx(sign * v).epsilon(1e-13).scale(1.0));
          }
}

TEST_CASE("rotation matrices and Euler round trip") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const EulerZYZ e = random_euler(rng);
    const Eigen::Matrix3d r = rotation_matrix(e);
    CHECK((r * r.transpose() - Eigen::Matrix3d::Identity()).norm() <= 1e-14);
    CHECK(r.determinant() == Approx(1.0).epsilon(1e-14));
    CHECK((rotation_matrix(euler_from_matrix(r)) - r).norm() <= 1e-13);
  }
  // gimbal-lock cases
  for (double beta : {0.0, std::numbers::pi}) {
    const Eigen::Matrix3d r = rotation_matrix({0.4, beta, 1.3});
    CHECK((rotation_matrix(euler_from_matrix(r)) - r).norm() <= 1e-13);
  }
  CHECK((rotation_matrix({0.3, 0.0, 0.0}) - rotation_z(0.3)).norm() <= 1e-15);
  CHECK((rotation_matrix({0.0, 0.3, 0.0}) - rotation_y(0.3)).norm() <= 1e-15);
  const EulerZYZ c = EulerZYZ{-1.0, 0.5, 7.0}.canonical();
  CHECK(c.alpha >= 0.0);
  CHECK(c.gamma < 2.0 * std::numbers::pi);
}

TEST_CASE("D matrices") {
  CHECK(wigner_d_matrix(0, {1.0, 2.0, 3.0})(0, 0) == std::complex<double>(1.0, 0.0));
  CHECK((wigner_d_matrix(3, EulerZYZ::identity()) - Eigen::MatrixXcd::Identity(7, 7)).norm() <= 1e-15);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const EulerZYZ e = random_euler(rng);
    for (int l = 0; l <= 8; ++l) {
      const Eigen::MatrixXcd d = wigner_d_matrix(l, e);
      CHECK((d * d.adjoint() - Eigen::MatrixXcd::Identity(2 * l + 1, 2 * l + 1)).norm() <= 1e-12);
    }
  }
  // small-d closed form for l = 1
  const double b = 0.7;
  CHECK(wigner_small_d(1, 0, 0, b) == Approx(std::cos(b)).epsilon(1e-15));
  CHECK(wigner_small_d(1, 1, 1, b) == Approx((1.0 + std::cos(b)) / 2.0).epsilon(1e-15));
}
