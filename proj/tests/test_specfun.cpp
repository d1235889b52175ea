#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sgl/exact.hpp"
#include "sgl/specfun.hpp"

using namespace sgl;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("half integers keep exact parity") {
  const auto a = HalfInteger::half_odd(2);
  CHECK(a.twice() == 5);
  CHECK_FALSE(a.is_integer());
  CHECK(a.value() == 2.5);
  CHECK((a + HalfInteger::half_odd(0)).is_integer());
  CHECK(HalfInteger::integer(3) > a);
}

TEST_CASE("signed log reals") {
  const auto x = SignedLogReal::from_double(-6.0);
  const auto y = SignedLogReal::from_double(0.5);
  CHECK((x * y).value() == Approx(-3.0).epsilon(1e-15));
  CHECK((x / y).value() == Approx(-12.0).epsilon(1e-15));
  CHECK(SignedLogReal::from_double(0.0).is_zero());
  CHECK((x * SignedLogReal::zero()).is_zero());
  CHECK(SignedLogReal::from_double(9.0).sqrt().value() == Approx(3.0).epsilon(1e-15));
  CHECK(x.pow(3).value() == Approx(-216.0).epsilon(1e-14));
  // 300! overflows a double, the log form does not.
  CHECK(factorial_slr(300).log_magnitude() == Approx(std::lgamma(301.0)).epsilon(1e-14));
}

TEST_CASE("kahan sum recovers small addends") {
  KahanSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-16);
  s.add(-1.0);
  CHECK(s.value() == Approx(1e-13).epsilon(1e-6));
}

TEST_CASE("laguerre values") {
  CHECK(laguerre(0, HalfInteger::half_odd(0), 3.7) == 1.0);
  CHECK(laguerre(1, HalfInteger::half_odd(0), 1.0) == Approx(0.5).epsilon(1e-15));
  CHECK(laguerre(2, HalfInteger::half_odd(0), 0.0) == Approx(15.0 / 8.0).epsilon(1e-15));
  CHECK_THROWS_AS(laguerre(2, HalfInteger::from_twice(-2), 1.0), DomainError);
}

TEST_CASE("laguerre matches the exact finite sum") {
  for (int l = 0; l <= 8; ++l)
    for (int k = 0; k <= 10; ++k)
      for (int xi = 0; xi <= 6; ++xi) {
        const exact::Rational x(xi, 2);
        const double ref = static_cast<double>(exact::laguerre(k, HalfInteger::half_odd(l), x));
        const double got = laguerre(k, HalfInteger::half_odd(l), xi / 2.0);
        CHECK(std::abs(got - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
      }
}

TEST_CASE("spherical harmonics") {
  CHECK(sph_harm(0, 0, 0.3, 1.1).real() == Approx(0.28209479177387814).epsilon(1e-15));
  CHECK(sph_harm(1, 0, 0.0, 0.0).real() == Approx(std::sqrt(3.0 / (4.0 * kPi))).epsilon(1e-15));
  CHECK_THROWS_AS(sph_harm(1, 2, 0.0, 0.0), DomainError);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, 2.0 * kPi);
  for (int i = 0; i < 200; ++i) {
    const double t = th(rng);
    const double p = ph(rng);
    for (int l = 0; l <= 10; ++l)
      for (int m = -l; m <= l; ++m) {
        const auto y = sph_harm(l, m, t, p);
        CHECK(std::abs(y) <= std::sqrt((2.0 * l + 1.0) / (4.0 * kPi)) + 1e-14);
        const auto z = (m % 2 == 0 ? 1.0 : -1.0) * sph_harm(l, -m, t, p);
        CHECK(std::abs(std::conj(y) - z) <= 1e-14);
      }
  }
}

TEST_CASE("spherical harmonics cross-check libstdc++") {
  for (int l = 0; l <= 10; ++l)
    for (int m = 0; m <= l; ++m)
      for (double t : {0.1, 0.9, 2.0, 3.1}) {
        const double ref = std::sph_legendre(l, m, t);
        CHECK(sph_harm(l, m, t, 0.0).real() == Approx(ref).epsilon(1e-12).scale(1.0));
      }
}

TEST_CASE("spherical bessel") {
  CHECK(sph_bessel(0, 0.0) == 1.0);
  CHECK(sph_bessel(3, 0.0) == 0.0);
  CHECK(std::abs(sph_bessel(0, kPi)) <= 1e-16);
  CHECK(sph_bessel(1, 2.0) == Approx(std::sin(2.0) / 4.0 - std::cos(2.0) / 2.0).epsilon(1e-15));
  CHECK(sph_bessel(1, 2.0) == Approx(0.43539777497999166).epsilon(1e-14));
  for (int n = 0; n <= 10; ++n)
    for (double x = 0.05; x <= 20.0; x += 0.35) {
      const double bound = std::sqrt(kPi / (2.0 * x)) * 2.0 * std::pow(x / 2.0, n + 0.5) /
                           (std::sqrt(kPi) * std::tgamma(n + 1.0));
      CHECK(std::abs(sph_bessel(n, x)) <= bound * (1.0 + 1e-12));
      CHECK(sph_bessel(n, x) == Approx(std::sph_bessel(n, x)).epsilon(1e-11).scale(1e-3));
    }
}

TEST_CASE("gamma at half integers") {
  CHECK(gamma_half(0).value() == Approx(std::sqrt(kPi)).epsilon(1e-15));
  CHECK(gamma_half(2).value() == Approx(0.75 * std::sqrt(kPi)).epsilon(1e-15));
  CHECK((gamma_half(10) / gamma_half(9)).value() == Approx(9.5).epsilon(1e-14));
  for (int n = 0; n < 60; ++n)
    CHECK(std::abs(gamma_half(n + 1).log_magnitude() - gamma_half(n).log_magnitude() - std::log(n + 0.5)) <= 1e-13);
}

TEST_CASE("pochhammer and binomials") {
  CHECK(pochhammer(4.2, 0) == 1.0);
  CHECK(pochhammer(0.0, 1) == 0.0);
  CHECK(pochhammer(3.0, 2) == 12.0);
  CHECK(pochhammer_slr(-2.0, 3).is_zero());
  CHECK(pochhammer_slr(-2.5, 3).value() == Approx(-2.5 * -1.5 * -0.5).epsilon(1e-15));
  CHECK(binom_general(1.5, 1) == 1.5);
  CHECK(binom_general(0.0, 1) == 0.0);
  CHECK(binom_general(-2.0, 2) == 3.0);
  CHECK(binom_general_slr(4.5, 3).value() == Approx(4.5 * 3.5 * 2.5 / 6.0).epsilon(1e-15));
}

TEST_CASE("kummer function") {
  CHECK(hyp1f1(0.3, 1.7, 0.0) == 1.0);
  CHECK(hyp1f1(-1.0, 1.5, 2.0) == Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(hyp1f1(0.0, 2.5, 3.0) == 1.0);
  CHECK(hyp1f1(1.0, 1.0, 0.7) == Approx(std::exp(0.7)).epsilon(1e-14));
  CHECK_THROWS_AS(hyp1f1(0.5, -2.0, 1.0), DomainError);
  CHECK(hyp1f1(-1.0, -2.0, 1.0) == Approx(1.5).epsilon(1e-15));
}

TEST_CASE("terminating 2F1 combination") {
  CHECK(hyp2f1_finite(0, 0, 3) == 1.0);
  CHECK(hyp2f1_finite(0, 1, 0) == 0.0);
  CHECK(hyp2f1_finite(1, 1, 0) == 0.0);
  for (int j = 0; j <= 6; ++j)
    for (int q = 0; q <= 6; ++q)
      for (int p = 0; p <= 6; ++p) {
        const double ref = static_cast<double>(exact::hyp2f1_finite(j, q, p));
        CHECK(std::abs(hyp2f1_finite(j, q, p) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
      }
}

TEST_CASE("finite differences annihilate low-degree polynomials") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int n = 1; n <= 12; ++n) {
    std::vector<double> c(static_cast<std::size_t>(n));
    for (auto& v : c) v = coef(rng);
    KahanSum sum;
    double largest = 0.0;
    for (int k = 0; k <= n; ++k) {
      double p = 0.0;
      for (int d = n - 1; d >= 0; --d) p = p * k + c[static_cast<std::size_t>(d)];
      const double term = (k % 2 == 0 ? 1.0 : -1.0) * binom_general(n, k) * p;
      sum.add(term);
      largest = std::max(largest, std::abs(sum.value()));
    }
    CHECK(std::abs(sum.value()) <= 1e-10 * largest);
  }
}
