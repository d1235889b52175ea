#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sgl/oracle.hpp"
#include "sgl/sgl.hpp"

using namespace sgl;
using doctest::Approx;

namespace {

SglSpectrum random_spectrum(int b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SglSpectrum s(b);
  for (auto& c : s.coefficients()) c = {u(rng), u(rng)};
  return s;
}

double max_diff(const SglSpectrum& a, const SglSpectrum& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.coefficients()[i] - b.coefficients()[i]));
  return m;
}

}  // namespace

TEST_CASE("storage order") {
  CHECK(spectrum_size(1) == 1);
  CHECK(spectrum_size(3) == 14);
  CHECK(storage_offset({1, 0, 0}) == 0);
  CHECK(storage_offset({2, 0, 0}) == 1);
  CHECK(storage_offset({2, 1, -1}) == 2);
  for (std::size_t i = 0; i < spectrum_size(6); ++i) CHECK(storage_offset(index_at(i)) == i);
  CHECK_THROWS_AS(SglIndex({1, 1, 0}).validate(), DomainError);
  CHECK_THROWS_AS(SglSpectrum(0), DomainError);
}

TEST_CASE("normalization and radial values") {
  CHECK(normalization(1, 0).value() == Approx(std::sqrt(4.0 / std::sqrt(std::numbers::pi))).epsilon(1e-15));
  CHECK(normalization(2, 1).value() == Approx(std::sqrt(8.0 / (3.0 * std::sqrt(std::numbers::pi)))).epsilon(1e-15));
  CHECK(radial(2, 1, 1.0) == 1.0);
  CHECK(radial(2, 0, 0.5) == Approx(1.25).epsilon(1e-15));
  CHECK(radial(3, 1, 2.0) == Approx(2.0 * (2.5 - 4.0)).epsilon(1e-15));
  const double h100 = std::sqrt(4.0 / std::sqrt(std::numbers::pi)) / std::sqrt(4.0 * std::numbers::pi);
  CHECK(eval_basis({1, 0, 0}, SphericalPoint{0.3, 1.0, 2.0}).real() ==
        Approx(h100 * std::exp(0.0)).epsilon(1e-15));
}

TEST_CASE("cartesian and spherical points agree") {
  const Eigen::Vector3d x(0.3, -0.4, 0.5);
  const SglIndex idx{3, 2, -1};
  CHECK(std::abs(eval_basis(idx, x) - eval_basis(idx, to_spherical(x))) <= 1e-15);
  CHECK((to_cartesian(to_spherical(x)) - x).norm() <= 1e-15);
  const SphericalPoint origin = to_spherical(Eigen::Vector3d::Zero());
  CHECK(origin.r == 0.0);
}

TEST_CASE("basis orthonormality under the weighted inner product") {
  for (std::size_t i = 0; i < spectrum_size(3); ++i)
    for (std::size_t j = 0; j < spectrum_size(3); ++j) {
      const auto v = oracle::inner_product_h(oracle::basis_function(index_at(i)),
                                             oracle::basis_function(index_at(j)), 6);
      CHECK(std::abs(v - (i == j ? 1.0 : 0.0)) <= 1e-12);
    }
}

TEST_CASE("forward transform of a single basis function") {
  const SglIndex target{2, 1, 1};
  const auto grid = sample_grid(3);
  std::vector<std::complex<double>> samples;
  for (const auto& p : grid) samples.push_back(eval_basis(target, p));
  const SglSpectrum s = forward_transform(samples, 3);
  for (std::size_t i = 0; i < s.size(); ++i)
    CHECK(std::abs(s.coefficients()[i] - (index_at(i) == target ? 1.0 : 0.0)) <= 1e-13);
}

TEST_CASE("synthesize and transform round trip") {
  const SglSpectrum s = random_spectrum(4, 11);
  const auto grid = sample_grid(4);
  const auto samples = synthesize(s, grid);
  CHECK(max_diff(forward_transform(samples, 4), s) <= 1e-10);

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<SphericalPoint> pts;
  for (int i = 0; i < 100; ++i)
    pts.push_back({2.0 * u(rng), std::acos(2.0 * u(rng) - 1.0), 2.0 * std::numbers::pi * u(rng)});
  const auto values = synthesize(s, pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::complex<double> direct{0.0, 0.0};
    for (std::size_t k = 0; k < s.size(); ++k) direct += s.coefficients()[k] * eval_basis(index_at(k), pts[i]);
    CHECK(std::abs(values[i] - direct) <= 1e-12 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("transform is linear and the function overload agrees") {
  const SglSpectrum a = random_spectrum(3, 21);
  const SglSpectrum b = random_spectrum(3, 22);
  const auto grid = sample_grid(3);
  const auto sa = synthesize(a, grid);
  const auto sb = synthesize(b, grid);
  std::vector<std::complex<double>> mix(sa.size());
  const std::complex<double> c{0.5, -2.0};
  for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = sa[i] + c * sb[i];
  const SglSpectrum fa = forward_transform(sa, 3);
  const SglSpectrum fb = forward_transform(sb, 3);
  const SglSpectrum fm = forward_transform(mix, 3);
  for (std::size_t i = 0; i < fm.size(); ++i)
    CHECK(std::abs(fm.coefficients()[i] - fa.coefficients()[i] - c * fb.coefficients()[i]) <= 1e-12);

  const SphericalFunction fn = [&](const SphericalPoint& p) {
    std::complex<double> v{0.0, 0.0};
    for (std::size_t k = 0; k < a.size(); ++k) v += a.coefficients()[k] * eval_basis(index_at(k), p);
    return v;
  };
  CHECK(max_diff(forward_transform(fn, 3), fa) <= 1e-13);
}

TEST_CASE("parallel transform matches the serial reference") {
  const SglSpectrum s = random_spectrum(5, 31);
  const auto samples = synthesize(s, sample_grid(5));
  const SglSpectrum one = forward_transform(samples, 5, 1);
  const SglSpectrum four = forward_transform(samples, 5, 4);
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one.coefficients()[i] == four.coefficients()[i]);
  CHECK(max_diff(one, forward_transform_serial(samples, 5)) <= 1e-12);
}

TEST_CASE("sample count mismatch is rejected") {
  std::vector<std::complex<double>> samples(10);
  CHECK_THROWS_AS(forward_transform(samples, 3), InputError);
  CHECK_THROWS_AS(forward_transform_serial(samples, 3), InputError);
}

TEST_CASE("padding keeps the function") {
  const SglSpectrum s = random_spectrum(2, 41);
  const SglSpectrum p = s.padded(4);
  CHECK(p.bandwidth() == 4);
  CHECK(p.norm_squared() == Approx(s.norm_squared()).epsilon(1e-15));
  CHECK(p.at({2, 1, 0}) == s.at({2, 1, 0}));
  CHECK(p.at({4, 3, 3}) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("weighted bessel transform closed form") {
  for (int n = 1; n <= 4; ++n)
    for (int l = 0; l < n; ++l)
      for (double gamma : {0.3, 0.7, 1.0})
        for (double beta : {0.2, 1.5}) {
          const double closed = weighted_bessel_closed(n, l, gamma, beta);
          const double numeric = oracle::bessel_transform_numeric(n, l, gamma, beta);
          CHECK(std::abs(closed - numeric) <= 1e-10 * (1.0 + std::abs(numeric)));
        }
  // gamma -> 1 is continuous across the two branches
  for (int n = 2; n <= 4; ++n) {
    const double at_one = weighted_bessel_closed(n, 0, 1.0, 0.8);
    CHECK(weighted_bessel_closed(n, 0, 1.0 - 1e-9, 0.8) == Approx(at_one).epsilon(1e-7));
  }
  CHECK_THROWS_AS(weighted_bessel_closed(1, 0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(weighted_bessel_closed(1, 0, 1.5, 1.0), DomainError);
}
