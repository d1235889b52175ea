#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgl {

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised for malformed inputs (file contents, mismatched sizes).
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Exact half-integer stored as twice its value, so l+1/2 carries no rounding.
class HalfInteger {
public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(std::int64_t twice) { return HalfInteger(twice); }
  static constexpr HalfInteger integer(std::int64_t v) { return HalfInteger(2 * v); }
  /// v + 1/2
  static constexpr HalfInteger half_odd(std::int64_t v) { return HalfInteger(2 * v + 1); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return static_cast<double>(twice_) / 2.0; }

  constexpr HalfInteger operator+(HalfInteger o) const { return HalfInteger(twice_ + o.twice_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return HalfInteger(twice_ - o.twice_); }
  constexpr auto operator<=>(const HalfInteger&) const = default;

private:
  constexpr explicit HalfInteger(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

/// Overflow-safe real: sign in {-1, 0, +1} and natural log of the magnitude.
class SignedLogReal {
public:
  constexpr SignedLogReal() = default;
  constexpr SignedLogReal(int sign, double log_magnitude)
      : sign_(sign > 0 ? 1 : (sign < 0 ? -1 : 0)), log_mag_(sign_ == 0 ? 0.0 : log_magnitude) {}

  static SignedLogReal from_double(double v);
  static constexpr SignedLogReal zero() { return {}; }
  static constexpr SignedLogReal one() { return {1, 0.0}; }

  constexpr int sign() const { return sign_; }
  constexpr double log_magnitude() const { return log_mag_; }
  constexpr bool is_zero() const { return sign_ == 0; }
  double value() const;

  constexpr SignedLogReal operator*(SignedLogReal o) const {
    if (sign_ == 0 || o.sign_ == 0) return {};
    return {sign_ * o.sign_, log_mag_ + o.log_mag_};
  }
  SignedLogReal operator/(SignedLogReal o) const;
  constexpr SignedLogReal operator-() const { return {-sign_, log_mag_}; }
  constexpr SignedLogReal& operator*=(SignedLogReal o) { return *this = *this * o; }
  /// Square root of a non-negative value.
  SignedLogReal sqrt() const;
  SignedLogReal pow(int e) const;

private:
  int sign_ = 0;
  double log_mag_ = 0.0;
};

/// Compensated (Kahan-Babuska) accumulator.
class KahanSum {
public:
  void add(double x);
  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// log(n!) for n >= 0.
double log_factorial(int n);
SignedLogReal factorial_slr(int n);

/// Generalized Laguerre polynomial L_k^{(alpha)}(x), alpha > -1.
double laguerre(int k, HalfInteger alpha, double x);

/// Orthonormal complex spherical harmonic with Condon-Shortley phase.
std::complex<double> sph_harm(int l, int m, double theta, double phi);

/// Spherical Bessel function of the first kind j_n(xi), continuous at xi = 0.
double sph_bessel(int n, double xi);

/// Gamma(n + 1/2) = sqrt(pi) (n+1)_n 4^{-n}.
SignedLogReal gamma_half(int n);

/// Rising factorial (c)_k.
double pochhammer(double c, int k);
SignedLogReal pochhammer_slr(double c, int k);

/// Generalized binomial C(a, k) with falling factorial numerator.
double binom_general(double a, int k);
SignedLogReal binom_general_slr(double a, int k);

/// Kummer's confluent hypergeometric function 1F1(a; b; z).
double hyp1f1(double a, double b, double z);

/// C(-j-p, q) * 2F1(j, -q; 1-j-q-p; -1) evaluated as a finite sum that never
/// divides by the (possibly vanishing) lower-parameter Pochhammer symbol.
double hyp2f1_finite(int j, int q, int p);

}  // namespace sgl
