#include "sgl/specfun.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace sgl {

namespace {

bool is_nonpositive_integer(double v) { return v <= 0.0 && std::floor(v) == v; }

// Power series j_n(x) = x^n/(2n+1)!! sum_k (-x^2/2)^k / (k! (2n+3)(2n+5)...(2n+2k+1)).
double sph_bessel_series(int n, double x) {
  double lead = 1.0;
  for (int i = 1; i <= n; ++i) lead *= x / (2.0 * i + 1.0);
  const double h = -0.5 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= h / (k * (2.0 * n + 2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return lead * sum;
}

// Miller's downward recurrence, normalized against j_0 or j_1.
double sph_bessel_downward(int n, double x) {
  const int start = n + 30 + static_cast<int>(x);
  std::vector<double> f(static_cast<std::size_t>(start) + 2, 0.0);
  f[start] = 1e-30;
  for (int k = start; k >= 1; --k) {
    f[k - 1] = (2.0 * k + 1.0) / x * f[k] - f[k + 1];
    if (std::abs(f[k - 1]) > 1e200) {
      for (int i = k - 1; i <= start; ++i) f[i] *= 1e-200;
    }
  }
  const double j0 = std::sin(x) / x;
  const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
  const double scale = std::abs(f[0]) >= std::abs(f[1]) ? j0 / f[0] : j1 / f[1];
  return f[n] * scale;
}

}  // namespace

SignedLogReal SignedLogReal::from_double(double v) {
  if (v == 0.0) return {};
  return {v > 0 ? 1 : -1, std::log(std::abs(v))};
}

double SignedLogReal::value() const { return sign_ == 0 ? 0.0 : sign_ * std::exp(log_mag_); }

SignedLogReal SignedLogReal::operator/(SignedLogReal o) const {
  if (o.sign_ == 0) throw DomainError("SignedLogReal: division by zero");
  if (sign_ == 0) return {};
  return {sign_ * o.sign_, log_mag_ - o.log_mag_};
}

SignedLogReal SignedLogReal::sqrt() const {
  if (sign_ < 0) throw DomainError("SignedLogReal: square root of a negative value");
  return {sign_, 0.5 * log_mag_};
}

SignedLogReal SignedLogReal::pow(int e) const {
  if (e == 0) return one();
  if (sign_ == 0) {
    if (e < 0) throw DomainError("SignedLogReal: negative power of zero");
    return {};
  }
  return {(e % 2 != 0) ? sign_ : 1, e * log_mag_};
}

void KahanSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

SignedLogReal factorial_slr(int n) { return {1, log_factorial(n)}; }

double laguerre(int k, HalfInteger alpha, double x) {
  if (k < 0) throw DomainError("laguerre: negative degree");
  if (alpha.twice() <= -2) throw DomainError("laguerre: alpha must exceed -1");
  const double a = alpha.value();
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  for (int i = 1; i < k; ++i) {
    const double next = ((2.0 * i + 1.0 + a - x) * cur - (i + a) * prev) / (i + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::complex<double> sph_harm(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw DomainError("sph_harm: requires |m| <= l");
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw DomainError("sph_harm: theta outside [0, pi]");
  const int am = std::abs(m);
  const double x = std::cos(theta);
  const double s = std::sin(theta);

  // Normalized associated Legendre function with the Condon-Shortley phase.
  double pmm = std::sqrt(1.0 / (4.0 * std::numbers::pi));
  for (int i = 1; i <= am; ++i) pmm *= -std::sqrt((2.0 * i + 1.0) / (2.0 * i)) * s;
  double plm = pmm;
  if (l > am) {
    double p_prev = pmm;
    double p_cur = x * std::sqrt(2.0 * am + 3.0) * pmm;
    for (int ll = am + 2; ll <= l; ++ll) {
      const double a = std::sqrt((4.0 * ll * ll - 1.0) / (static_cast<double>(ll) * ll - am * am));
      const double a_prev =
          std::sqrt((4.0 * (ll - 1) * (ll - 1) - 1.0) / (static_cast<double>(ll - 1) * (ll - 1) - am * am));
      const double p_next = a * (x * p_cur - p_prev / a_prev);
      p_prev = p_cur;
      p_cur = p_next;
    }
    plm = p_cur;
  }
  const std::complex<double> y = plm * std::polar(1.0, am * phi);
  if (m >= 0) return y;
  return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

double sph_bessel(int n, double xi) {
  if (n < 0) throw DomainError("sph_bessel: negative order");
  if (!(xi >= 0.0)) throw DomainError("sph_bessel: negative argument");
  if (xi == 0.0) return n == 0 ? 1.0 : 0.0;
  if (xi < 1.0) return sph_bessel_series(n, xi);
  const double j0 = std::sin(xi) / xi;
  if (n == 0) return j0;
  const double j1 = std::sin(xi) / (xi * xi) - std::cos(xi) / xi;
  if (n == 1) return j1;
  if (xi >= n) {
    double prev = j0;
    double cur = j1;
    for (int k = 1; k < n; ++k) {
      const double next = (2.0 * k + 1.0) / xi * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  return sph_bessel_downward(n, xi);
}

SignedLogReal gamma_half(int n) {
  if (n < 0) throw DomainError("gamma_half: negative argument");
  double log_value = 0.5 * std::log(std::numbers::pi);
  for (int i = 0; i < n; ++i) log_value += std::log(i + 0.5);
  return {1, log_value};
}

double pochhammer(double c, int k) {
  if (k < 0) throw DomainError("pochhammer: negative length");
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= c + i;
  return r;
}

SignedLogReal pochhammer_slr(double c, int k) {
  if (k < 0) throw DomainError("pochhammer: negative length");
  SignedLogReal r = SignedLogReal::one();
  for (int i = 0; i < k; ++i) {
    r *= SignedLogReal::from_double(c + i);
    if (r.is_zero()) break;
  }
  return r;
}

double binom_general(double a, int k) {
  if (k < 0) throw DomainError("binom_general: negative k");
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (a - i) / (i + 1.0);
  return r;
}

SignedLogReal binom_general_slr(double a, int k) {
  if (k < 0) throw DomainError("binom_general: negative k");
  SignedLogReal r = SignedLogReal::one();
  for (int i = 0; i < k; ++i) {
    r *= SignedLogReal::from_double(a - i);
    if (r.is_zero()) return r;
  }
  return r / factorial_slr(k);
}

double hyp1f1(double a, double b, double z) {
  const bool terminates = is_nonpositive_integer(a);
  if (is_nonpositive_integer(b) && !(terminates && -a <= -b))
    throw DomainError("hyp1f1: lower parameter is a non-positive integer");
  double term = 1.0;
  KahanSum sum;
  sum.add(term);
  if (terminates) {
    const int last = static_cast<int>(-a);
    for (int k = 0; k < last; ++k) {
      term *= (a + k) / (b + k) * z / (k + 1.0);
      sum.add(term);
    }
    return sum.value();
  }
  for (int k = 0; k < 100000; ++k) {
    term *= (a + k) / (b + k) * z / (k + 1.0);
    sum.add(term);
    if (std::abs(term) <= 1e-15 * std::abs(sum.value()) && k > std::abs(z)) return sum.value();
  }
  throw DomainError("hyp1f1: series failed to converge");
}

double hyp2f1_finite(int j, int q, int p) {
  if (j < 0 || q < 0 || p < 0) throw DomainError("hyp2f1_finite: negative index");
  // (-1)^s (-q)_s / s! = C(q, s); see the Cauchy product of the two binomial series.
  KahanSum sum;
  double binom_qs = 1.0;
  for (int s = 0; s <= q; ++s) {
    if (s > 0) binom_qs *= static_cast<double>(q - s + 1) / s;
    const double rising_j = pochhammer(j, s);
    if (rising_j == 0.0) continue;
    sum.add(binom_qs * pochhammer(1.0 - p - q + s - j, q - s) * rising_j);
  }
  double q_factorial = 1.0;
  for (int i = 2; i <= q; ++i) q_factorial *= i;
  return sum.value() / q_factorial;
}

}  // namespace sgl
