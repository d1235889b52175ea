#include "sgl/exact.hpp"

#include <algorithm>
#include <cstdlib>

namespace sgl::exact {

namespace {

int sign_of_power(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Rational half_integer(HalfInteger h) { return Rational(h.twice(), 2); }

Rational factorial(int n) {
  if (n < 0) throw DomainError("exact::factorial: negative argument");
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational pochhammer(const Rational& c, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= c + i;
  return r;
}

Rational binom(const Rational& a, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= (a - i) / Rational(i + 1);
  return r;
}

Rational gamma_half_over_sqrt_pi(int n) {
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= Rational(2 * i + 1, 2);
  return r;
}

std::vector<Rational> laguerre_coefficients(int k, HalfInteger alpha) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  const Rational top = Rational(k) + half_integer(alpha);
  for (int j = 0; j <= k; ++j) c[j] = sign_of_power(j) * binom(top, k - j) / factorial(j);
  return c;
}

Rational laguerre(int k, HalfInteger alpha, const Rational& x) {
  const auto c = laguerre_coefficients(k, alpha);
  Rational r = 0;
  for (int j = k; j >= 0; --j) r = r * x + c[j];
  return r;
}

Rational hyp2f1_finite(int j, int q, int p) {
  Rational sum = 0;
  for (int s = 0; s <= q; ++s) {
    sum += sign_of_power(s) * pochhammer(Rational(-q), s) * pochhammer(Rational(1 - p - q + s - j), q - s) *
           pochhammer(Rational(j), s) / factorial(s);
  }
  return sum / factorial(q);
}

BigFloat SurdValue::value() const {
  if (coefficient == 0) return BigFloat(0);
  const BigFloat c = BigFloat(numerator(coefficient)) / BigFloat(denominator(coefficient));
  const BigFloat r = BigFloat(numerator(radicand)) / BigFloat(denominator(radicand));
  return c * sqrt(r);
}

SurdValue wigner3j(int l1, int l2, int l3, int m1, int m2, int m3) {
  if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m3) > l3)
    throw DomainError("exact::wigner3j: |m| exceeds l");
  if (m1 + m2 + m3 != 0) return {0, 0};
  if (l3 < std::abs(l1 - l2) || l3 > l1 + l2) return {0, 0};
  const Rational delta =
      factorial(l1 + l2 - l3) * factorial(l1 - l2 + l3) * factorial(-l1 + l2 + l3) / factorial(l1 + l2 + l3 + 1);
  const Rational radicand = delta * factorial(l1 + m1) * factorial(l1 - m1) * factorial(l2 + m2) *
                            factorial(l2 - m2) * factorial(l3 + m3) * factorial(l3 - m3);
  const int t_min = std::max({0, l2 - l3 - m1, l1 - l3 + m2});
  const int t_max = std::min({l1 + l2 - l3, l1 - m1, l2 + m2});
  Rational sum = 0;
  for (int t = t_min; t <= t_max; ++t) {
    sum += Rational(sign_of_power(t)) / (factorial(t) * factorial(l3 - l2 + t + m1) * factorial(l3 - l1 + t - m2) *
                                         factorial(l1 + l2 - l3 - t) * factorial(l1 - t - m1) *
                                         factorial(l2 - t + m2));
  }
  return {sign_of_power(l1 - l2 - m3) * sum, radicand};
}

Rational d_pq_over_sqrt_pi(int n, int n_p, int l, int l_p, int k, int p, int q) {
  if ((l - l_p + k) % 2 != 0) throw DomainError("exact::d_pq: l - l' + k must be even");
  const int mu = n_p + (l - l_p + k) / 2;
  const Rational n_half = Rational(2 * n - 1, 2);
  Rational sum = 0;
  for (int j = 0; j <= n - l - 1; ++j) {
    sum += sign_of_power(j) / factorial(j) * binom(n_half, n - l - 1 - j) * gamma_half_over_sqrt_pi(mu + j) *
           pochhammer(Rational(-mu + k - j + 1), p) * hyp2f1_finite(j, q, p);
  }
  return sum;
}

BigFloat t_element(int n, int n_p, int l, int l_p, int m_abs, const Rational& nu) {
  if (nu <= 0) throw DomainError("exact::t_element: nu must be positive");
  const int a = n - l - 1;
  const int a_p = n_p - l_p - 1;
  // sqrt(pi)/4 N_nl N_n'l' / a'! = (1/2) sqrt(a! a'! / (g_n g_n')) / a'!, g = Gamma(.+1/2)/sqrt(pi).
  const Rational common_radicand = factorial(a) * factorial(a_p) /
                                   (gamma_half_over_sqrt_pi(n) * gamma_half_over_sqrt_pi(n_p)) * (2 * l + 1) *
                                   (2 * l_p + 1);
  const Rational common_coefficient = Rational(sign_of_power(a), 2) / factorial(a_p);
  const Rational n_half = Rational(2 * n - 1, 2);
  const Rational k_three_halves_offset = Rational(3, 2);

  BigFloat total = 0;
  for (int k = std::abs(l - l_p); k <= l + l_p; ++k) {
    if ((l - l_p + k) % 2 != 0) continue;
    const int mu = n_p + (l - l_p + k) / 2;
    if (n - mu < 0) continue;
    const SurdValue w1 = wigner3j(l, l_p, k, 0, 0, 0);
    const SurdValue w2 = wigner3j(l, l_p, k, m_abs, -m_abs, 0);
    if (w1.coefficient == 0 || w2.coefficient == 0) continue;
    // (-1)^k from the closed-form sum times the A_k phase (-1)^{(k-l+l')/2 + m}.
    const int phase = sign_of_power(k) * sign_of_power((k - l + l_p) / 2 + m_abs);
    Rational inner = 0;
    for (int j = 0; j <= a; ++j) {
      Rational c_j = 0;
      for (int p = 0; p <= n - mu; ++p) {
        Rational nu_pow = 1;
        for (int i = 0; i < 2 * p; ++i) nu_pow *= nu;
        c_j += hyp2f1_finite(j, n - mu - p, p) * pochhammer(Rational(-mu + k - j + 1), p) /
               (factorial(p) * pochhammer(Rational(k) + k_three_halves_offset, p)) * nu_pow;
      }
      inner += sign_of_power(j) / factorial(j) * binom(n_half, a - j) * gamma_half_over_sqrt_pi(mu + j) /
               gamma_half_over_sqrt_pi(k + 1) * c_j;
    }
    Rational nu_k = 1;
    for (int i = 0; i < k; ++i) nu_k *= nu;
    const SurdValue term{common_coefficient * phase * (2 * k + 1) * w1.coefficient * w2.coefficient * nu_k * inner,
                         common_radicand * w1.radicand * w2.radicand};
    total += term.value();
  }
  return total;
}

}  // namespace sgl::exact
