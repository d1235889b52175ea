#pragma once

// Exact rational arithmetic for small orders. Slow; used as ground truth by
// the test suite and by the CLI's --rational mode.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "sgl/specfun.hpp"

namespace sgl::exact {

using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

Rational half_integer(HalfInteger h);

Rational factorial(int n);
Rational pochhammer(const Rational& c, int k);
Rational binom(const Rational& a, int k);

/// Gamma(n + 1/2) / sqrt(pi) = (1/2)(3/2)...(n - 1/2).
Rational gamma_half_over_sqrt_pi(int n);

/// Coefficients c_j of x^j in L_k^{(alpha)}(x), from the explicit finite sum.
std::vector<Rational> laguerre_coefficients(int k, HalfInteger alpha);
Rational laguerre(int k, HalfInteger alpha, const Rational& x);

Rational hyp2f1_finite(int j, int q, int p);

/// coefficient * sqrt(radicand), radicand >= 0.
struct SurdValue {
  Rational coefficient;
  Rational radicand;
  BigFloat value() const;
};

/// Racah single-sum formula, exact.
SurdValue wigner3j(int l1, int l2, int l3, int m1, int m2, int m3);

/// D_pq / sqrt(pi): the j-sum defining D_pq with every factor rational.
Rational d_pq_over_sqrt_pi(int n, int n_p, int l, int l_p, int k, int p, int q);

/// Translation matrix element at rational nu > 0 as a sum of surds,
/// evaluated to 50 digits. Small orders only (exact sums grow quickly).
BigFloat t_element(int n, int n_p, int l, int l_p, int m_abs, const Rational& nu);

}  // namespace sgl::exact
