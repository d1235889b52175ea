#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "sgl/sgl.hpp"
#include "sgl/translate.hpp"
#include "sgl/wigner.hpp"

namespace sgl::oracle {

using Evaluable = std::function<std::complex<double>(const Eigen::Vector3d&)>;

/// Tensor Gauss-Hermite evaluation of the weighted inner product <f, g>_H.
/// Exact when f conj(g) is a polynomial of per-axis degree <= 2 points_per_axis - 1.
std::complex<double> inner_product_h(const Evaluable& f, const Evaluable& g, int points_per_axis);

/// x -> H_idx(x).
Evaluable basis_function(const SglIndex& idx);
/// x -> sum of coefficients times basis functions.
Evaluable spectrum_function(const SglSpectrum& spectrum);
/// x -> f(R^{-1}(x - t)), i.e. rotate first, then translate.
Evaluable moved(Evaluable f, const Pose& pose);

/// <T(nu e_z) H_nlm, H_n'l'm'>_H by quadrature; nu_signed < 0 shifts towards -z.
std::complex<double> t_element_numeric(int n, int n_p, int l, int l_p, int m, int m_p, double nu_signed);
/// <R H_nlm, H_n'l'm'>_H by quadrature.
std::complex<double> rotation_element_numeric(int n, int l, int m, int n_p, int l_p, int m_p, const EulerZYZ& euler);
/// <T(t) R H_idx, H_idx_p>_H by quadrature.
std::complex<double> pose_element_numeric(const SglIndex& idx, const SglIndex& idx_p, const Pose& pose);

/// Every entry of build_table(B, nu) recomputed by quadrature. Basis values
/// are tabulated once per index, so the cost is dominated by the node count.
TranslationTable table_numeric(int bandwidth, double nu);

/// Weighted spherical Bessel transform of N_nl R_nl by composite Gauss-Legendre.
double bessel_transform_numeric(int n, int l, double gamma, double beta);
/// R_nl(xi) reconstructed from weighted_bessel_closed through the inversion integral.
double inversion_numeric(int n, int l, double gamma, double xi);

struct DpqValue {
  double value;
  double magnitude;  ///< sum of absolute term values, the scale for relative checks
};

/// The j-sum D_pq. Requires l - l' + k even.
DpqValue d_pq(int n, int n_p, int l, int l_p, int k, int p, int q);

/// |j_l(beta r) Y_lm - truncated addition series| at x = point, with l' <= l_max.
double addition_theorem_residual(int l, int m, double beta, double nu, const SphericalPoint& point, int l_max);

struct OracleReport {
  std::string case_id;
  std::complex<double> closed_form;
  std::complex<double> oracle_value;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool passed = false;
};

/// Fills the error fields. passed iff rel_err <= tolerance or abs_err <= floor.
OracleReport make_report(std::string case_id, std::complex<double> closed_form, std::complex<double> oracle_value,
                         double tolerance, double floor);

struct SuiteOptions {
  int max_order = 4;     ///< n, n' bound for the sweeps
  bool rational = false; ///< add exact-arithmetic cross checks (orders <= 4)
  bool canary = false;   ///< drop the (-1)^k factor of the closed form
  int workers = 0;
  double translation_tolerance = 1e-8;
  double translation_floor = 1e-12;
};

/// translation, selection, parity, dpq, orthonormality, rotation, bessel,
/// addition, signed, limit, match.
const std::vector<std::string>& suite_names();
/// Throws InputError for an unknown suite name.
std::vector<OracleReport> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace sgl::oracle
