#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>

#include "sgl/exact.hpp"
#include "sgl/match.hpp"
#include "sgl/oracle.hpp"
#include "sgl/quadrature.hpp"

namespace sgl::oracle {

namespace {

using Reports = std::vector<OracleReport>;

constexpr std::array<double, 4> kTranslationNus{0.1, 0.5, 1.0, 2.0};

// Portable uniform draws: the bit pattern of mt19937_64 is fixed by the standard.
class Draw {
public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  int integer(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  EulerZYZ rotation() {
    const double a = uniform(0.0, 2.0 * std::numbers::pi);
    const double b = std::acos(uniform(-1.0, 1.0));
    const double g = uniform(0.0, 2.0 * std::numbers::pi);
    return {a, b, g};
  }
  SglSpectrum spectrum(int bandwidth) {
    SglSpectrum s(bandwidth);
    for (auto& c : s.coefficients()) c = {uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
    return s;
  }

private:
  std::mt19937_64 rng_;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

std::string index_tag(int n, int np, int l, int lp, int m) { return fmt("n=%d,np=%d,l=%d,lp=%d,m=%d", n, np, l, lp, m); }

double closed_t(int n, int np, int l, int lp, int m, double nu, bool canary) {
  // The canary evaluates the -z formula for a +z shift, dropping the (-1)^k factor.
  return canary ? t_element_signed(n, np, l, lp, m, -nu) : t_element(n, np, l, lp, m, nu);
}

// Basis values at a fixed set of Hermite nodes, one row per storage index.
struct Tabulated {
  std::vector<double> weights;
  std::vector<std::complex<double>> values;
  std::size_t nodes = 0;

  std::complex<double> dot(std::size_t a, const Tabulated& other, std::size_t b) const {
    KahanSum re;
    KahanSum im;
    for (std::size_t q = 0; q < nodes; ++q) {
      const auto v = weights[q] * values[a * nodes + q] * std::conj(other.values[b * nodes + q]);
      re.add(v.real());
      im.add(v.imag());
    }
    return {re.value(), im.value()};
  }
};

// Rows hold H_i(R^{-1}(x - t)) for every index with n <= bandwidth.
Tabulated tabulate(int bandwidth, int points_per_axis, const Eigen::Matrix3d& inverse, const Eigen::Vector3d& t) {
  const QuadratureRule rule = hermite_rule(points_per_axis);
  Tabulated tab;
  tab.nodes = rule.size();
  tab.weights = rule.weights;
  const std::size_t count = spectrum_size(bandwidth);
  tab.values.resize(count * tab.nodes);
  for (std::size_t q = 0; q < tab.nodes; ++q) {
    const auto c = rule.node(q);
    const SphericalPoint p = to_spherical(Eigen::Vector3d(inverse * (Eigen::Vector3d(c[0], c[1], c[2]) - t)));
    for (std::size_t i = 0; i < count; ++i) tab.values[i * tab.nodes + q] = eval_basis(index_at(i), p);
  }
  return tab;
}

Tabulated tabulate_shift(int bandwidth, double nu_signed) {
  return tabulate(bandwidth, 2 * bandwidth, Eigen::Matrix3d::Identity(), Eigen::Vector3d(0.0, 0.0, nu_signed));
}

Reports suite_translation(const SuiteOptions& o) {
  Reports out;
  const int b = o.max_order;
  const Tabulated plain = tabulate_shift(b, 0.0);
  for (double nu : kTranslationNus) {
    const Tabulated shifted = tabulate_shift(b, nu);
    for (int n = 1; n <= b; ++n)
      for (int np = 1; np <= b; ++np)
        for (int l = 0; l < n; ++l)
          for (int lp = 0; lp < np; ++lp)
            for (int m = 0; m <= std::min(l, lp); ++m) {
              const auto ref = shifted.dot(storage_offset({n, l, m}), plain, storage_offset({np, lp, m}));
              out.push_back(make_report("translation/" + index_tag(n, np, l, lp, m) + fmt(",nu=%g", nu),
                                        closed_t(n, np, l, lp, m, nu, o.canary), ref, o.translation_tolerance,
                                        o.translation_floor));
            }
  }
  if (o.rational) {
    const std::array<exact::Rational, 4> nus{exact::Rational(1, 10), exact::Rational(1, 2), exact::Rational(1),
                                             exact::Rational(2)};
    const int rb = std::min(b, 4);
    for (std::size_t i = 0; i < nus.size(); ++i)
      for (int n = 1; n <= rb; ++n)
        for (int np = 1; np <= rb; ++np)
          for (int l = 0; l < n; ++l)
            for (int lp = 0; lp < np; ++lp)
              for (int m = 0; m <= std::min(l, lp); ++m) {
                const double ref = static_cast<double>(exact::t_element(n, np, l, lp, m, nus[i]));
                out.push_back(make_report(
                    "translation/rational/" + index_tag(n, np, l, lp, m) + fmt(",nu=%g", kTranslationNus[i]),
                    closed_t(n, np, l, lp, m, kTranslationNus[i], o.canary), ref, 1e-10, o.translation_floor));
              }
  }
  return out;
}

Reports suite_selection(const SuiteOptions& o) {
  Reports out;
  const int b = o.max_order;
  const double nu = 0.7;
  const Tabulated plain = tabulate_shift(b, 0.0);
  const Tabulated shifted = tabulate_shift(b, nu);
  const std::size_t count = spectrum_size(b);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      const SglIndex a = index_at(i);
      const SglIndex c = index_at(j);
      if (a.m == c.m) continue;
      out.push_back(make_report(
          fmt("selection/offdiag/n=%d,l=%d,m=%d,np=%d,lp=%d,mp=%d", a.n, a.l, a.m, c.n, c.l, c.m), 0.0,
          shifted.dot(i, plain, j), 0.0, 1e-12));
    }
  for (int n = 1; n <= b; ++n)
    for (int np = 1; np <= b; ++np)
      for (int l = 1; l < n; ++l)
        for (int lp = 1; lp < np; ++lp)
          for (int m = 1; m <= std::min(l, lp); ++m) {
            const auto pos = shifted.dot(storage_offset({n, l, m}), plain, storage_offset({np, lp, m}));
            const auto neg = shifted.dot(storage_offset({n, l, -m}), plain, storage_offset({np, lp, -m}));
            out.push_back(make_report("selection/sign/" + index_tag(n, np, l, lp, m), pos, neg, 0.0, 1e-10));
            out.push_back(make_report("selection/closed/" + index_tag(n, np, l, lp, -m),
                                      t_element(n, np, l, lp, m, nu), neg, 1e-10, 1e-12));
          }
  return out;
}

Reports suite_parity(const SuiteOptions&) {
  Reports out;
  for (int l = 0; l <= 6; ++l)
    for (int lp = 0; lp <= 6; ++lp)
      for (int k = std::abs(l - lp); k <= l + lp; ++k) {
        if ((l - lp + k) % 2 == 0) continue;
        for (int m = -std::min(l, lp); m <= std::min(l, lp); ++m)
          out.push_back(make_report(fmt("parity/l=%d,lp=%d,m=%d,k=%d", l, lp, m, k), a_coeff(l, lp, m, k), 0.0,
                                    0.0, 0.0));
      }
  return out;
}

Reports suite_dpq(const SuiteOptions& o) {
  Reports out;
  const int b = std::max(o.max_order, 5);
  for (int n = 1; n <= b; ++n)
    for (int np = 1; np <= b; ++np)
      for (int l = 0; l < n; ++l)
        for (int lp = 0; lp < np; ++lp)
          for (int k = std::abs(l - lp); k <= l + lp; ++k) {
            if ((l - lp + k) % 2 != 0) continue;
            const int mu = mu_of(np, l, lp, k);
            for (int p = 0; p < n - mu; ++p)
              for (int q = 0; p + q < n - mu; ++q) {
                const std::string id = fmt("dpq/n=%d,np=%d,l=%d,lp=%d,k=%d,p=%d,q=%d", n, np, l, lp, k, p, q);
                const DpqValue d = d_pq(n, np, l, lp, k, p, q);
                OracleReport r;
                r.case_id = id;
                r.closed_form = d.value;
                r.oracle_value = 0.0;
                r.abs_err = std::abs(d.value);
                r.rel_err = d.magnitude > 0.0 ? r.abs_err / d.magnitude : 0.0;
                r.passed = r.rel_err <= 1e-9;
                out.push_back(r);
                if (o.rational && n <= 4) {
                  const double v = static_cast<double>(exact::d_pq_over_sqrt_pi(n, np, l, lp, k, p, q));
                  out.push_back(make_report("dpq/rational/" + id.substr(4), v, 0.0, 0.0, 0.0));
                }
              }
          }
  return out;
}

Reports suite_orthonormality(const SuiteOptions& o) {
  Reports out;
  const int b = o.max_order;
  const auto grid = sample_grid(b);
  const QuadratureRule rq = radial_rule(b);
  const QuadratureRule aq = angular_rule(b);
  const std::size_t count = spectrum_size(b);
  std::vector<std::complex<double>> values(count * grid.size());
  for (std::size_t q = 0; q < grid.size(); ++q)
    for (std::size_t i = 0; i < count; ++i) values[i * grid.size() + q] = eval_basis(index_at(i), grid[q]);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      KahanSum re;
      KahanSum im;
      for (std::size_t q = 0; q < grid.size(); ++q) {
        const double w = 0.5 * rq.weights[q / aq.size()] * aq.weights[q % aq.size()];
        const auto v = w * values[i * grid.size() + q] * std::conj(values[j * grid.size() + q]);
        re.add(v.real());
        im.add(v.imag());
      }
      const SglIndex a = index_at(i);
      const SglIndex c = index_at(j);
      out.push_back(make_report(fmt("orthonormality/n=%d,l=%d,m=%d,np=%d,lp=%d,mp=%d", a.n, a.l, a.m, c.n, c.l, c.m),
                                i == j ? 1.0 : 0.0, {re.value(), im.value()}, 0.0, 1e-12));
    }
  return out;
}

Reports suite_rotation(const SuiteOptions& o) {
  Reports out;
  const int b = o.max_order;
  Draw draw(0x5eed0001);
  const Tabulated plain = tabulate(b, 2 * b, Eigen::Matrix3d::Identity(), Eigen::Vector3d::Zero());
  const std::size_t count = spectrum_size(b);
  for (int r = 0; r < 5; ++r) {
    const EulerZYZ e = draw.rotation();
    const Tabulated rotated = tabulate(b, 2 * b, rotation_matrix(e).transpose(), Eigen::Vector3d::Zero());
    std::vector<Eigen::MatrixXcd> d;
    for (int l = 0; l < b; ++l) d.push_back(wigner_d_matrix(l, e));
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) {
        const SglIndex a = index_at(i);
        const SglIndex c = index_at(j);
        const std::complex<double> expected =
            (a.n == c.n && a.l == c.l) ? d[static_cast<std::size_t>(a.l)](a.m + a.l, c.m + a.l) : 0.0;
        out.push_back(make_report(
            fmt("rotation/r=%d/n=%d,l=%d,m=%d,np=%d,lp=%d,mp=%d", r, a.n, a.l, a.m, c.n, c.l, c.m), expected,
            rotated.dot(i, plain, j), 0.0, 1e-10));
      }
  }
  return out;
}

Reports suite_bessel(const SuiteOptions&) {
  Reports out;
  Draw draw(0x5eed0002);
  constexpr std::array<double, 3> gammas{0.3, 0.7, 1.0};
  auto add = [&](int n, int l, double g, double beta) {
    out.push_back(make_report(fmt("bessel/n=%d,l=%d,gamma=%g,beta=%.6f", n, l, g, beta),
                              weighted_bessel_closed(n, l, g, beta), bessel_transform_numeric(n, l, g, beta), 1e-8,
                              1e-12));
  };
  add(1, 0, 1.0, 1.3);
  add(3, 1, 0.5, 2.0);
  for (int i = 0; i < 20; ++i) {
    const int n = draw.integer(1, 4);
    const int l = draw.integer(0, n - 1);
    const double g = gammas[static_cast<std::size_t>(draw.integer(0, 2))];
    const double beta = draw.uniform(0.0, 4.0);
    add(n, l, g, beta > 0.0 ? beta : 4.0);
  }
  for (double xi : {0.5, 1.0, 2.0})
    out.push_back(make_report(fmt("bessel/inversion/n=2,l=1,gamma=0.5,xi=%g", xi), radial(2, 1, xi),
                              inversion_numeric(2, 1, 0.5, xi), 1e-6, 1e-6));
  return out;
}

Reports suite_addition(const SuiteOptions&) {
  Reports out;
  Draw draw(0x5eed0003);
  constexpr std::array<int, 4> levels{4, 8, 12, 16};
  for (int c = 0; c < 3; ++c) {
    const int l = draw.integer(0, 3);
    const int m = draw.integer(-l, l);
    const double beta = draw.uniform(0.5, 2.0);
    const double nu = draw.uniform(0.2, 1.0);
    const SphericalPoint p{draw.uniform(0.5, 2.0), std::acos(draw.uniform(-1.0, 1.0)),
                           draw.uniform(0.0, 2.0 * std::numbers::pi)};
    std::array<double, 4> res{};
    for (std::size_t i = 0; i < levels.size(); ++i) res[i] = addition_theorem_residual(l, m, beta, nu, p, levels[i]);
    const std::string base = fmt("addition/config=%d,l=%d,m=%d", c, l, m);
    for (std::size_t i = 1; i < levels.size(); ++i) {
      OracleReport r;
      r.case_id = base + fmt("/L=%d", levels[i]);
      r.closed_form = res[i];
      r.oracle_value = res[i - 1];
      r.abs_err = std::max(0.0, res[i] - res[i - 1]);
      r.rel_err = r.abs_err;
      r.passed = r.abs_err <= 1e-13;
      out.push_back(r);
    }
    out.push_back(make_report(base + "/converged", res.back(), 0.0, 0.0, 1e-8));
  }
  return out;
}

Reports suite_signed(const SuiteOptions& o) {
  Reports out;
  const int b = o.max_order;
  const Tabulated plain = tabulate_shift(b, 0.0);
  for (double nu : {0.5, 1.5}) {
    const Tabulated shifted = tabulate_shift(b, -nu);
    for (int n = 1; n <= b; ++n)
      for (int np = 1; np <= b; ++np)
        for (int l = 0; l < n; ++l)
          for (int lp = 0; lp < np; ++lp)
            for (int m = 0; m <= std::min(l, lp); ++m) {
              const auto ref = shifted.dot(storage_offset({n, l, m}), plain, storage_offset({np, lp, m}));
              const double closed =
                  o.canary ? t_element(n, np, l, lp, m, nu) : t_element_signed(n, np, l, lp, m, -nu);
              out.push_back(
                  make_report("signed/" + index_tag(n, np, l, lp, m) + fmt(",nu=-%g", nu), closed, ref, 1e-10, 1e-12));
            }
  }
  return out;
}

double identity_distance(const TranslationTable& t) {
  double worst = 0.0;
  for (const auto& e : t.entries())
    worst = std::max(worst, std::abs(e.value - ((e.n == e.n_p && e.l == e.l_p) ? 1.0 : 0.0)));
  return worst;
}

Reports suite_limit(const SuiteOptions& o) {
  Reports out;
  const TranslationTable t = build_table(4, 1e-6, o.workers);
  for (const auto& e : t.entries())
    out.push_back(make_report("limit/" + index_tag(e.n, e.n_p, e.l, e.l_p, e.m_abs), e.value,
                              (e.n == e.n_p && e.l == e.l_p) ? 1.0 : 0.0, 0.0, 1e-5));
  double previous = identity_distance(build_table(4, 1e-2, o.workers));
  for (double nu : {1e-4, 1e-6}) {
    const double d = identity_distance(build_table(4, nu, o.workers));
    OracleReport r;
    r.case_id = fmt("limit/decay/nu=%g", nu);
    r.closed_form = d;
    r.oracle_value = previous;
    r.abs_err = d;
    r.rel_err = previous > 0.0 ? d / previous : 0.0;
    // O(nu) decay shrinks the distance by about 100 per step.
    r.passed = r.rel_err <= 0.1;
    out.push_back(r);
    previous = d;
  }
  return out;
}

Reports suite_match(const SuiteOptions& o) {
  Reports out;
  Draw draw(0x5eed0004);
  const int b = 3;
  const SglSpectrum f = draw.spectrum(b);
  const SglSpectrum g = draw.spectrum(b);

  std::complex<double> parseval{0.0, 0.0};
  for (std::size_t i = 0; i < f.size(); ++i) parseval += f.coefficients()[i] * std::conj(g.coefficients()[i]);
  out.push_back(make_report("match/parseval", overlap(f, g, Pose{}), parseval, 0.0, 1e-12));

  SglSpectrum unit(b);
  unit.at({1, 0, 0}) = 1.0;
  for (int i = 0; i < 3; ++i) {
    const Pose pose = Pose::from_cartesian(
        draw.rotation(), Eigen::Vector3d(draw.uniform(-1.0, 1.0), draw.uniform(-1.0, 1.0), draw.uniform(-1.0, 1.0)));
    out.push_back(make_report(fmt("match/constant/pose=%d", i), overlap(unit, unit, pose), 1.0, 1e-12, 1e-12));
    const auto ref = inner_product_h(moved(spectrum_function(f), pose), spectrum_function(g), 2 * b);
    out.push_back(make_report(fmt("match/overlap/pose=%d", i), overlap(f, g, pose), ref, 1e-8, 1e-12));
  }

  const Pose pose = Pose::from_cartesian(draw.rotation(), Eigen::Vector3d(0.3, -0.4, 0.5));
  const TranslationTable table = build_table(b, pose.nu, o.workers);
  const Eigen::Matrix3d alt = rotation_z(0.9) * alignment_rotation(pose);
  const Tabulated moved_tab = tabulate(b, 2 * b, rotation_matrix(pose.rotation).transpose(), pose.translation());
  const Tabulated plain = tabulate(b, 2 * b, Eigen::Matrix3d::Identity(), Eigen::Vector3d::Zero());
  for (std::size_t i = 0; i < spectrum_size(b); ++i)
    for (std::size_t j = 0; j < spectrum_size(b); ++j) {
      const SglIndex a = index_at(i);
      const SglIndex c = index_at(j);
      const std::string id = fmt("n=%d,l=%d,m=%d,np=%d,lp=%d,mp=%d", a.n, a.l, a.m, c.n, c.l, c.m);
      const auto value = coupled_element(a, c, pose, table);
      out.push_back(make_report("match/coupled/" + id, value, moved_tab.dot(i, plain, j), 1e-9, 1e-12));
      out.push_back(make_report("match/alignment/" + id, coupled_element(a, c, pose, alt), value, 1e-12, 1e-13));
    }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"translation", "selection", "parity", "dpq",    "orthonormality", "rotation",
                                              "bessel",      "addition",  "signed", "limit",  "match"};
  return names;
}

std::vector<OracleReport> run_suite(const std::string& name, const SuiteOptions& options) {
  if (options.max_order < 1) throw InputError("verify: max order must be >= 1");
  if (name == "translation") return suite_translation(options);
  if (name == "selection") return suite_selection(options);
  if (name == "parity") return suite_parity(options);
  if (name == "dpq") return suite_dpq(options);
  if (name == "orthonormality") return suite_orthonormality(options);
  if (name == "rotation") return suite_rotation(options);
  if (name == "bessel") return suite_bessel(options);
  if (name == "addition") return suite_addition(options);
  if (name == "signed") return suite_signed(options);
  if (name == "limit") return suite_limit(options);
  if (name == "match") return suite_match(options);
  throw InputError("verify: unknown suite '" + name + "'");
}

}  // namespace sgl::oracle
