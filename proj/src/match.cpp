#include "sgl/match.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <numeric>

#include "sgl/parallel.hpp"

namespace sgl {

Pose PoseGrid::pose(std::size_t index) const {
  if (index >= size()) throw InputError("PoseGrid: index out of range");
  const std::size_t t = translations.size();
  return Pose::from_cartesian(rotations[index / t], translations[index % t]);
}

void PoseGrid::validate() const {
  if (rotations.empty()) throw InputError("pose grid: rotation list is empty");
  if (translations.empty()) throw InputError("pose grid: translation list is empty");
  for (const auto& r : rotations)
    if (!std::isfinite(r.alpha) || !std::isfinite(r.beta) || !std::isfinite(r.gamma))
      throw InputError("pose grid: non-finite Euler angle");
  for (const auto& t : translations)
    if (!t.allFinite()) throw InputError("pose grid: non-finite translation");
}

double cache_key(double nu) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", nu);
  return std::strtod(buf, nullptr);
}

std::shared_ptr<const TranslationTable> TableCache::get(double nu) {
  const double key = cache_key(nu);
  {
    std::shared_lock lock(mutex_);
    if (auto it = tables_.find(key); it != tables_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  if (auto it = tables_.find(key); it != tables_.end()) return it->second;
  auto table = std::make_shared<const TranslationTable>(build_table(bandwidth_, key, workers_));
  tables_.emplace(key, table);
  return table;
}

std::size_t TableCache::size() const {
  std::shared_lock lock(mutex_);
  return tables_.size();
}

SglSpectrum rotate_spectrum(const SglSpectrum& spectrum, const EulerZYZ& euler) {
  const int b = spectrum.bandwidth();
  SglSpectrum out(b);
  for (int l = 0; l < b; ++l) {
    const Eigen::MatrixXcd d = wigner_d_matrix(l, euler);
    for (int n = l + 1; n <= b; ++n) {
      for (int mp = -l; mp <= l; ++mp) {
        std::complex<double> acc{0.0, 0.0};
        for (int m = -l; m <= l; ++m) acc += spectrum.at({n, l, m}) * d(m + l, mp + l);
        out.at({n, l, mp}) = acc;
      }
    }
  }
  return out;
}

SglSpectrum rotate_spectrum(const SglSpectrum& spectrum, const Eigen::Matrix3d& rotation) {
  return rotate_spectrum(spectrum, euler_from_matrix(rotation));
}

namespace {

void check_bandwidths(const SglSpectrum& f_hat, const SglSpectrum& g_hat) {
  if (f_hat.bandwidth() != g_hat.bandwidth())
    throw InputError("overlap: bandwidth mismatch (" + std::to_string(f_hat.bandwidth()) + " vs " +
                     std::to_string(g_hat.bandwidth()) + ")");
}

// I = sum f'_{nlm} conj(g'_{n'l'm}) T_{nn'll'}^{(|m|)} with f' = (R~R) f, g' = R~ g.
std::complex<double> overlap_with(const SglSpectrum& f_hat, const SglSpectrum& g_hat, const Pose& pose,
                                  const TranslationTable* table) {
  if (pose.nu == 0.0) {
    const SglSpectrum fr = rotate_spectrum(f_hat, pose.rotation);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < fr.size(); ++i) acc += fr.coefficients()[i] * std::conj(g_hat.coefficients()[i]);
    return acc;
  }
  const Eigen::Matrix3d align = alignment_rotation(pose);
  const SglSpectrum fr = rotate_spectrum(f_hat, Eigen::Matrix3d(align * rotation_matrix(pose.rotation)));
  const SglSpectrum gr = rotate_spectrum(g_hat, align);
  const int b = f_hat.bandwidth();
  std::complex<double> acc{0.0, 0.0};
  for (int n = 1; n <= b; ++n)
    for (int l = 0; l < n; ++l)
      for (int np = 1; np <= b; ++np)
        for (int lp = 0; lp < np; ++lp) {
          const int mm = std::min(l, lp);
          for (int m = -mm; m <= mm; ++m) {
            const double t = table->at(n, np, l, lp, std::abs(m));
            acc += fr.at({n, l, m}) * std::conj(gr.at({np, lp, m})) * t;
          }
        }
  return acc;
}

std::vector<MatchResult> rank_results(const PoseGrid& grid, const std::vector<std::complex<double>>& values,
                                      int top_k) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(values[a]) > std::abs(values[b]); });
  const std::size_t keep =
      top_k <= 0 ? order.size() : std::min(order.size(), static_cast<std::size_t>(top_k));
  std::vector<MatchResult> out;
  out.reserve(keep);
  for (std::size_t r = 0; r < keep; ++r) {
    const std::size_t i = order[r];
    out.push_back({grid.pose(i), i, values[i], std::abs(values[i]), static_cast<int>(r + 1)});
  }
  return out;
}

std::vector<std::shared_ptr<const TranslationTable>> tables_for(const PoseGrid& grid, TableCache& cache) {
  std::vector<std::shared_ptr<const TranslationTable>> per_translation(grid.translations.size());
  for (std::size_t i = 0; i < grid.translations.size(); ++i) {
    const double nu = grid.translations[i].norm();
    if (nu > 0.0) per_translation[i] = cache.get(nu);
  }
  return per_translation;
}

SglSpectrum move_with(const SglSpectrum& spectrum, const Pose& pose, const TranslationTable* table) {
  if (pose.nu == 0.0) return rotate_spectrum(spectrum, pose.rotation);
  const Eigen::Matrix3d align = alignment_rotation(pose);
  const SglSpectrum fr = rotate_spectrum(spectrum, Eigen::Matrix3d(align * rotation_matrix(pose.rotation)));
  const int b = spectrum.bandwidth();
  SglSpectrum shifted(b);
  for (int np = 1; np <= b; ++np)
    for (int lp = 0; lp < np; ++lp)
      for (int m = -lp; m <= lp; ++m) {
        std::complex<double> acc{0.0, 0.0};
        for (int n = 1; n <= b; ++n)
          for (int l = std::abs(m); l < n; ++l) acc += fr.at({n, l, m}) * table->at(n, np, l, lp, std::abs(m));
        shifted.at({np, lp, m}) = acc;
      }
  return rotate_spectrum(shifted, Eigen::Matrix3d(align.transpose()));
}

}  // namespace

SglSpectrum move_spectrum(const SglSpectrum& spectrum, const Pose& pose) {
  if (pose.nu == 0.0) return move_with(spectrum, pose, nullptr);
  const TranslationTable table = build_table(spectrum.bandwidth(), pose.nu);
  return move_with(spectrum, pose, &table);
}

SglSpectrum move_spectrum(const SglSpectrum& spectrum, const Pose& pose, TableCache& cache) {
  if (cache.bandwidth() != spectrum.bandwidth()) throw InputError("move_spectrum: table cache bandwidth mismatch");
  if (pose.nu == 0.0) return move_with(spectrum, pose, nullptr);
  return move_with(spectrum, pose, cache.get(pose.nu).get());
}

std::complex<double> overlap(const SglSpectrum& f_hat, const SglSpectrum& g_hat, const Pose& pose) {
  check_bandwidths(f_hat, g_hat);
  if (pose.nu == 0.0) return overlap_with(f_hat, g_hat, pose, nullptr);
  const TranslationTable table = build_table(f_hat.bandwidth(), pose.nu);
  return overlap_with(f_hat, g_hat, pose, &table);
}

std::complex<double> overlap(const SglSpectrum& f_hat, const SglSpectrum& g_hat, const Pose& pose, TableCache& cache) {
  check_bandwidths(f_hat, g_hat);
  if (cache.bandwidth() != f_hat.bandwidth()) throw InputError("overlap: table cache bandwidth mismatch");
  if (pose.nu == 0.0) return overlap_with(f_hat, g_hat, pose, nullptr);
  return overlap_with(f_hat, g_hat, pose, cache.get(pose.nu).get());
}

std::vector<MatchResult> grid_search(const SglSpectrum& f_hat, const SglSpectrum& g_hat, const PoseGrid& grid,
                                     int top_k, int workers) {
  check_bandwidths(f_hat, g_hat);
  grid.validate();
  const int threads = resolve_workers(workers);
  TableCache cache(f_hat.bandwidth(), threads);
  const auto tables = tables_for(grid, cache);
  std::vector<std::complex<double>> values(grid.size());
  const std::size_t nt = grid.translations.size();
#pragma omp parallel for num_threads(threads) schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(values.size()); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    values[idx] = overlap_with(f_hat, g_hat, grid.pose(idx), tables[idx % nt].get());
  }
  return rank_results(grid, values, top_k);
}

std::vector<MatchResult> grid_search_serial(const SglSpectrum& f_hat, const SglSpectrum& g_hat, const PoseGrid& grid,
                                            int top_k) {
  check_bandwidths(f_hat, g_hat);
  grid.validate();
  TableCache cache(f_hat.bandwidth(), 1);
  const auto tables = tables_for(grid, cache);
  std::vector<std::complex<double>> values(grid.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = overlap_with(f_hat, g_hat, grid.pose(i), tables[i % grid.translations.size()].get());
  return rank_results(grid, values, top_k);
}

}  // namespace sgl
