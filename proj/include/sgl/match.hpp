#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "sgl/sgl.hpp"
#include "sgl/translate.hpp"
#include "sgl/wigner.hpp"

namespace sgl {

/// Candidate poses: every rotation combined with every translation.
/// Pose index = rotation_index * translations.size() + translation_index.
struct PoseGrid {
  std::vector<EulerZYZ> rotations;
  std::vector<Eigen::Vector3d> translations;

  std::size_t size() const { return rotations.size() * translations.size(); }
  Pose pose(std::size_t index) const;
  /// Throws InputError when either list is empty or holds non-finite values.
  void validate() const;
};

struct MatchResult {
  Pose pose;
  std::size_t grid_index = 0;
  std::complex<double> overlap;
  double score = 0.0;  ///< |overlap|
  int rank = 0;        ///< 1-based
};

/// nu rounded to 12 significant digits; tables are built at the rounded value.
double cache_key(double nu);

/// Translation tables shared between poses with equal |t|.
class TableCache {
public:
  explicit TableCache(int bandwidth, int workers = 0) : bandwidth_(bandwidth), workers_(workers) {}

  int bandwidth() const { return bandwidth_; }
  std::shared_ptr<const TranslationTable> get(double nu);
  std::size_t size() const;

private:
  int bandwidth_;
  int workers_;
  mutable std::shared_mutex mutex_;
  std::map<double, std::shared_ptr<const TranslationTable>> tables_;
};

/// Coefficients of R f: (R f)_nlm' = sum_m f_nlm D^{(l)}_{mm'}(R).
SglSpectrum rotate_spectrum(const SglSpectrum& spectrum, const Eigen::Matrix3d& rotation);
SglSpectrum rotate_spectrum(const SglSpectrum& spectrum, const EulerZYZ& euler);

/// Coefficients of T(t) R f. Rigid motions map the span of {H_nlm : n <= B}
/// onto itself, so the result is exact at the input bandwidth.
SglSpectrum move_spectrum(const SglSpectrum& spectrum, const Pose& pose);
SglSpectrum move_spectrum(const SglSpectrum& spectrum, const Pose& pose, TableCache& cache);

/// Weighted overlap I(R, t) = <T(t) R f, g>_H. Throws InputError on a bandwidth mismatch.
std::complex<double> overlap(const SglSpectrum& f_hat, const SglSpectrum& g_hat, const Pose& pose);
std::complex<double> overlap(const SglSpectrum& f_hat, const SglSpectrum& g_hat, const Pose& pose, TableCache& cache);

/// Scores every grid pose and returns the best top_k (all when top_k <= 0),
/// ties broken by grid index. Poses are evaluated in parallel.
std::vector<MatchResult> grid_search(const SglSpectrum& f_hat, const SglSpectrum& g_hat, const PoseGrid& grid,
                                     int top_k, int workers = 0);
/// Serial reference for grid_search.
std::vector<MatchResult> grid_search_serial(const SglSpectrum& f_hat, const SglSpectrum& g_hat, const PoseGrid& grid,
                                            int top_k);

/// The 24 proper rotations of the cube, as Euler angles.
std::vector<EulerZYZ> octahedral_rotations();

/// Target built as a known rigid motion of a random spectrum.
struct PlantedScenario {
  SglSpectrum f;  ///< random at the source bandwidth, padded to the target bandwidth
  SglSpectrum g;  ///< forward_transform of T(t0) R0 f
  PoseGrid grid;  ///< 24 cube rotations x {-s, 0, s}^3
  std::size_t planted_index = 0;
  /// max |g(x) - (T(t0) R0 f)(x)| over random test points.
  double reexpansion_error = 0.0;
};

/// A bandlimited f moved rigidly is a polynomial of the same degree, so it
/// is represented exactly at bandwidth 2B-1; target_bandwidth below that
/// truncates and the loss shows up in reexpansion_error.
PlantedScenario planted_scenario(int bandwidth, int target_bandwidth, std::uint64_t seed, double step = 0.5);

}  // namespace sgl
