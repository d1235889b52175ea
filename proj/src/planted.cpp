#include <cmath>
#include <numbers>
#include <random>

#include "sgl/match.hpp"

namespace sgl {

namespace {

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<EulerZYZ> octahedral_rotations() {
  std::vector<EulerZYZ> out;
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms)
    for (int signs = 0; signs < 8; ++signs) {
      Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
      for (int r = 0; r < 3; ++r) m(r, p[r]) = (signs >> r) & 1 ? -1.0 : 1.0;
      if (m.determinant() > 0.0) out.push_back(euler_from_matrix(m));
    }
  return out;
}

PlantedScenario planted_scenario(int bandwidth, int target_bandwidth, std::uint64_t seed, double step) {
  if (bandwidth < 1 || target_bandwidth < bandwidth)
    throw InputError("planted_scenario: need 1 <= bandwidth <= target_bandwidth");
  std::mt19937_64 rng(seed);
  SglSpectrum source(bandwidth);
  for (auto& c : source.coefficients()) c = {2.0 * unit_draw(rng) - 1.0, 2.0 * unit_draw(rng) - 1.0};

  PoseGrid grid;
  grid.rotations = octahedral_rotations();
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j)
      for (int k = -1; k <= 1; ++k) grid.translations.emplace_back(i * step, j * step, k * step);

  // Any non-identity rotation and non-zero translation of the grid.
  const std::size_t rot = 1 + rng() % (grid.rotations.size() - 1);
  std::size_t tr = rng() % (grid.translations.size() - 1);
  if (tr >= grid.translations.size() / 2) ++tr;
  const std::size_t planted = rot * grid.translations.size() + tr;
  const Pose pose = grid.pose(planted);
  const Eigen::Matrix3d inverse = rotation_matrix(pose.rotation).transpose();
  const Eigen::Vector3d t = grid.translations[tr];

  auto pulled_back = [&](const std::vector<SphericalPoint>& points) {
    std::vector<SphericalPoint> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(to_spherical(Eigen::Vector3d(inverse * (to_cartesian(p) - t))));
    return out;
  };

  const auto nodes = sample_grid(target_bandwidth);
  const auto samples = synthesize(source, pulled_back(nodes));
  PlantedScenario s{source.padded(target_bandwidth), forward_transform(samples, target_bandwidth), std::move(grid),
                    planted, 0.0};

  std::vector<SphericalPoint> probes;
  for (int i = 0; i < 64; ++i)
    probes.push_back({2.0 * unit_draw(rng), std::acos(2.0 * unit_draw(rng) - 1.0), 2.0 * std::numbers::pi * unit_draw(rng)});
  const auto expected = synthesize(source, pulled_back(probes));
  const auto actual = synthesize(s.g, probes);
  for (std::size_t i = 0; i < probes.size(); ++i)
    s.reexpansion_error = std::max(s.reexpansion_error, std::abs(expected[i] - actual[i]));
  return s;
}

}  // namespace sgl
