// Serial references against the OpenMP kernels.
// usage: sgl_bench [repeats]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>

#include "sgl/match.hpp"
#include "sgl/parallel.hpp"
#include "sgl/translate.hpp"

using namespace sgl;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, int workers) {
  std::printf("%-28s serial %9.4f s   parallel(%d) %9.4f s   speedup %5.2f\n", name, serial, workers, parallel,
              serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  const int workers = resolve_workers(0);
  std::printf("workers available: %d, best of %d\n", workers, repeats);

  for (int b : {8, 12}) {
    const double s = best_of(repeats, [&] { build_table_serial(b, 1.0); });
    const double p = best_of(repeats, [&] { build_table(b, 1.0, workers); });
    char name[64];
    std::snprintf(name, sizeof name, "build_table B=%d", b);
    row(name, s, p, workers);
  }

  {
    const PlantedScenario sc = planted_scenario(4, 4, 1);
    const double s = best_of(repeats, [&] { grid_search_serial(sc.f, sc.g, sc.grid, 10); });
    const double p = best_of(repeats, [&] { grid_search(sc.f, sc.g, sc.grid, 10, workers); });
    row("grid_search B=4, 648 poses", s, p, workers);
  }

  for (int b : {8, 16}) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::complex<double>> samples(sample_grid(b).size());
    for (auto& v : samples) v = {u(rng), u(rng)};
    const double s = best_of(repeats, [&] { forward_transform_serial(samples, b); });
    const double p = best_of(repeats, [&] { forward_transform(samples, b, workers); });
    char name[64];
    std::snprintf(name, sizeof name, "forward_transform B=%d", b);
    row(name, s, p, workers);
  }
  return 0;
}
