// Compares the OpenMP kernels against their serial references: psi sampling
// over many points and the identity battery.

#include "lskew/batch.hpp"
#include "lskew/battery.hpp"
#include "lskew/field_topology.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, seconds(t0));
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n_points = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000000;
  const int n_cases = argc > 2 ? std::atoi(argv[2]) : 2000;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

  lskew::Superposition config_node;
  config_node.terms.push_back(lskew::FieldConfig{lskew::PointCharge{-1.0, lskew::Vec3::Zero()}});
  config_node.terms.push_back(
      lskew::FieldConfig{lskew::UniformField{lskew::Vec3::Zero(), lskew::Vec3::UnitX()}});
  const lskew::FieldConfig config{config_node};

  std::vector<lskew::Vec3> points(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double t = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n_points);
    points[i] = lskew::Vec3(0.25 * std::cos(t), 1.0 + 0.25 * std::sin(t), 0.0);
  }

  const double t_serial = time_best_of(3, [&] { lskew::psi_batch_serial(config, points); });
  const double t_parallel = time_best_of(3, [&] { lskew::psi_batch(config, points); });
  std::printf("psi_batch     %zu points: serial %.3fs  parallel %.3fs  speedup %.2fx\n",
              n_points, t_serial, t_parallel, t_serial / t_parallel);

  const double b_serial = time_best_of(3, [&] { lskew::run_battery_serial(42, n_cases); });
  const double b_parallel = time_best_of(3, [&] { lskew::run_battery(42, n_cases); });
  std::printf("battery       %d cases: serial %.3fs  parallel %.3fs  speedup %.2fx\n", n_cases,
              b_serial, b_parallel, b_serial / b_parallel);
  return 0;
}
