// Compares the serial reference and OpenMP lanes of the batch surfaces.
#include <chrono>
#include <cstdio>
#include <vector>

#include <omp.h>

#include "ptrg/flow.hpp"

using namespace ptrg;
using clk = std::chrono::high_resolution_clock;

namespace {

double ms_since(clk::time_point t0) {
  return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  // bounded trajectories on the k = 0.8 plane
  const double k = 0.8;
  std::vector<CouplingVec> starts;
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) {
      const double g1 = 0.002 + 0.004 * i;
      const double g2 = 0.002 + 0.004 * j;
      starts.push_back({Complex(g1, 0), Complex(g2, 0), Complex(k * g2, 0)});
    }
  FlowParams p;
  p.eps = 1.0;
  p.t_max = 2.0;
  p.step = 1e-4;
  p.sample_stride = 1000;

  auto t0 = clk::now();
  const auto serial = integrate_batch(starts, p, Execution::serial);
  const double t_serial = ms_since(t0);

  t0 = clk::now();
  const auto parallel = integrate_batch(starts, p, Execution::parallel);
  const double t_parallel = ms_since(t0);

  bool identical = serial.size() == parallel.size();
  for (std::size_t i = 0; identical && i < serial.size(); ++i) {
    identical = serial[i].samples.size() == parallel[i].samples.size();
    for (std::size_t s = 0; identical && s < serial[i].samples.size(); ++s)
      identical = serial[i].samples[s].second.g1 == parallel[i].samples[s].second.g1 &&
                  serial[i].samples[s].second.g2 == parallel[i].samples[s].second.g2 &&
                  serial[i].samples[s].second.g3 == parallel[i].samples[s].second.g3;
  }
  std::printf("integrate_batch (%zu trajectories): serial %.1f ms, parallel %.1f ms, speedup %.2fx, identical: %s\n",
              starts.size(), t_serial, t_parallel, t_serial / t_parallel,
              identical ? "yes" : "NO");

  t0 = clk::now();
  const auto vf_s = vector_field(k, {0.0, 1.0}, {0.0, 1.0}, 800, 800, 1.0, Execution::serial);
  const double f_serial = ms_since(t0);
  t0 = clk::now();
  const auto vf_p = vector_field(k, {0.0, 1.0}, {0.0, 1.0}, 800, 800, 1.0, Execution::parallel);
  const double f_parallel = ms_since(t0);
  bool field_identical = vf_s.samples.size() == vf_p.samples.size();
  for (std::size_t i = 0; field_identical && i < vf_s.samples.size(); ++i)
    field_identical = vf_s.samples[i].v1 == vf_p.samples[i].v1 &&
                      vf_s.samples[i].v2 == vf_p.samples[i].v2;
  std::printf("vector_field (800x800): serial %.1f ms, parallel %.1f ms, speedup %.2fx, identical: %s\n",
              f_serial, f_parallel, f_serial / f_parallel, field_identical ? "yes" : "NO");
  return (identical && field_identical) ? 0 : 1;
}
