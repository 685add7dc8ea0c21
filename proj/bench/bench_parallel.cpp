// Serial reference against the OpenMP kernels on the two heavy workloads.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "lagsurf/lattice.hpp"
#include "lagsurf/sweep.hpp"
#include "lagsurf/wavefront.hpp"

namespace {

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int k = argc > 1 ? std::atoi(argv[1]) : 12;
  const int grid = argc > 2 ? std::atoi(argv[2]) : 128;
  std::printf("threads\t%d\n", omp_get_max_threads());
  std::printf("workload\tserial_s\tparallel_s\tspeedup\tsame_output\n");

  const auto x = lagsurf::RationalManifold::cp2_blowup(k);
  std::vector<lagsurf::ReportRow> a, b;
  const double s1 = seconds([&] { a = lagsurf::classify_all_serial(x, true); });
  const double p1 = seconds([&] { b = lagsurf::classify_all(x, true); });
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) same = lagsurf::format_row(a[i]) == lagsurf::format_row(b[i]);
  std::printf("classify_cp2+%d\t%.4f\t%.4f\t%.2f\t%s\n", k, s1, p1, s1 / p1, same ? "yes" : "no");

  lagsurf::SweepResult ra, rb;
  const double s2 = seconds([&] { ra = lagsurf::attainment_sweep_serial(k, 3); });
  const double p2 = seconds([&] { rb = lagsurf::attainment_sweep(k, 3); });
  std::printf("attainment_k<=%d\t%.4f\t%.4f\t%.2f\t%s\n", k, s2, p2, s2 / p2,
              ra.failures == rb.failures && ra.checked == rb.checked ? "yes" : "no");

  const auto h1 = lagsurf::deformed_minus();
  const auto h2 = lagsurf::parse_generating_function("x1");
  lagsurf::TangencyOptions opt;
  opt.grid = grid;
  std::vector<lagsurf::Tangency> ta, tb;
  const auto box = lagsurf::Box::square(-0.95, 0.95);
  const double s3 = seconds([&] { ta = lagsurf::find_tangencies_serial(h1, h2, box, opt); });
  const double p3 = seconds([&] { tb = lagsurf::find_tangencies(h1, h2, box, opt); });
  bool same_t = ta.size() == tb.size();
  for (std::size_t i = 0; same_t && i < ta.size(); ++i) same_t = ta[i].x1 == tb[i].x1 && ta[i].x2 == tb[i].x2;
  std::printf("tangencies_grid%d\t%.4f\t%.4f\t%.2f\t%s\n", grid, s3, p3, s3 / p3, same_t ? "yes" : "no");
  return same && same_t ? 0 : 1;
}
