// Compares the OpenMP kernels against single-thread runs and the naive
// serial references. Build target: lcinv_bench (not part of ctest).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lcinv/densecheck.hpp"
#include "lcinv/lcequiv.hpp"
#include "lcinv/reference.hpp"

using namespace lcinv;

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

double median_ms(const std::function<void()>& fn, int runs = 5) {
  fn();
  std::vector<double> ms;
  for (int i = 0; i < runs; ++i) {
    const double t0 = now_seconds();
    fn();
    ms.push_back((now_seconds() - t0) * 1e3);
  }
  std::sort(ms.begin(), ms.end());
  return ms[ms.size() / 2];
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int t) {
#ifdef _OPENMP
  omp_set_num_threads(t);
#else
  (void)t;
#endif
}

double with_threads(int t, const std::function<void()>& fn, int runs = 5) {
  set_threads(t);
  const double ms = median_ms(fn, runs);
  set_threads(max_threads());
  return ms;
}

void row(const char* kernel, const char* size, double naive_ms, double serial_ms,
         double parallel_ms) {
  if (naive_ms > 0)
    std::printf("%-22s %-16s %10.2f %10.2f %10.2f %9.2fx\n", kernel, size, naive_ms, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
  else
    std::printf("%-22s %-16s %10s %10.2f %10.2f %9.2fx\n", kernel, size, "-", serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

GF2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  GF2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1);
  return m;
}

void bench_rank() {
  std::mt19937_64 rng(1);
  volatile std::size_t sink = 0;
  for (const auto& [rows, cols] : {std::pair<int, int>{1000, 1000}, {2000, 1000}, {4000, 4000}}) {
    const GF2Matrix m = random_matrix(rows, cols, rng);
    const double naive = rows <= 2000 ? median_ms([&] { sink = sink + ref::rank(m); }, 3) : -1;
    const double serial = with_threads(1, [&] { sink = sink + rank(m); });
    const double parallel = median_ms([&] { sink = sink + rank(m); });
    char size[32];
    std::snprintf(size, sizeof(size), "%dx%d", rows, cols);
    row("rank", size, naive, serial, parallel);
  }
}

void bench_fingerprint() {
  const Stabilizer s = random_stabilizer(3, 99);
  volatile std::size_t sink = 0;
  {
    const double naive = median_ms([&] { sink = sink + ref::fingerprint_serial(s, 2).size(); }, 3);
    const double serial = with_threads(1, [&] { sink = sink + fingerprint(s, 2).size(); });
    const double parallel = median_ms([&] { sink = sink + fingerprint(s, 2).size(); });
    row("fingerprint", "n=3 r=2", naive, serial, parallel);
  }
  {
    const double serial = with_threads(1, [&] { sink = sink + fingerprint(s, 3).size(); }, 3);
    const double parallel = median_ms([&] { sink = sink + fingerprint(s, 3).size(); }, 3);
    row("fingerprint", "n=3 r=3", -1, serial, parallel);
  }
}

void bench_brute_force() {
  volatile bool sink = false;
  {
    const Stabilizer a = random_stabilizer(3, 5);
    const Stabilizer b = random_stabilizer(3, 17);
    const bool equivalent = brute_force_check(a, b).has_value();
    const double naive = median_ms([&] { sink = ref::brute_force_check(a, b).has_value(); }, 3);
    const double serial = with_threads(1, [&] { sink = brute_force_check(a, b).has_value(); });
    const double parallel = median_ms([&] { sink = brute_force_check(a, b).has_value(); });
    char size[32];
    std::snprintf(size, sizeof(size), "n=3 (%s)", equivalent ? "found" : "absent");
    row("brute_force_check", size, naive, serial, parallel);
  }
  for (std::uint32_t n : {6u, 7u}) {
    const Stabilizer a = random_stabilizer(n, 5);
    const Stabilizer b = random_stabilizer(n, 17);
    const bool equivalent = brute_force_check(a, b).has_value();
    const double serial = with_threads(1, [&] { sink = brute_force_check(a, b).has_value(); }, 3);
    const double parallel = median_ms([&] { sink = brute_force_check(a, b).has_value(); }, 3);
    char size[32];
    std::snprintf(size, sizeof(size), "n=%u (%s)", n, equivalent ? "found" : "absent");
    row("brute_force_check", size, -1, serial, parallel);
  }
}

void bench_dense() {
  const Stabilizer s = random_stabilizer(8, 3);
  const DenseOperator p = projector(s);
  volatile double sink = 0;
  const double naive = median_ms([&] { sink = ref::multiply_serial(p, p).trace().real(); }, 3);
  const double serial = with_threads(1, [&] { sink = p.multiply(p).trace().real(); });
  const double parallel = median_ms([&] { sink = p.multiply(p).trace().real(); });
  row("dense multiply", "256x256", naive, serial, parallel);

  std::mt19937_64 rng(7);
  const std::uint64_t full = 0xff;
  const OmegaTuple omega(
      8, 2, {QubitSet::from_mask(8, rng() & full), QubitSet::from_mask(8, rng() & full)},
      {QubitSet::from_mask(8, rng() & full)});
  const double serial_tr = with_threads(1, [&] { sink = lu_trace_invariant(s, omega); }, 3);
  const double parallel_tr = median_ms([&] { sink = lu_trace_invariant(s, omega); }, 3);
  row("lu_trace_invariant", "n=8", -1, serial_tr, parallel_tr);
}

}  // namespace

int main() {
  std::printf("threads: %d\n\n", max_threads());
  std::printf("%-22s %-16s %10s %10s %10s %10s\n", "kernel", "size", "naive ms", "1-thr ms",
              "omp ms", "speedup");
  bench_rank();
  bench_fingerprint();
  bench_brute_force();
  bench_dense();
  return 0;
}
