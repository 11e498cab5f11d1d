// Times the serial reference enumeration against the blocked OpenMP one
// (and the merged sweep) for a few (n, k).
//
//   bench_oracle [--big]     --big adds (6,4), 4^15 assignments

#include <chrono>
#include <cstring>
#include <iostream>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hypertour/oracle.hpp"

using namespace hypertour;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const bool big = argc > 1 && std::strcmp(argv[1], "--big") == 0;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "threads: " << threads << "\n";
  std::cout << "n k  assignments  serial_s  parallel_s  sweep_s  speedup  agree\n";

  std::vector<std::pair<int, int>> cases{{6, 2}, {7, 2}, {5, 3}, {5, 4}};
  if (big) cases.emplace_back(6, 4);
  for (auto [n, k] : cases) {
    const std::uint64_t count = *assignment_count(n, k);
    SequenceSet serial, parallel, sweep;
    const bool run_serial = count <= 50'000'000;
    const double ts = run_serial ? seconds([&] { serial = achievable_losing_multisets_serial(n, k, count); }) : 0.0;
    const double tp = seconds([&] { parallel = achievable_losing_multisets(n, k, count); });
    const double tw = seconds([&] { sweep = reachable_losing_multisets(n, k); });
    const bool agree = (!run_serial || serial == parallel) && parallel == sweep;
    std::cout << n << " " << k << "  " << count << "  " << (run_serial ? ts : -1.0) << "  " << tp
              << "  " << tw << "  " << (run_serial && tp > 0 ? ts / tp : 0.0) << "  "
              << (agree ? "yes" : "NO") << "\n";
    if (!agree) return 1;
  }
  return 0;
}
