// Compares the serial search kernels against their OpenMP splits on a few
// representative workloads and prints a timing table.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "forbconf/catalog.hpp"
#include "forbconf/growth.hpp"
#include "forbconf/products.hpp"
#include "forbconf/search.hpp"

using namespace forbconf;

namespace {

int hardware_workers() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <typename Fn>
long long time_ms(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
      .count();
}

void report(const std::string& name, long long serial_ms, long long parallel_ms, bool same) {
  std::printf("%-34s serial %6lld ms   parallel %6lld ms   speedup %5.2fx   %s\n", name.c_str(),
              serial_ms, parallel_ms,
              parallel_ms > 0 ? static_cast<double>(serial_ms) / static_cast<double>(parallel_ms) : 0.0,
              same ? "values agree" : "VALUE MISMATCH");
}

}  // namespace

int main() {
  const int workers = hardware_workers();
  std::printf("workers: %d\n", workers);

  {
    Family fam;
    fam.add(q_config(9), "Q9");
    int serial_v = 0, par_v = 0;
    const long long s = time_ms([&] { serial_v = forb_exact(5, fam).forb_value; });
    const long long p = time_ms([&] { par_v = forb_exact(5, fam, {workers}).forb_value; });
    report("forb m=5 family {Q9} (pairwise)", s, p, serial_v == par_v);
  }
  {
    Family fam;
    fam.add(q_config(7), "Q7");
    int serial_v = 0, par_v = 0;
    const long long s = time_ms([&] { serial_v = forb_exact(5, fam).forb_value; });
    const long long p = time_ms([&] { par_v = forb_exact(5, fam, {workers}).forb_value; });
    report("forb m=5 family {Q7} (matcher)", s, p, serial_v == par_v);
  }
  {
    Family fam;
    fam.add(q_config(3), "Q3");
    int serial_v = 0, par_v = 0;
    const long long s = time_ms([&] { serial_v = forb_exact(5, fam).forb_value; });
    const long long p = time_ms([&] { par_v = forb_exact(5, fam, {workers}).forb_value; });
    report("forb m=5 family {Q3} (matcher)", s, p, serial_v == par_v);
  }
  {
    const SimpleGraph triangle = SimpleGraph::cycle(3);
    int serial_v = 0, par_v = 0;
    const long long s = time_ms([&] { serial_v = ex_exact(7, triangle, 1); });
    const long long p = time_ms([&] { par_v = ex_exact(7, triangle, workers); });
    report("turan m=7 triangle", s, p, serial_v == par_v);
  }
  return 0;
}
