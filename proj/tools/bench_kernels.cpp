// Timing comparison of the OpenMP kernels against their serial reference
// implementations: finite-field matrix scans, Molien summation over Weyl
// group elements, and the Hopf axiom sweep.
#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <functional>

#include "gvc/enumeration.hpp"
#include "gvc/hopf.hpp"
#include "gvc/weyl.hpp"

using namespace gvc;

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-38s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-38s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    Int serial_count, parallel_count;
    const double s = time_ms([&] { serial_count = enumerate_gl_serial(3, 5); });
    const double p = time_ms([&] { parallel_count = enumerate_gl(3, 5); });
    if (serial_count != parallel_count) {
      std::printf("MISMATCH in enumerate_gl(3, 5)\n");
      return 1;
    }
    row("enumerate_gl(3, 5)", s, p);
  }

  {
    Int serial_count, parallel_count;
    const double s = time_ms([&] { serial_count = enumerate_sl_serial(3, 5); });
    const double p = time_ms([&] { parallel_count = enumerate_sl(3, 5); });
    if (serial_count != parallel_count) {
      std::printf("MISMATCH in enumerate_sl(3, 5)\n");
      return 1;
    }
    row("enumerate_sl(3, 5)", s, p);
  }

  {
    const auto w = realize_weyl_group(make_dynkin(DynkinFamily::F4));
    RatSeries serial_series, parallel_series;
    const double s = time_ms([&] { serial_series = molien_series_serial(w, 29); });
    const double p = time_ms([&] { parallel_series = molien_series(w, 29); });
    if (!(serial_series == parallel_series)) {
      std::printf("MISMATCH in molien_series(F4)\n");
      return 1;
    }
    row("molien_series(F4, order 29)", s, p);
  }

  {
    const auto h = exterior_hopf({1, 1, 3, 3, 5, 5, 7, 7, 9});
    AxiomReport serial_report, parallel_report;
    const double s = time_ms([&] { serial_report = verify_axioms_serial(h); });
    const double p = time_ms([&] { parallel_report = verify_axioms(h); });
    if (serial_report.ok != parallel_report.ok) {
      std::printf("MISMATCH in verify_axioms\n");
      return 1;
    }
    row("verify_axioms(9-generator algebra)", s, p);
  }

  return 0;
}
