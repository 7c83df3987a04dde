// Times the serial reference kernels against the parallel production
// kernels on a few medium rings and verifies they agree. Build and run:
//   cmake --build build --target bench_kernels && ./build/bench/bench_kernels
#include <chrono>
#include <cstdio>
#include <vector>

#include "ringlab/builders.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/kernels.hpp"

using namespace ringlab;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <typename F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return seconds(t0);
}

void bench_ring(const char* expr_text) {
  const FiniteRing r = build(parse_ring_expr(expr_text));
  const RingView v = r.view();
  std::printf("%-12s order %-6u threads %d\n", expr_text, r.order(),
              kernels::max_threads());

  kernels::UnitScan us, up;
  const double t_units_s = timed([&] { us = kernels::units_serial(v); });
  const double t_units_p = timed([&] { up = kernels::units_parallel(v); });
  std::printf("  units     serial %8.3fs  parallel %8.3fs  %s\n", t_units_s,
              t_units_p, us.units == up.units ? "match" : "MISMATCH");

  kernels::NilScan ns, np;
  const double t_nil_s = timed([&] { ns = kernels::nilpotents_serial(v); });
  const double t_nil_p = timed([&] { np = kernels::nilpotents_parallel(v); });
  std::printf("  nilpotents serial %7.3fs  parallel %8.3fs  %s\n", t_nil_s,
              t_nil_p,
              ns.nilpotents == np.nilpotents && ns.nil_index == np.nil_index
                  ? "match"
                  : "MISMATCH");

  Bitset cs, cp;
  const double t_c_s = timed([&] { cs = kernels::center_serial(v); });
  const double t_c_p = timed([&] { cp = kernels::center_parallel(v); });
  std::printf("  center    serial %8.3fs  parallel %8.3fs  %s\n", t_c_s, t_c_p,
              cs == cp ? "match" : "MISMATCH");

  Bitset js, jp;
  const double t_j_s = timed([&] { js = kernels::jacobson_serial(v, us.units); });
  const double t_j_p =
      timed([&] { jp = kernels::jacobson_parallel(v, up.units); });
  std::printf("  jacobson  serial %8.3fs  parallel %8.3fs  %s\n", t_j_s, t_j_p,
              js == jp ? "match" : "MISMATCH");

  const Bitset idem = kernels::idempotents_scan(v);
  const auto idem_list = idem.to_list();
  std::vector<kernels::ClassCounts> rs, rp;
  const double t_r_s = timed(
      [&] { rs = kernels::class_sweep_serial(v, idem_list, us.units, ns.nilpotents); });
  const double t_r_p = timed([&] {
    rp = kernels::class_sweep_parallel(v, idem_list, up.units, np.nilpotents);
  });
  bool rows_match = rs.size() == rp.size();
  for (size_t i = 0; rows_match && i < rs.size(); ++i)
    rows_match = rs[i].clean == rp[i].clean &&
                 rs[i].commuting_clean == rp[i].commuting_clean &&
                 rs[i].nil_clean == rp[i].nil_clean &&
                 rs[i].commuting_nil_clean == rp[i].commuting_nil_clean;
  std::printf("  sweep     serial %8.3fs  parallel %8.3fs  %s\n\n", t_r_s,
              t_r_p, rows_match ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  bench_ring("Z4096");
  bench_ring("M2(Z8)");
  bench_ring("T2(Z16)");
  bench_ring("GR(Z4,C4)");
  return 0;
}
