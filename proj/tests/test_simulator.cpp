#include <cmath>
#include <cstring>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "mcsm/io.hpp"
#include "mcsm/simulator.hpp"
#include "oracles.hpp"

using namespace mcsm;
using namespace mcsm::sim;
using workloads::Kind;

namespace {

const Kind kAllKinds[] = {Kind::black_scholes, Kind::fft, Kind::dmm};

SimConfig config_for(long r) {
  SimConfig c;
  c.core_size = r;
  return c;
}

double overlay_speedup(const CurvePoint& p, double perf_exponent = 0.5) {
  const double nc = static_cast<double>(p.nc);
  return std::pow(static_cast<double>(p.r), perf_exponent) /
         (1.0 / nc + p.report.f1_measured / nc + p.report.f2_measured);
}

}  // namespace

TEST_CASE("serial runs report the tabulated cycle counts") {
  CHECK(run_serial(Kind::fft, 256).t1_serial == 10240.0);
  CHECK(run_serial(Kind::dmm, 256).t1_serial == 8192.0);
  CHECK(run_serial(Kind::black_scholes, 256).t1_serial == 143360.0);
}

TEST_CASE("config validation") {
  SimConfig c;
  c.core_size = 3;  // does not divide 256
  CHECK_THROWS_AS(c.validate(Kind::black_scholes), std::invalid_argument);
  c = SimConfig{};
  c.total_bce = 512;
  c.core_size = 1;  // nc = 512 > N
  CHECK_THROWS_AS(c.validate(Kind::black_scholes), std::invalid_argument);
  c = SimConfig{};
  c.core_size = 2;  // nc = 128 is not a Cannon grid
  CHECK_THROWS_AS(c.validate(Kind::dmm), std::invalid_argument);
  CHECK_NOTHROW(c.validate(Kind::fft));
  c = SimConfig{};
  c.perf_exponent = 0.0;
  CHECK_THROWS_AS(c.validate(Kind::fft), std::invalid_argument);
}

TEST_CASE("phase conservation and determinism") {
  for (Kind kind : kAllKinds) {
    for (long r : divisors(256)) {
      if (!workloads::partition_feasible(kind, 256, 256 / r)) continue;
      const ParallelResult a = run_parallel(kind, config_for(r));
      CHECK(a.report.tmc == a.phases.t_seq + a.phases.t_sync_down +
                                a.phases.t_compute + a.phases.t_comm +
                                a.phases.t_sync_up);
      // bit-identical repeat
      const ParallelResult b = run_parallel(kind, config_for(r));
      CHECK(std::memcmp(&a.report, &b.report, sizeof(SimReport)) == 0);
      CHECK(a.moved_sync == b.moved_sync);
      CHECK(a.moved_comm == b.moved_comm);
    }
  }
}

TEST_CASE("degenerate single core pays no transfers and hits sqrt(n)") {
  for (Kind kind : kAllKinds) {
    const ParallelResult run = run_parallel(kind, config_for(256));
    CHECK(run.moved_sync == 0);
    CHECK(run.moved_comm == 0);
    CHECK(run.report.f1_measured == 0.0);
    CHECK(run.report.f2_measured == 0.0);
    CHECK(run.report.speedup == 16.0);  // exactly n^0.5
  }
}

TEST_CASE("elements moved equal the declared volumes") {
  for (Kind kind : kAllKinds) {
    for (long r : divisors(256)) {
      const long nc = 256 / r;
      if (!workloads::partition_feasible(kind, 256, nc)) continue;
      const ParallelResult run = run_parallel(kind, config_for(r));
      const workloads::Volumes declared =
          workloads::declared_volumes(kind, 256, nc);
      CHECK(run.moved_sync == declared.sync_total());
      CHECK(run.moved_comm == declared.comm);
      // intensity identities are exact by construction
      CHECK(run.report.f2_measured ==
            declared.sync_total() * 1.0 /
                workloads::serial_cycles(kind, 256));
      CHECK(run.report.f1_measured ==
            declared.comm * 1.0 / workloads::serial_cycles(kind, 256));
    }
  }
}

TEST_CASE("measured synchronization intensities reproduce the table") {
  // exact fractions: 2048/143360, 512/10240, 768/8192
  const ParallelResult bs = run_parallel(Kind::black_scholes, config_for(1));
  CHECK(bs.report.f2_measured == doctest::Approx(0.0142857).epsilon(1e-5));
  CHECK(bs.report.f2_measured == 2048.0 / 143360.0);

  const ParallelResult fft = run_parallel(Kind::fft, config_for(1));
  CHECK(fft.report.f2_measured == 0.05);

  const ParallelResult dmm = run_parallel(Kind::dmm, config_for(1));
  CHECK(dmm.report.f2_measured == 0.09375);

  auto [f1, f2] = measure_intensities(fft.report);
  CHECK(f1 == fft.report.f1_measured);
  CHECK(f2 == fft.report.f2_measured);
  SimReport degenerate;
  CHECK_THROWS_AS(measure_intensities(degenerate), std::domain_error);
}

TEST_CASE("connectivity intensities") {
  // embarrassingly parallel pricing never talks across cores
  for (long r : divisors(256)) {
    CHECK(run_parallel(Kind::black_scholes, config_for(r))
              .report.f1_measured == 0.0);
  }
  // fft at one element per core: log2(nc)/(5*log2(N)) = 8/40
  const ParallelResult fft = run_parallel(Kind::fft, config_for(1));
  CHECK(fft.report.f1_measured == doctest::Approx(0.2).epsilon(1e-12));
  // dmm at one element per core reaches unit connectivity intensity
  const ParallelResult dmm = run_parallel(Kind::dmm, config_for(1));
  CHECK(dmm.report.f1_measured == 1.0);
}

TEST_CASE("connectivity intensity is non-increasing in core size") {
  for (Kind kind : kAllKinds) {
    const SimCurve curve = speedup_curve_sim(kind, SimConfig{});
    for (size_t i = 1; i < curve.points.size(); ++i) {
      CHECK(curve.points[i].report.f1_measured <=
            curve.points[i - 1].report.f1_measured);
    }
  }
}

TEST_CASE("parallel outputs match the serial reference") {
  for (long r : divisors(256)) {
    // pricing runs the identical per-pair function
    const SerialResult serial = run_serial(Kind::black_scholes, 256);
    const ParallelResult par =
        run_parallel(Kind::black_scholes, config_for(r));
    REQUIRE(par.out.pairs.size() == serial.out.pairs.size());
    for (size_t i = 0; i < par.out.pairs.size(); ++i) {
      CHECK(std::abs(par.out.pairs[i].call_price -
                     serial.out.pairs[i].call_price) <= 1e-4f);
      CHECK(std::abs(par.out.pairs[i].put_price -
                     serial.out.pairs[i].put_price) <= 1e-4f);
    }
  }
  {
    const SerialResult serial = run_serial(Kind::fft, 256);
    const auto oracle = oracles::direct_dft(workloads::generate_samples(256));
    for (long r : divisors(256)) {
      const ParallelResult par = run_parallel(Kind::fft, config_for(r));
      CHECK(oracles::rel_l2_error_ff(par.out.spectrum, serial.out.spectrum) <=
            1e-3);
      CHECK(oracles::rel_l2_error(par.out.spectrum, oracle) <= 1e-3);
    }
  }
  {
    const SerialResult serial = run_serial(Kind::dmm, 256);
    for (long r : {1L, 4L, 16L, 64L, 256L}) {
      const ParallelResult par = run_parallel(Kind::dmm, config_for(r));
      for (long i = 0; i < 16; ++i) {
        for (long j = 0; j < 16; ++j) {
          CHECK(std::abs(par.out.product.at(i, j) -
                         serial.out.product.at(i, j)) <= 1e-5f);
        }
      }
    }
  }
}

TEST_CASE("simulated speedup tracks the analytic form at measured intensities") {
  for (Kind kind : kAllKinds) {
    const SimCurve curve = speedup_curve_sim(kind, SimConfig{});
    for (const CurvePoint& p : curve.points) {
      const double overlay = overlay_speedup(p);
      CHECK(std::abs(p.report.speedup - overlay) / overlay <= 0.15);
    }
  }
}

TEST_CASE("speedup curves have an interior maximum") {
  for (Kind kind : kAllKinds) {
    const SimCurve curve = speedup_curve_sim(kind, SimConfig{});
    REQUIRE(curve.points.size() >= 3);
    size_t best = 0;
    for (size_t i = 0; i < curve.points.size(); ++i) {
      if (curve.points[i].report.speedup >
          curve.points[best].report.speedup) {
        best = i;
      }
    }
    CHECK(best > 0);
    CHECK(best + 1 < curve.points.size());
  }
}

TEST_CASE("curve sweep skips infeasible partitions") {
  const SimCurve curve = speedup_curve_sim(Kind::dmm, SimConfig{});
  CHECK(curve.skipped_r == std::vector<long>({2, 8, 32, 128}));
  std::vector<long> used;
  for (const auto& p : curve.points) used.push_back(p.r);
  CHECK(used == std::vector<long>({1, 4, 16, 64, 256}));
}

TEST_CASE("trace rows account for every phase and element") {
  const ParallelResult run = run_parallel(Kind::fft, config_for(16), true);
  REQUIRE(!run.trace.empty());

  long traced_sync = 0;
  long traced_comm = 0;
  std::set<std::string> phases;
  for (const TraceRow& row : run.trace) {
    phases.insert(row.phase);
    if (row.phase == "comm") traced_comm += row.elements_moved;
    if (row.phase == "sync_down" || row.phase == "sync_up") {
      traced_sync += row.elements_moved;
      CHECK(row.core_id == -1);
    }
    CHECK(row.end_cycle >= row.start_cycle);
  }
  CHECK(traced_sync == run.moved_sync);
  CHECK(traced_comm == run.moved_comm);
  CHECK(phases.count("compute") == 1);

  const std::string csv = sim::trace_to_csv(run.trace);
  CHECK(csv.rfind("phase,start_cycle,end_cycle,core_id,elements_moved\n", 0) ==
        0);
}

TEST_CASE("report serializes with the exact field names") {
  const ParallelResult run = run_parallel(Kind::fft, config_for(4));
  const auto parsed = nlohmann::json::parse(io::report_to_json(run.report));
  const std::set<std::string> want = {
      "t1_serial",       "tmc",         "ts_serial_equiv", "tc_serial_equiv",
      "f1_measured",     "f2_measured", "speedup"};
  std::set<std::string> got;
  for (auto it = parsed.begin(); it != parsed.end(); ++it) {
    got.insert(it.key());
  }
  CHECK(got == want);
  CHECK(parsed["t1_serial"].get<double>() == run.report.t1_serial);
  CHECK(parsed["speedup"].get<double>() ==
        doctest::Approx(run.report.speedup).epsilon(1e-9));
}

TEST_CASE("hop cost scales only the wall clock, not the intensities") {
  SimConfig slow = config_for(4);
  slow.hop_cost = 3.0;
  const ParallelResult base = run_parallel(Kind::fft, config_for(4));
  const ParallelResult run = run_parallel(Kind::fft, slow);
  CHECK(run.report.f1_measured == base.report.f1_measured);
  CHECK(run.report.f2_measured == base.report.f2_measured);
  CHECK(run.phases.t_comm > base.phases.t_comm);
  CHECK(run.report.speedup < base.report.speedup);
}
