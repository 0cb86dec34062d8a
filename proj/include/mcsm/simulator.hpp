#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mcsm/workloads.hpp"

namespace mcsm::sim {

// Symmetric machine under simulation: nc = total_bce/core_size cores with
// private memories, a last-level shared memory behind a serial sync
// channel, and a barrier-synchronized permutation switch.
struct SimConfig {
  long task_size = 256;
  long total_bce = 256;        // n, in BCE units
  long core_size = 1;          // r, must divide total_bce
  double perf_exponent = 0.5;  // core performance r^e
  double transfer_cost = 1.0;  // cycles per data element
  double hop_cost = 1.0;       // cycles per network traversal
  std::uint32_t input_seed = workloads::kDefaultInputSeed;

  long cores() const { return total_bce / core_size; }

  void validate(workloads::Kind kind) const;
};

// Cycle totals per execution phase; tmc is their sum.
struct PhaseTrace {
  double t_seq = 0.0;
  double t_sync_down = 0.0;
  double t_compute = 0.0;
  double t_comm = 0.0;
  double t_sync_up = 0.0;

  double total() const {
    return t_seq + t_sync_down + t_compute + t_comm + t_sync_up;
  }
};

struct SimReport {
  double t1_serial = 0.0;        // serial cycles on one 1-BCE core
  double tmc = 0.0;              // multicore cycles on r-sized cores
  double ts_serial_equiv = 0.0;  // sync elements * transfer_cost
  double tc_serial_equiv = 0.0;  // comm elements * transfer_cost
  double f1_measured = 0.0;      // tc_serial_equiv / t1_serial
  double f2_measured = 0.0;      // ts_serial_equiv / t1_serial
  double speedup = 0.0;          // t1_serial / tmc
};

struct TraceRow {
  std::string phase;
  double start_cycle = 0.0;
  double end_cycle = 0.0;
  long core_id = -1;  // -1 marks the shared sync channel
  long elements_moved = 0;
};

// Functional outputs; only the member matching the workload kind is filled.
struct Outputs {
  std::vector<workloads::OptionPair> pairs;
  std::vector<std::complex<float>> spectrum;
  workloads::MatrixF product;
};

struct SerialResult {
  double t1_serial = 0.0;
  Outputs out;
};

struct ParallelResult {
  SimReport report;
  PhaseTrace phases;
  Outputs out;
  long moved_sync = 0;  // elements actually counted through the channel
  long moved_comm = 0;  // elements actually counted through the switch
  std::vector<TraceRow> trace;
};

// Pure serial run on one 1-BCE core; cycles follow the closed forms.
SerialResult run_serial(workloads::Kind kind, long task_size,
                        std::uint32_t seed = workloads::kDefaultInputSeed);

// Barrier-synchronized parallel run. Phases execute in order: sync-down,
// interleaved compute/comm steps, sync-up. A single core (r = n) pays no
// transfers at all.
ParallelResult run_parallel(workloads::Kind kind, const SimConfig& config,
                            bool record_trace = false);

// (f1, f2) from a report; t1_serial must be positive.
std::pair<double, double> measure_intensities(const SimReport& report);

struct CurvePoint {
  long r = 1;
  long nc = 1;
  SimReport report;
};

struct SimCurve {
  workloads::Kind kind = workloads::Kind::black_scholes;
  std::vector<CurvePoint> points;
  std::vector<long> skipped_r;  // divisors the partition cannot use
};

// One run per requested core size (default: every divisor of total_bce,
// ascending). Infeasible partitions are skipped and recorded.
SimCurve speedup_curve_sim(workloads::Kind kind, const SimConfig& base,
                           std::span<const long> core_sizes = {});

std::vector<long> divisors(long n);

std::string trace_to_csv(std::span<const TraceRow> rows);

}  // namespace mcsm::sim
