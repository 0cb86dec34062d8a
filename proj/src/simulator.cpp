#include "mcsm/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mcsm::sim {

namespace {

using workloads::Kind;
using workloads::MatrixF;

long int_log2(long v) {
  long l = 0;
  while ((1L << l) < v) ++l;
  return l;
}

long int_sqrt(long v) {
  long s = std::lround(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

// Advances the global cycle counter through barrier-delimited steps. Every
// step is quantized to whole cycles; a barrier step ends when the slowest
// participant finishes. Bandwidth scales with core performance: an r-sized
// core's memory interface and switch port move r^e elements per cycle, the
// same factor by which its compute is faster. Serial-equivalent transfer
// times are counted at the 1-BCE rate regardless.
class Machine {
 public:
  Machine(const SimConfig& config, bool record_trace)
      : rate_(std::pow(static_cast<double>(config.core_size),
                       config.perf_exponent)),
        transfer_cost_(config.transfer_cost),
        hop_cost_(config.hop_cost),
        record_(record_trace) {}

  void sync_down(long elements) { sync_phase("sync_down", elements, &PhaseTrace::t_sync_down); }
  void sync_up(long elements) { sync_phase("sync_up", elements, &PhaseTrace::t_sync_up); }

  // One barrier-synchronized compute burst; ops_per_core in 1-BCE cycles.
  void compute_step(std::span<const long> ops_per_core) {
    double slowest = 0.0;
    for (size_t c = 0; c < ops_per_core.size(); ++c) {
      const double cycles =
          std::ceil(static_cast<double>(ops_per_core[c]) / rate_);
      slowest = std::max(slowest, cycles);
      if (record_) {
        rows_.push_back({"compute", cycle_, cycle_ + cycles,
                         static_cast<long>(c), 0});
      }
    }
    cycle_ += slowest;
    phases_.t_compute += slowest;
  }

  // One barrier exchange through the switch; every core sends its elements
  // concurrently, the step ends when the slowest is done.
  void comm_step(std::span<const long> elements_per_core) {
    double slowest = 0.0;
    for (size_t c = 0; c < elements_per_core.size(); ++c) {
      const long e = elements_per_core[c];
      moved_comm_ += e;
      const double cycles =
          std::ceil(e * transfer_cost_ * hop_cost_ / rate_);
      slowest = std::max(slowest, cycles);
      if (record_) {
        rows_.push_back({"comm", cycle_, cycle_ + cycles,
                         static_cast<long>(c), e});
      }
    }
    cycle_ += slowest;
    phases_.t_comm += slowest;
  }

  const PhaseTrace& phases() const { return phases_; }
  long moved_sync() const { return moved_sync_; }
  long moved_comm() const { return moved_comm_; }
  std::vector<TraceRow> take_trace() { return std::move(rows_); }

 private:
  void sync_phase(const char* name, long elements, double PhaseTrace::*bucket) {
    moved_sync_ += elements;
    const double cycles = std::ceil(elements * transfer_cost_ / rate_);
    if (record_) {
      rows_.push_back({name, cycle_, cycle_ + cycles, -1, elements});
    }
    cycle_ += cycles;
    phases_.*bucket += cycles;
  }

  double cycle_ = 0.0;
  double rate_;
  double transfer_cost_;
  double hop_cost_;
  bool record_;
  PhaseTrace phases_;
  long moved_sync_ = 0;
  long moved_comm_ = 0;
  std::vector<TraceRow> rows_;
};

void run_black_scholes(const SimConfig& config, Machine& machine,
                       Outputs& out) {
  const long n = config.task_size;
  const long nc = config.cores();
  out.pairs = workloads::generate_option_pairs(n, config.input_seed);

  if (nc > 1) machine.sync_down(6 * n);  // six inputs per pair

  const long pairs_per_core = n / nc;
  std::vector<long> ops(static_cast<size_t>(nc), 560 * pairs_per_core);
  machine.compute_step(ops);
  workloads::black_scholes_serial(out.pairs);

  if (nc > 1) machine.sync_up(2 * n);  // call and put per pair
}

void run_fft(const SimConfig& config, Machine& machine, Outputs& out) {
  const long n = config.task_size;
  const long nc = config.cores();
  const long block = n / nc;
  const long stages = int_log2(n);

  out.spectrum = workloads::generate_samples(n, config.input_seed);
  // The download gathers the input in bit-reversed block layout, so the
  // in-place stages run on locally indexed data.
  workloads::fft_bit_reverse(out.spectrum);

  if (nc > 1) machine.sync_down(n);

  for (long s = 0; s < stages; ++s) {
    // Butterflies with span beyond the block pair up remote cores; each
    // core sends its whole block to its partner before computing.
    if ((1L << s) >= block) {
      std::vector<long> sent(static_cast<size_t>(nc), block);
      machine.comm_step(sent);
    }
    std::vector<long> ops(static_cast<size_t>(nc), 5 * block);
    machine.compute_step(ops);
    workloads::fft_apply_stage(out.spectrum, s);
  }

  if (nc > 1) machine.sync_up(n);
}

// Block of the Cannon grid: operand blocks travel, the product stays.
struct CannonCell {
  MatrixF a;
  MatrixF b;
  MatrixF c;
};

void run_dmm(const SimConfig& config, Machine& machine, Outputs& out) {
  const long n = config.task_size;
  const long nc = config.cores();
  const long dim = int_sqrt(n);
  const long grid = int_sqrt(nc);
  const long bdim = dim / grid;

  const MatrixF a = workloads::generate_matrix(dim, config.input_seed);
  const MatrixF b = workloads::generate_matrix(dim, config.input_seed + 1);

  auto block_of = [&](const MatrixF& m, long bi, long bj) {
    MatrixF blk(bdim);
    for (long i = 0; i < bdim; ++i)
      for (long j = 0; j < bdim; ++j)
        blk.at(i, j) = m.at(bi * bdim + i, bj * bdim + j);
    return blk;
  };

  std::vector<CannonCell> cells(static_cast<size_t>(nc));
  for (long i = 0; i < grid; ++i) {
    for (long j = 0; j < grid; ++j) {
      CannonCell& cell = cells[static_cast<size_t>(i * grid + j)];
      cell.a = block_of(a, i, j);
      cell.b = block_of(b, i, j);
      cell.c = MatrixF(bdim);
    }
  }

  if (nc > 1) machine.sync_down(2 * n);

  // One switch round: every core forwards both operand blocks, by its
  // alignment distance on the first round and by one position afterwards.
  auto shift_round = [&](bool unit_shift) {
    std::vector<CannonCell> next = cells;
    std::vector<long> sent(static_cast<size_t>(nc), 0);
    for (long i = 0; i < grid; ++i) {
      for (long j = 0; j < grid; ++j) {
        const long a_from = unit_shift ? (j + 1) % grid : (j + i) % grid;
        const long b_from = unit_shift ? (i + 1) % grid : (i + j) % grid;
        next[static_cast<size_t>(i * grid + j)].a =
            cells[static_cast<size_t>(i * grid + a_from)].a;
        next[static_cast<size_t>(i * grid + j)].b =
            cells[static_cast<size_t>(b_from * grid + j)].b;
        sent[static_cast<size_t>(i * grid + j)] = 2 * bdim * bdim;
      }
    }
    cells = std::move(next);
    machine.comm_step(sent);
  };

  const long steps = grid;
  for (long k = 0; k < steps; ++k) {
    if (nc > 1 && k == 0) {
      shift_round(/*unit_shift=*/false);  // initial alignment
    }
    std::vector<long> ops(static_cast<size_t>(nc), 2 * bdim * bdim * bdim);
    machine.compute_step(ops);
    for (CannonCell& cell : cells) {
      for (long i = 0; i < bdim; ++i)
        for (long j = 0; j < bdim; ++j) {
          float acc = cell.c.at(i, j);
          for (long t = 0; t < bdim; ++t)
            acc += cell.a.at(i, t) * cell.b.at(t, j);
          cell.c.at(i, j) = acc;
        }
    }
    if (nc > 1 && k + 1 < steps) {
      shift_round(/*unit_shift=*/true);
    }
  }

  out.product = MatrixF(dim);
  for (long i = 0; i < grid; ++i)
    for (long j = 0; j < grid; ++j) {
      const CannonCell& cell = cells[static_cast<size_t>(i * grid + j)];
      for (long bi = 0; bi < bdim; ++bi)
        for (long bj = 0; bj < bdim; ++bj)
          out.product.at(i * bdim + bi, j * bdim + bj) = cell.c.at(bi, bj);
    }

  if (nc > 1) machine.sync_up(n);
}

}  // namespace

void SimConfig::validate(workloads::Kind kind) const {
  workloads::make_spec(kind, task_size);  // N shape check
  if (total_bce < 1) {
    throw std::invalid_argument("total BCE budget must be positive");
  }
  if (core_size < 1 || core_size > total_bce) {
    throw std::invalid_argument("core size must lie in [1, total BCE]");
  }
  if (total_bce % core_size != 0) {
    throw std::invalid_argument("core size must divide the total BCE budget");
  }
  if (cores() > task_size) {
    throw std::invalid_argument("no idle cores allowed: need nc <= N");
  }
  if (!(perf_exponent > 0.0 && perf_exponent <= 1.0)) {
    throw std::invalid_argument("perf exponent must be in (0, 1]");
  }
  if (!(transfer_cost > 0.0) || !(hop_cost > 0.0)) {
    throw std::invalid_argument("transfer and hop costs must be positive");
  }
  std::string why;
  if (!workloads::partition_feasible(kind, task_size, cores(), &why)) {
    throw std::invalid_argument("partition infeasible: " + why);
  }
}

SerialResult run_serial(workloads::Kind kind, long task_size,
                        std::uint32_t seed) {
  SerialResult res;
  res.t1_serial = static_cast<double>(workloads::serial_cycles(kind, task_size));
  switch (kind) {
    case Kind::black_scholes:
      res.out.pairs = workloads::generate_option_pairs(task_size, seed);
      workloads::black_scholes_serial(res.out.pairs);
      break;
    case Kind::fft:
      res.out.spectrum =
          workloads::fft_serial(workloads::generate_samples(task_size, seed));
      break;
    case Kind::dmm: {
      const long dim = int_sqrt(task_size);
      res.out.product = workloads::dmm_serial(
          workloads::generate_matrix(dim, seed),
          workloads::generate_matrix(dim, seed + 1));
      break;
    }
  }
  return res;
}

ParallelResult run_parallel(workloads::Kind kind, const SimConfig& config,
                            bool record_trace) {
  config.validate(kind);

  Machine machine(config, record_trace);
  ParallelResult res;
  switch (kind) {
    case Kind::black_scholes:
      run_black_scholes(config, machine, res.out);
      break;
    case Kind::fft:
      run_fft(config, machine, res.out);
      break;
    case Kind::dmm:
      run_dmm(config, machine, res.out);
      break;
  }

  res.phases = machine.phases();
  res.moved_sync = machine.moved_sync();
  res.moved_comm = machine.moved_comm();
  res.trace = machine.take_trace();

  SimReport& rep = res.report;
  rep.t1_serial =
      static_cast<double>(workloads::serial_cycles(kind, config.task_size));
  rep.tmc = res.phases.total();
  rep.ts_serial_equiv = res.moved_sync * config.transfer_cost;
  rep.tc_serial_equiv = res.moved_comm * config.transfer_cost;
  rep.f1_measured = rep.tc_serial_equiv / rep.t1_serial;
  rep.f2_measured = rep.ts_serial_equiv / rep.t1_serial;
  rep.speedup = rep.t1_serial / rep.tmc;
  return res;
}

std::pair<double, double> measure_intensities(const SimReport& report) {
  if (!(report.t1_serial > 0.0)) {
    throw std::domain_error("measure_intensities: t1_serial must be positive");
  }
  return {report.tc_serial_equiv / report.t1_serial,
          report.ts_serial_equiv / report.t1_serial};
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

SimCurve speedup_curve_sim(workloads::Kind kind, const SimConfig& base,
                           std::span<const long> core_sizes) {
  SimCurve curve;
  curve.kind = kind;
  std::vector<long> rs(core_sizes.begin(), core_sizes.end());
  if (rs.empty()) rs = divisors(base.total_bce);
  std::sort(rs.begin(), rs.end());

  for (long r : rs) {
    SimConfig config = base;
    config.core_size = r;
    if (base.total_bce % r != 0 ||
        !workloads::partition_feasible(kind, config.task_size,
                                       config.cores()) ||
        config.cores() > config.task_size) {
      curve.skipped_r.push_back(r);
      continue;
    }
    const ParallelResult run = run_parallel(kind, config);
    curve.points.push_back({r, config.cores(), run.report});
  }
  return curve;
}

std::string trace_to_csv(std::span<const TraceRow> rows) {
  std::ostringstream os;
  os << "phase,start_cycle,end_cycle,core_id,elements_moved\n";
  for (const TraceRow& row : rows) {
    os << row.phase << ',' << row.start_cycle << ',' << row.end_cycle << ','
       << row.core_id << ',' << row.elements_moved << '\n';
  }
  return os.str();
}

}  // namespace mcsm::sim
