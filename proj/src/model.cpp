#include "mcsm/model.hpp"

namespace mcsm {

double perf_seq(double r, PerformanceLaw law) {
  law.validate();
  if (!(r >= 1.0)) {
    throw std::domain_error("perf_seq: core size r must be >= 1");
  }
  return law(r);
}

double perf_par(double n, double r, Topology topo, PerformanceLaw law) {
  law.validate();
  if (!(r >= 1.0) || !(n >= 1.0)) {
    throw std::domain_error("perf_par: need n >= 1 and r >= 1");
  }
  if (r > n) {
    throw std::domain_error("perf_par: core size r exceeds budget n");
  }
  if (topo == Topology::symmetric) {
    return (n - r) / r * law(r);
  }
  return n - r;
}

double amdahl_speedup(double f, double nc) {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw std::domain_error("amdahl_speedup: f must be in [0, 1]");
  }
  if (!(nc >= 1.0)) {
    throw std::domain_error("amdahl_speedup: core count must be >= 1");
  }
  return 1.0 / (1.0 - f + f / nc);
}

double extended_amdahl(double f, double nc, const WorkloadModel& workload) {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw std::domain_error("extended_amdahl: f must be in [0, 1]");
  }
  if (!(nc >= 1.0)) {
    throw std::domain_error("extended_amdahl: core count must be >= 1");
  }
  workload.conn.validate();
  workload.sync.validate();
  const double den =
      1.0 - f + f / nc + workload.conn(nc) / nc + workload.sync(nc);
  return 1.0 / den;
}

double speedup_sym(const ChipBudget& budget, const WorkloadModel& workload,
                   PerformanceLaw law) {
  budget.validate();
  workload.validate();
  law.validate();
  const double nc = budget.cores(Topology::symmetric);
  const double f = workload.f;
  const double den =
      (1.0 - f) + f / nc + workload.conn(nc) / nc + workload.sync(nc);
  return law(budget.r) / den;
}

double speedup_asym(const ChipBudget& budget, const WorkloadModel& workload,
                    PerformanceLaw law) {
  budget.validate();
  workload.validate();
  law.validate();
  const double nc = budget.cores(Topology::asymmetric);
  const double f = workload.f;
  const double p = law(budget.r);
  // Grouped so the parallel term is exactly f at r = n, where the machine
  // degenerates to the same single core as the symmetric one.
  const double den = (1.0 - f) + f * (p / (p + (budget.n - budget.r))) +
                     workload.conn(nc) / nc + workload.sync(nc);
  return p / den;
}

}  // namespace mcsm
