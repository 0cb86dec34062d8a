#pragma once

#include "mcsm/types.hpp"

namespace mcsm::baselines {

// Hill-Marty speedup with Pollack cores:
//   symmetric:  sqrt(r) / ((1-f) + f*r/n)
//   asymmetric: sqrt(r) / ((1-f) + f*sqrt(r)/(sqrt(r)+n-r))
double hm_speedup(const ChipBudget& budget, double f, Topology topo);

// Cassidy cost-function parameters. The per-core area splits into a
// processor part fp*r and an L2 part fc*r. The remaining constants come
// from the original cost model and are not published alongside it; the
// defaults below are documented placeholders, not calibrated values.
struct CassidyParams {
  double fp = 0.66;   // processor share of the core area, in (0, 1]
  double fc = 0.34;   // L2 cache share, fp + fc = 1
  double g0 = 0.9;    // fraction of instructions served within L1
  double beta = 1.0;  // processor-area performance constant, > 0
  double k = 0.5;     // cache-miss area constant, > 0
  double d1 = 10.0;   // L2 access time, cycles
  double d2 = 100.0;  // external memory access time, cycles, >= d1

  void validate() const;
};

struct CassidyCost {
  double jd = 0.0;           // delay cost J_D
  bool miss_clamped = false;  // k*AL2^-1/2 left [0,1] and was clamped
};

// Delay cost J_D = (1-f+f/nc) * [g0*beta*Ap^-1/2
//   + (1-g0)*(1-miss)*d1 + (1-g0)*miss*d2],  miss = clamp(k*AL2^-1/2, 0, 1)
// with Ap = fp*r, AL2 = fc*r, nc = n/r.
CassidyCost cassidy_cost(const ChipBudget& budget, double f,
                         const CassidyParams& params);

// Speedup = 1 / J_D.
double cassidy_speedup(const ChipBudget& budget, double f,
                       const CassidyParams& params);

// Eyerman-Eeckhout critical-section model parameters.
struct EEParams {
  double f_seq = 0.0;      // sequential fraction
  double f_par_cs = 0.0;   // parallel fraction containing critical sections
  double f_par_ncs = 0.0;  // parallel fraction needing no synchronization
  double p_cnt = 0.0;      // contention probability
  double p_cs = 0.0;       // critical-section probability

  // Figure-reproduction mapping: f_seq = f, the parallel remainder split
  // 90/10 between synchronization-free code and critical sections. Note
  // that this mapping makes f the *sequential* fraction, as printed in the
  // source material for the comparison figures.
  static EEParams from_fraction(double f, double p_cnt = 0.1,
                                double p_cs = 0.1);

  void validate() const;
};

// Speedup = 1 / (f_seq/sqrt(r) + max(T_avg, T_slw)) with the accelerated
// T_avg/T_slw forms for the requested topology.
double ee_speedup(const ChipBudget& budget, const EEParams& params,
                  Topology topo);

// Universal scalability law coefficients.
struct GuntherParams {
  double alpha = 0.001;   // contention coefficient, >= 0
  double beta_c = 0.001;  // coherency coefficient, >= 0

  void validate() const;
};

// Parallel speedup nc / (1 + alpha*(nc-1) + beta_c*nc*(nc-1)).
double gunther_par_speedup(double nc, const GuntherParams& params);

// Symmetric multicore speedup
//   1 / ((1-f)/sqrt(r) + f/(sqrt(r)*gunther_par_speedup(n/r))).
double gunther_sym_speedup(const ChipBudget& budget, double f,
                           const GuntherParams& params);

}  // namespace mcsm::baselines
