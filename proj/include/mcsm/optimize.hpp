#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mcsm/types.hpp"

namespace mcsm::optimize {

struct OptimumResult {
  double r_opt = 1.0;        // maximizing core size, in [1, n]
  double speedup_max = 0.0;  // speedup at r_opt
  bool clamped = false;      // r_opt sits on a domain boundary
};

struct SearchConfig {
  int grid_samples = 512;  // coarse log-spaced scan of [1, n]
  double rel_tol = 1e-6;   // golden-section relative tolerance on r
  int max_iterations = 200;
};

// Closed-form optimum r_opt = n(1-f)/f for the Hill-Marty symmetric model,
// clamped to [1, n]. f = 0 degenerates to the largest core.
OptimumResult optimal_r_hm_sym(double n, double f);

// Deterministic maximizer for any speedup-vs-r curve on [1, n]: log-spaced
// grid scan followed by golden-section refinement around the best sample.
// Throws SolverError if the curve evaluates non-finite anywhere it looks.
OptimumResult optimal_r_numeric(const std::function<double(double)>& speedup,
                                double n, SearchConfig config = {});

// Round toward the divisor of n closest to r (simulator cross-checks use
// divisor core sizes only).
long nearest_divisor(long n, double r);

enum class LimitRegime { amdahl_bound, constant_overhead, vanishing };

struct LimitResult {
  double limit_value = 0.0;  // +infinity marks an unbounded limit
  LimitRegime regime = LimitRegime::amdahl_bound;
};

// Large-nc limit of the extended speedup for f1 = c1*nc^p, f2 = c2*nc^q.
// The printed result covers the three corner cases (p<1,q<0), (p=1,q=0)
// and (p>1,q>0); mixed exponent ranges compose additively,
//   limit = 1 / ((1-f) + [c1 if p=1] + [c2 if q=0]),
// and any divergent term (p>1 or q>0 with a nonzero coefficient) forces 0.
LimitResult asymptotic_limit(double f, PowerLaw conn, PowerLaw sync);

// One sample of a maximum-speedup-vs-synchronization sweep.
struct SyncSweepPoint {
  double q = 0.0;            // sync exponent of this sample
  double r_opt = 1.0;        // maximizing core size
  double speedup_max = 0.0;  // maximum speedup at this q
};

struct SyncSweepSeries {
  double f = 0.0;
  double hm_reference = 0.0;  // best Hill-Marty speedup, horizontal line
  std::vector<SyncSweepPoint> points;
};

// Maximum achievable speedup vs f2 = sync_coeff * nc^q with f1 = 0,
// optimizing r per q sample. One series per f.
std::vector<SyncSweepSeries> sweep_max_speedup_vs_sync(
    double n, std::span<const double> f_values, std::span<const double> q_values,
    double sync_coeff, Topology topo, PerformanceLaw law = {});

struct IntensityPreset {
  std::string label;
  PowerLaw conn;
  PowerLaw sync;
};

struct OptimalRPoint {
  double f = 0.0;
  double r_opt = 1.0;
  double speedup_max = 0.0;
};

struct OptimalRSeries {
  std::string label;
  std::vector<OptimalRPoint> points;
};

// Optimal core size vs f for each intensity preset, plus a trailing
// "hill-marty" reference series.
std::vector<OptimalRSeries> sweep_optimal_r_vs_f(
    double n, std::span<const double> f_values,
    std::span<const IntensityPreset> presets, Topology topo,
    PerformanceLaw law = {});

enum class ScheduleDecision { parallel, sequential };

std::string to_string(ScheduleDecision d);

struct ScheduleAdvice {
  ScheduleDecision decision = ScheduleDecision::sequential;
  double recommended_r = 1.0;
  long recommended_cores = 1;
  double expected_speedup = 1.0;
};

// Compare the best parallel configuration against running everything on a
// single n-sized core (which pays no synchronization or communication).
// Ties go to the sequential side.
ScheduleAdvice advise_schedule(double n, const WorkloadModel& workload,
                               Topology topo, PerformanceLaw law = {});

}  // namespace mcsm::optimize
