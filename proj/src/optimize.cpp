#include "mcsm/optimize.hpp"

#include <algorithm>
#include <limits>

#include "mcsm/baselines.hpp"
#include "mcsm/model.hpp"

namespace mcsm::optimize {

namespace {

constexpr double kInvGolden = 0.6180339887498949;  // (sqrt(5)-1)/2

double checked_eval(const std::function<double(double)>& fn, double r) {
  const double v = fn(r);
  if (!std::isfinite(v)) {
    throw SolverError("model value is not finite at r = " + std::to_string(r));
  }
  return v;
}

}  // namespace

OptimumResult optimal_r_hm_sym(double n, double f) {
  if (!(n >= 1.0)) {
    throw std::domain_error("optimal_r_hm_sym: budget must be >= 1");
  }
  if (!(f >= 0.0 && f <= 1.0)) {
    throw std::domain_error("optimal_r_hm_sym: f must be in [0, 1]");
  }
  OptimumResult res;
  if (f == 0.0) {
    // Fully sequential: speedup is sqrt(r), maximized by the largest core.
    res.r_opt = n;
    res.clamped = true;
  } else {
    const double raw = n * (1.0 - f) / f;
    res.r_opt = std::clamp(raw, 1.0, n);
    res.clamped = raw <= 1.0 || raw >= n;
  }
  res.speedup_max =
      baselines::hm_speedup({n, res.r_opt}, f, Topology::symmetric);
  return res;
}

OptimumResult optimal_r_numeric(const std::function<double(double)>& speedup,
                                double n, SearchConfig config) {
  if (!(n >= 1.0)) {
    throw std::domain_error("optimal_r_numeric: budget must be >= 1");
  }
  const int samples = std::max(config.grid_samples, 3);

  // Coarse pass: log-spaced grid over [1, n].
  const double log_n = std::log(n);
  int best = 0;
  double best_val = -std::numeric_limits<double>::infinity();
  std::vector<double> grid(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    double r = n > 1.0 ? std::exp(log_n * i / (samples - 1)) : 1.0;
    r = std::clamp(r, 1.0, n);
    grid[static_cast<size_t>(i)] = r;
    const double v = checked_eval(speedup, r);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  // Golden-section refinement inside the bracket around the best sample.
  double lo = grid[static_cast<size_t>(std::max(best - 1, 0))];
  double hi = grid[static_cast<size_t>(std::min(best + 1, samples - 1))];
  double x1 = hi - kInvGolden * (hi - lo);
  double x2 = lo + kInvGolden * (hi - lo);
  double f1 = checked_eval(speedup, x1);
  double f2 = checked_eval(speedup, x2);
  for (int it = 0; it < config.max_iterations &&
                   (hi - lo) > config.rel_tol * std::max(1.0, hi);
       ++it) {
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvGolden * (hi - lo);
      f1 = checked_eval(speedup, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvGolden * (hi - lo);
      f2 = checked_eval(speedup, x2);
    }
  }

  OptimumResult res;
  res.r_opt = f1 > f2 ? x1 : x2;
  res.speedup_max = std::max(f1, f2);

  // Snap to the domain boundary when the refinement lands on it; the
  // analytic optimum clamps exactly and cross-checks expect the same.
  const double snap = 10.0 * config.rel_tol;
  if (res.r_opt - 1.0 <= snap * std::max(1.0, n)) {
    res.r_opt = 1.0;
    res.speedup_max = checked_eval(speedup, 1.0);
    res.clamped = true;
  } else if (n - res.r_opt <= snap * n) {
    res.r_opt = n;
    res.speedup_max = checked_eval(speedup, n);
    res.clamped = true;
  }
  // The endpoints are always candidates; the interior bracket can miss
  // them when the curve is monotone near the boundary.
  const double at_lo = checked_eval(speedup, 1.0);
  const double at_hi = checked_eval(speedup, n);
  if (at_lo > res.speedup_max) {
    res = {1.0, at_lo, true};
  }
  if (at_hi > res.speedup_max) {
    res = {n, at_hi, true};
  }
  return res;
}

long nearest_divisor(long n, double r) {
  if (n < 1) {
    throw std::domain_error("nearest_divisor: n must be >= 1");
  }
  long best = 1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const double dist = std::abs(static_cast<double>(d) - r);
    if (dist < best_dist) {
      best_dist = dist;
      best = d;
    }
  }
  return best;
}

LimitResult asymptotic_limit(double f, PowerLaw conn, PowerLaw sync) {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw std::domain_error("asymptotic_limit: f must be in [0, 1]");
  }
  conn.validate();
  sync.validate();

  // Contribution of f1(nc)/nc = c1*nc^(p-1) as nc grows.
  double conn_term = 0.0;
  bool divergent = false;
  if (conn.coeff > 0.0) {
    if (conn.exponent > 1.0) {
      divergent = true;
    } else if (conn.exponent == 1.0) {
      conn_term = conn.coeff;
    }
  }
  // Contribution of f2(nc) = c2*nc^q.
  double sync_term = 0.0;
  if (sync.coeff > 0.0) {
    if (sync.exponent > 0.0) {
      divergent = true;
    } else if (sync.exponent == 0.0) {
      sync_term = sync.coeff;
    }
  }

  if (divergent) {
    return {0.0, LimitRegime::vanishing};
  }
  const double den = (1.0 - f) + conn_term + sync_term;
  if (den == 0.0) {
    return {std::numeric_limits<double>::infinity(),
            LimitRegime::amdahl_bound};
  }
  return {1.0 / den, conn_term + sync_term > 0.0
                         ? LimitRegime::constant_overhead
                         : LimitRegime::amdahl_bound};
}

std::vector<SyncSweepSeries> sweep_max_speedup_vs_sync(
    double n, std::span<const double> f_values,
    std::span<const double> q_values, double sync_coeff, Topology topo,
    PerformanceLaw law) {
  std::vector<SyncSweepSeries> out;
  out.reserve(f_values.size());
  for (double f : f_values) {
    SyncSweepSeries series;
    series.f = f;
    if (topo == Topology::symmetric) {
      series.hm_reference = optimal_r_hm_sym(n, f).speedup_max;
    } else {
      series.hm_reference =
          optimal_r_numeric(
              [&](double r) {
                return baselines::hm_speedup({n, r}, f, topo);
              },
              n)
              .speedup_max;
    }
    for (double q : q_values) {
      WorkloadModel w{f, PowerLaw::zero(), PowerLaw{sync_coeff, q}};
      auto curve = [&](double r) {
        const ChipBudget b{n, r};
        return topo == Topology::symmetric ? speedup_sym(b, w, law)
                                           : speedup_asym(b, w, law);
      };
      const OptimumResult opt = optimal_r_numeric(curve, n);
      series.points.push_back({q, opt.r_opt, opt.speedup_max});
    }
    out.push_back(std::move(series));
  }
  return out;
}

std::vector<OptimalRSeries> sweep_optimal_r_vs_f(
    double n, std::span<const double> f_values,
    std::span<const IntensityPreset> presets, Topology topo,
    PerformanceLaw law) {
  std::vector<OptimalRSeries> out;
  out.reserve(presets.size() + 1);
  for (const IntensityPreset& preset : presets) {
    OptimalRSeries series;
    series.label = preset.label;
    for (double f : f_values) {
      WorkloadModel w{f, preset.conn, preset.sync};
      auto curve = [&](double r) {
        const ChipBudget b{n, r};
        return topo == Topology::symmetric ? speedup_sym(b, w, law)
                                           : speedup_asym(b, w, law);
      };
      const OptimumResult opt = optimal_r_numeric(curve, n);
      series.points.push_back({f, opt.r_opt, opt.speedup_max});
    }
    out.push_back(std::move(series));
  }

  OptimalRSeries hm;
  hm.label = "hill-marty";
  for (double f : f_values) {
    OptimumResult opt;
    if (topo == Topology::symmetric) {
      opt = optimal_r_hm_sym(n, f);
    } else {
      opt = optimal_r_numeric(
          [&](double r) { return baselines::hm_speedup({n, r}, f, topo); },
          n);
    }
    hm.points.push_back({f, opt.r_opt, opt.speedup_max});
  }
  out.push_back(std::move(hm));
  return out;
}

std::string to_string(ScheduleDecision d) {
  return d == ScheduleDecision::parallel ? "parallel" : "sequential";
}

ScheduleAdvice advise_schedule(double n, const WorkloadModel& workload,
                               Topology topo, PerformanceLaw law) {
  workload.validate();
  law.validate();
  auto curve = [&](double r) {
    const ChipBudget b{n, r};
    return topo == Topology::symmetric ? speedup_sym(b, workload, law)
                                       : speedup_asym(b, workload, law);
  };
  const OptimumResult parallel_best = optimal_r_numeric(curve, n);

  // One n-sized core keeps the whole working set local: no transfers, so
  // neither intensity is charged.
  const double sequential_speedup = law(n);

  ScheduleAdvice advice;
  if (parallel_best.speedup_max > sequential_speedup) {
    advice.decision = ScheduleDecision::parallel;
    advice.recommended_r = parallel_best.r_opt;
    const double cores = topo == Topology::symmetric
                             ? n / parallel_best.r_opt
                             : n - parallel_best.r_opt + 1.0;
    advice.recommended_cores = std::max(1L, std::lround(cores));
    advice.expected_speedup = parallel_best.speedup_max;
  } else {
    advice.decision = ScheduleDecision::sequential;
    advice.recommended_r = n;
    advice.recommended_cores = 1;
    advice.expected_speedup = sequential_speedup;
  }
  return advice;
}

}  // namespace mcsm::optimize
