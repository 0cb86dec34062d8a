#include "mcsm/baselines.hpp"

#include <algorithm>
#include <limits>

namespace mcsm::baselines {

double hm_speedup(const ChipBudget& budget, double f, Topology topo) {
  budget.validate();
  if (!(f >= 0.0 && f <= 1.0)) {
    throw std::domain_error("hm_speedup: f must be in [0, 1]");
  }
  const double root_r = std::sqrt(budget.r);
  if (topo == Topology::symmetric) {
    return root_r / ((1.0 - f) + f * budget.r / budget.n);
  }
  return root_r / ((1.0 - f) + f * root_r / (root_r + budget.n - budget.r));
}

void CassidyParams::validate() const {
  if (!(fp > 0.0 && fp <= 1.0) || !(fc >= 0.0 && fc < 1.0)) {
    throw std::domain_error("cassidy: fp must be in (0, 1] and fc in [0, 1)");
  }
  if (std::abs(fp + fc - 1.0) > 1e-9) {
    throw std::domain_error("cassidy: fp + fc must equal 1");
  }
  if (!(g0 >= 0.0 && g0 <= 1.0)) {
    throw std::domain_error("cassidy: g0 must be in [0, 1]");
  }
  if (!(beta > 0.0) || !(k > 0.0)) {
    throw std::domain_error("cassidy: beta and k must be > 0");
  }
  if (!(d1 > 0.0) || !(d2 >= d1)) {
    throw std::domain_error("cassidy: need d2 >= d1 > 0");
  }
}

CassidyCost cassidy_cost(const ChipBudget& budget, double f,
                         const CassidyParams& params) {
  budget.validate();
  params.validate();
  if (!(f >= 0.0 && f <= 1.0)) {
    throw std::domain_error("cassidy_cost: f must be in [0, 1]");
  }
  const double nc = budget.n / budget.r;
  const double ap = params.fp * budget.r;
  const double serial_term = 1.0 - f + f / nc;
  const double proc = params.g0 * params.beta / std::sqrt(ap);

  CassidyCost cost;
  double memory = 0.0;
  if (params.g0 < 1.0) {
    const double al2 = params.fc * budget.r;
    // The miss term is a probability; tiny caches would push it past 1.
    double miss = al2 > 0.0 ? params.k / std::sqrt(al2)
                            : std::numeric_limits<double>::infinity();
    if (miss > 1.0 || miss < 0.0) {
      miss = std::clamp(miss, 0.0, 1.0);
      cost.miss_clamped = true;
    }
    memory = (1.0 - params.g0) * ((1.0 - miss) * params.d1 + miss * params.d2);
  }
  cost.jd = serial_term * (proc + memory);
  return cost;
}

double cassidy_speedup(const ChipBudget& budget, double f,
                       const CassidyParams& params) {
  return 1.0 / cassidy_cost(budget, f, params).jd;
}

EEParams EEParams::from_fraction(double f, double p_cnt, double p_cs) {
  EEParams p;
  p.f_seq = f;
  p.f_par_ncs = 0.9 * (1.0 - f);
  p.f_par_cs = 0.1 * (1.0 - f);
  p.p_cnt = p_cnt;
  p.p_cs = p_cs;
  return p;
}

void EEParams::validate() const {
  for (double v : {f_seq, f_par_cs, f_par_ncs, p_cnt, p_cs}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::domain_error("ee: all parameters must be in [0, 1]");
    }
  }
  if (std::abs(f_seq + f_par_cs + f_par_ncs - 1.0) > 1e-9) {
    throw std::domain_error("ee: program fractions must sum to 1");
  }
}

double ee_speedup(const ChipBudget& budget, const EEParams& params,
                  Topology topo) {
  budget.validate();
  params.validate();
  const double n = budget.n;
  const double r = budget.r;
  const double root_r = std::sqrt(r);
  const double cs = params.f_par_cs;
  const double ncs = params.f_par_ncs;

  double t_avg = 0.0;
  double t_slw = 0.0;
  if (topo == Topology::symmetric) {
    t_avg = cs * params.p_cnt * params.p_cs / root_r +
            r * (cs * (1.0 - params.p_cnt * params.p_cs) + ncs) / (n * root_r);
    t_slw = cs * params.p_cnt / root_r +
            r * (cs * (1.0 - params.p_cnt) + ncs) / (2.0 * n * root_r);
  } else {
    const double par_perf = root_r + n - r;
    t_avg = cs * params.p_cnt * params.p_cs / root_r +
            (cs * (1.0 - params.p_cnt * params.p_cs) + ncs) / par_perf;
    t_slw = cs * params.p_cnt / root_r +
            (cs * (1.0 - params.p_cnt) + ncs) / (2.0 * par_perf);
  }
  return 1.0 / (params.f_seq / root_r + std::max(t_avg, t_slw));
}

void GuntherParams::validate() const {
  if (!(alpha >= 0.0) || !(beta_c >= 0.0)) {
    throw std::domain_error("gunther: alpha and beta must be >= 0");
  }
}

double gunther_par_speedup(double nc, const GuntherParams& params) {
  params.validate();
  if (!(nc >= 1.0)) {
    throw std::domain_error("gunther_par_speedup: core count must be >= 1");
  }
  return nc / (1.0 + params.alpha * (nc - 1.0) +
               params.beta_c * nc * (nc - 1.0));
}

double gunther_sym_speedup(const ChipBudget& budget, double f,
                           const GuntherParams& params) {
  budget.validate();
  params.validate();
  if (!(f >= 0.0 && f <= 1.0)) {
    throw std::domain_error("gunther_sym_speedup: f must be in [0, 1]");
  }
  const double root_r = std::sqrt(budget.r);
  const double par = gunther_par_speedup(budget.n / budget.r, params);
  return 1.0 / ((1.0 - f) / root_r + f / (root_r * par));
}

}  // namespace mcsm::baselines
