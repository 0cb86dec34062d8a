#include <cmath>
#include <random>

#include "doctest.h"
#include "mcsm/baselines.hpp"
#include "mcsm/model.hpp"

using namespace mcsm;

namespace {

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

const double kPow2Grid[] = {1, 2, 4, 8, 16, 32, 64, 128, 256};
const double kFractions[] = {0.5, 0.95, 0.99, 0.999};

}  // namespace

TEST_CASE("perf_seq follows the performance law") {
  CHECK(perf_seq(1.0) == 1.0);
  CHECK(perf_seq(256.0) == doctest::Approx(16.0));
  CHECK(perf_seq(4.0) == doctest::Approx(2.0));
  CHECK(perf_seq(16.0, {1.0}) == doctest::Approx(16.0));
  CHECK_THROWS_AS(perf_seq(0.5), std::domain_error);
  CHECK_THROWS_AS(perf_seq(2.0, {0.0}), std::domain_error);
}

TEST_CASE("perf_par evaluates the added-core throughput") {
  // direct evaluation: (256-4)/4 * sqrt(4) and 256 - 4
  CHECK(perf_par(256, 4, Topology::symmetric) ==
        doctest::Approx((256.0 - 4.0) / 4.0 * 2.0));
  CHECK(perf_par(256, 4, Topology::symmetric) == doctest::Approx(126.0));
  CHECK(perf_par(256, 4, Topology::asymmetric) == doctest::Approx(252.0));
  CHECK(perf_par(256, 256, Topology::symmetric) == 0.0);
  CHECK(perf_par(256, 256, Topology::asymmetric) == 0.0);
  CHECK_THROWS_AS(perf_par(16, 32, Topology::symmetric), std::domain_error);
}

TEST_CASE("amdahl speedup") {
  CHECK(amdahl_speedup(0.5, 1.0) == doctest::Approx(1.0));
  const double want = 1.0 / (0.05 + 0.95 / 256.0);
  CHECK(amdahl_speedup(0.95, 256.0) == doctest::Approx(want).epsilon(1e-12));
  CHECK(want == doctest::Approx(18.6182).epsilon(1e-4));
  // nc -> infinity approaches 1/(1-f)
  CHECK(amdahl_speedup(0.5, 1e15) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(amdahl_speedup(0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(amdahl_speedup(1.5, 4.0), std::domain_error);
}

TEST_CASE("extended amdahl adds the intensity terms") {
  // zero intensities reduce to the plain law
  CHECK(extended_amdahl(0.99, 256.0, {0.99, {}, {}}) ==
        doctest::Approx(amdahl_speedup(0.99, 256.0)).epsilon(1e-15));

  // f = 1, nc = 1, f2 = 1: denominator is exactly 2
  CHECK(extended_amdahl(1.0, 1.0, {1.0, {}, PowerLaw::constant(1.0)}) == 0.5);

  // direct evaluation of the worked case
  const WorkloadModel w{0.999, {0.001, 0.5}, {0.01, 0.0}};
  const double den =
      0.001 + 0.999 / 256.0 + 0.001 * 16.0 / 256.0 + 0.01;
  CHECK(extended_amdahl(0.999, 256.0, w) ==
        doctest::Approx(1.0 / den).epsilon(1e-13));
  CHECK(1.0 / den == doctest::Approx(66.8233).epsilon(1e-4));
}

TEST_CASE("symmetric speedup worked examples") {
  CHECK(speedup_sym({256, 256}, {0.7, {}, {}}) == doctest::Approx(16.0));
  const WorkloadModel w{0.999, {0.001, 0.5}, {0.01, 0.0}};
  CHECK(speedup_sym({256, 1}, w) ==
        doctest::Approx(extended_amdahl(0.999, 256.0, w)).epsilon(1e-13));
  const double want = 2.0 / (0.05 + 0.95 / 64.0);
  CHECK(speedup_sym({256, 4}, {0.95, {}, {}}) ==
        doctest::Approx(want).epsilon(1e-13));
  CHECK(want == doctest::Approx(30.8434).epsilon(1e-4));
  CHECK_THROWS_AS(speedup_sym({256, 300}, {0.5, {}, {}}), std::domain_error);
}

TEST_CASE("asymmetric speedup worked examples") {
  CHECK(speedup_asym({256, 256}, {0.9, {}, {}}) == doctest::Approx(16.0));
  const double want = 4.0 / (0.01 + 0.99 * 4.0 / 244.0);
  CHECK(speedup_asym({256, 16}, {0.99, {}, {}}) ==
        doctest::Approx(want).epsilon(1e-13));
  CHECK(want == doctest::Approx(152.5).epsilon(1e-3));
  const double want2 = 4.0 / (0.01 + 0.99 * 4.0 / 244.0 + 0.01);
  CHECK(speedup_asym({256, 16}, {0.99, {}, {0.01, 0.0}}) ==
        doctest::Approx(want2).epsilon(1e-13));
  CHECK(want2 == doctest::Approx(110.41).epsilon(1e-3));
  CHECK_THROWS_AS(speedup_asym({256, 0.5}, {0.5, {}, {}}), std::domain_error);
}

TEST_CASE("zero-intensity reduction to Hill-Marty on the grid") {
  for (double f : kFractions) {
    for (double r : kPow2Grid) {
      const ChipBudget b{256, r};
      const WorkloadModel w{f, {}, {}};
      CHECK(rel_diff(speedup_sym(b, w),
                     baselines::hm_speedup(b, f, Topology::symmetric)) <=
            1e-12);
      CHECK(rel_diff(speedup_asym(b, w),
                     baselines::hm_speedup(b, f, Topology::asymmetric)) <=
            1e-12);
    }
  }
}

TEST_CASE("boundary agreement at r = n") {
  const WorkloadModel w{0.97, {0.02, 0.6}, {0.03, 0.4}};
  for (double n : {4.0, 64.0, 256.0, 1000.0}) {
    const ChipBudget b{n, n};
    const double sym = speedup_sym(b, w);
    const double asym = speedup_asym(b, w);
    CHECK(sym == asym);  // exact: both reduce to sqrt(n)/(1+f1(1)+f2(1))
    CHECK(sym == doctest::Approx(std::sqrt(n) /
                                 (1.0 + w.conn(1.0) + w.sync(1.0)))
                     .epsilon(1e-14));
  }
}

TEST_CASE("speedup is non-increasing in either intensity coefficient") {
  std::mt19937 gen(7);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * (gen() * (1.0 / 4294967296.0));
  };
  for (int i = 0; i < 300; ++i) {
    const double n = uniform(2.0, 1024.0);
    const double r = uniform(1.0, n);
    const double f = uniform(0.0, 1.0);
    const double p = uniform(-1.0, 1.5);
    const double q = uniform(-1.5, 1.0);
    const double c1 = uniform(0.0, 0.5);
    const double c2 = uniform(0.0, 0.5);
    const double bump = uniform(0.0, 0.5);

    const WorkloadModel base{f, {c1, p}, {c2, q}};
    const WorkloadModel more_conn{f, {c1 + bump, p}, {c2, q}};
    const WorkloadModel more_sync{f, {c1, p}, {c2 + bump, q}};
    const ChipBudget b{n, r};
    CHECK(speedup_sym(b, more_conn) <= speedup_sym(b, base) + 1e-12);
    CHECK(speedup_sym(b, more_sync) <= speedup_sym(b, base) + 1e-12);
    CHECK(speedup_asym(b, more_conn) <= speedup_asym(b, base) + 1e-12);
    CHECK(speedup_asym(b, more_sync) <= speedup_asym(b, base) + 1e-12);
  }
}

TEST_CASE("extended amdahl never exceeds the plain law") {
  std::mt19937 gen(11);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * (gen() * (1.0 / 4294967296.0));
  };
  for (int i = 0; i < 300; ++i) {
    const double f = uniform(0.0, 1.0);
    const double nc = uniform(1.0, 4096.0);
    const WorkloadModel w{f,
                          {uniform(0.0, 1.0), uniform(-1.0, 1.0)},
                          {uniform(0.0, 1.0), uniform(-1.0, 1.0)}};
    CHECK(extended_amdahl(f, nc, w) <= amdahl_speedup(f, nc) + 1e-12);
  }
}

TEST_CASE("f = 1 with one core and zero intensities gives sqrt(r)") {
  CHECK(speedup_sym({256, 256}, {1.0, {}, {}}) == doctest::Approx(16.0));
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS((ChipBudget{0.5, 0.25}.validate()), std::domain_error);
  CHECK_THROWS_AS((WorkloadModel{-0.1, {}, {}}.validate()), std::domain_error);
  CHECK_THROWS_AS((PowerLaw{-1.0, 0.0}.validate()), std::domain_error);
  CHECK_THROWS_AS((PerformanceLaw{1.5}.validate()), std::domain_error);
  CHECK_NOTHROW((ChipBudget{256, 256}.validate()));
}
