#pragma once

#include "mcsm/types.hpp"

namespace mcsm {

// Performance of a sequential r-sized core relative to one BCE.
double perf_seq(double r, PerformanceLaw law = {});

// Performance of the parallel section of the chip: the added cores only,
// i.e. (n-r)/r * perf(r) for the symmetric machine and n-r one-BCE cores
// for the asymmetric one. Zero at r = n.
double perf_par(double n, double r, Topology topo, PerformanceLaw law = {});

// Plain Amdahl speedup 1 / (1 - f + f/nc).
double amdahl_speedup(double f, double nc);

// Amdahl speedup with the connectivity and synchronization terms:
// 1 / (1 - f + f/nc + f1(nc)/nc + f2(nc)).
double extended_amdahl(double f, double nc, const WorkloadModel& workload);

// Symmetric multicore speedup vs one BCE core, nc = n/r:
//   perf(r) / ((1-f) + f/nc + f1(nc)/nc + f2(nc))
// Reduces to the Hill-Marty symmetric model at f1 = f2 = 0.
double speedup_sym(const ChipBudget& budget, const WorkloadModel& workload,
                   PerformanceLaw law = {});

// Asymmetric multicore speedup vs one BCE core, nc = n - r + 1:
//   perf(r) / ((1-f) + f*perf(r)/(perf(r)+n-r) + f1(nc)/nc + f2(nc))
// Reduces to the Hill-Marty asymmetric model at f1 = f2 = 0.
double speedup_asym(const ChipBudget& budget, const WorkloadModel& workload,
                    PerformanceLaw law = {});

}  // namespace mcsm
