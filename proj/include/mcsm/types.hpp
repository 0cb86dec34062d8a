#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace mcsm {

enum class Topology { symmetric, asymmetric };

std::string to_string(Topology t);

// Thrown by the numeric optimizer and sweep drivers when a model evaluates
// to a non-finite value; carries the offending core size in the message.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Intensity power law c * nc^e, evaluated in the core count nc.
struct PowerLaw {
  double coeff = 0.0;     // intensity at nc = 1, must be >= 0
  double exponent = 0.0;  // scaling exponent in nc

  double operator()(double nc) const {
    // coeff == 0 means the intensity is identically zero; skip the pow so
    // extreme exponents cannot produce 0 * inf.
    return coeff == 0.0 ? 0.0 : coeff * std::pow(nc, exponent);
  }

  static PowerLaw zero() { return {}; }
  static PowerLaw constant(double c) { return {c, 0.0}; }

  void validate() const;
};

// Amdahl fraction plus the two overhead intensities of the extended model.
struct WorkloadModel {
  double f = 1.0;  // parallelizable fraction, in [0, 1]
  PowerLaw conn;   // connectivity intensity f1(nc)
  PowerLaw sync;   // synchronization intensity f2(nc)

  void validate() const;
};

// Total chip resources and the core size, both in BCE units.
struct ChipBudget {
  double n = 256.0;  // total budget, >= 1
  double r = 1.0;    // core size, in [1, n]

  double cores(Topology t) const {
    return t == Topology::symmetric ? n / r : n - r + 1.0;
  }

  void validate() const;
};

// Sequential core performance r^exponent relative to one BCE.
// Pollack's rule is the default (exponent 0.5).
struct PerformanceLaw {
  double exponent = 0.5;  // in (0, 1]

  double operator()(double r) const { return std::pow(r, exponent); }

  void validate() const;
};

}  // namespace mcsm
