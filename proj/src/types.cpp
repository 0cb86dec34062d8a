#include "mcsm/types.hpp"

namespace mcsm {

std::string to_string(Topology t) {
  return t == Topology::symmetric ? "symmetric" : "asymmetric";
}

void PowerLaw::validate() const {
  if (!(coeff >= 0.0) || !std::isfinite(coeff)) {
    throw std::domain_error("power law coefficient must be finite and >= 0");
  }
  if (!std::isfinite(exponent)) {
    throw std::domain_error("power law exponent must be finite");
  }
}

void WorkloadModel::validate() const {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw std::domain_error("parallel fraction f must be in [0, 1]");
  }
  conn.validate();
  sync.validate();
}

void ChipBudget::validate() const {
  if (!std::isfinite(n) || !std::isfinite(r)) {
    throw std::domain_error("chip budget must be finite");
  }
  if (n < 1.0) {
    throw std::domain_error("total budget n must be >= 1 BCE");
  }
  if (r < 1.0 || r > n) {
    throw std::domain_error("core size r must lie in [1, n]");
  }
}

void PerformanceLaw::validate() const {
  if (!(exponent > 0.0 && exponent <= 1.0)) {
    throw std::domain_error("performance exponent must be in (0, 1]");
  }
}

}  // namespace mcsm
