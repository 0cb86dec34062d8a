#pragma once

#include <span>
#include <string>
#include <vector>

#include "mcsm/simulator.hpp"

namespace mcsm::io {

// Fixed at 10 significant digits so repeated runs emit identical bytes.
std::string format_double(double v);

// A labeled curve over core sizes; the common shape of the figure datasets.
struct SpeedupCurve {
  struct Sample {
    double r = 1.0;
    double nc = 1.0;
    double value = 0.0;  // speedup or intensity
  };

  std::string label;
  std::vector<Sample> samples;

  // Samples must be strictly ordered by r and finite.
  void validate() const;
};

struct Column {
  std::string name;
  std::vector<double> values;
};

// Rectangular CSV; all columns must have equal length.
std::string to_csv(std::span<const Column> columns);

std::string report_to_json(const sim::SimReport& report);

void write_file(const std::string& path, const std::string& content);

}  // namespace mcsm::io
