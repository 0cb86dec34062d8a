#include "mcsm/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mcsm::io {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void SpeedupCurve::validate() const {
  for (size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i].value)) {
      throw std::domain_error("curve \"" + label + "\" has a non-finite value");
    }
    if (i > 0 && !(samples[i - 1].r < samples[i].r)) {
      throw std::domain_error("curve \"" + label +
                              "\" samples must be strictly ordered by r");
    }
  }
}

std::string to_csv(std::span<const Column> columns) {
  if (columns.empty()) return "";
  const size_t rows = columns.front().values.size();
  std::ostringstream os;
  for (size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].values.size() != rows) {
      throw std::invalid_argument("csv columns must have equal length");
    }
    os << columns[c].name << (c + 1 < columns.size() ? ',' : '\n');
  }
  for (size_t i = 0; i < rows; ++i) {
    for (size_t c = 0; c < columns.size(); ++c) {
      os << format_double(columns[c].values[i])
         << (c + 1 < columns.size() ? ',' : '\n');
    }
  }
  return os.str();
}

std::string report_to_json(const sim::SimReport& report) {
  std::ostringstream os;
  os << "{\"t1_serial\": " << format_double(report.t1_serial)
     << ", \"tmc\": " << format_double(report.tmc)
     << ", \"ts_serial_equiv\": " << format_double(report.ts_serial_equiv)
     << ", \"tc_serial_equiv\": " << format_double(report.tc_serial_equiv)
     << ", \"f1_measured\": " << format_double(report.f1_measured)
     << ", \"f2_measured\": " << format_double(report.f2_measured)
     << ", \"speedup\": " << format_double(report.speedup) << "}";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open \"" + path + "\" for writing");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed for \"" + path + "\"");
  }
}

}  // namespace mcsm::io
