#pragma once

#include <string>

// Built-in experiment presets, one per reproduced figure. Each is an
// ordinary config document; a user config merges on top of it.
namespace mcsm::cli {

inline const char* kPresetFig6 = R"json({
  "command": "speedup",
  "topology": "symmetric",
  "n": 256,
  "f": [0.5, 0.95, 0.99, 0.999],
  "r_grid": [1, 2, 4, 8, 16, 32, 64, 128, 256],
  "models": ["ours", "hill-marty", "cassidy", "eyerman-eeckhout", "gunther"],
  "ours": {"f1": {"coeff": 0.001, "exponent": 0.5}, "f2": {"coeff": 0.01, "exponent": 0.0}},
  "cassidy": {"fp": 0.66, "fc": 0.34},
  "gunther": {"alpha": 0.001, "beta": 0.001},
  "ee": {"p_cnt": 0.1, "p_cs": 0.1}
})json";

inline const char* kPresetFig7 = R"json({
  "command": "speedup",
  "topology": "asymmetric",
  "n": 256,
  "f": [0.5, 0.95, 0.99, 0.999],
  "r_grid": [1, 2, 4, 8, 16, 32, 64, 128, 256],
  "models": ["ours", "hill-marty", "eyerman-eeckhout"],
  "ours": {"f1": {"coeff": 0.001, "exponent": 0.5}, "f2": {"coeff": 0.01, "exponent": 0.0}},
  "ee": {"p_cnt": 0.1, "p_cs": 0.1}
})json";

inline const char* kPresetFig8 = R"json({
  "command": "simulate",
  "workload": "all",
  "N": 256,
  "n": 256,
  "r": "divisors",
  "perf_exponent": 0.5,
  "transfer_cost": 1.0,
  "hop_cost": 1.0,
  "trace": false
})json";

// Figure 9 plots the connectivity series of the same runs.
inline const char* kPresetFig9 = kPresetFig8;

inline const char* kPresetFig10 = R"json({
  "command": "optimal",
  "sweep": "max-speedup-vs-sync",
  "topology": "symmetric",
  "n": 256,
  "f": [0.5, 0.95, 0.99, 0.999],
  "q": [-2.0, -1.75, -1.5, -1.25, -1.0, -0.75, -0.5, -0.25, 0.0, 0.25, 0.5],
  "f2_coeff": 0.01
})json";

inline const char* kPresetFig11 = R"json({
  "command": "optimal",
  "sweep": "max-speedup-vs-sync",
  "topology": "asymmetric",
  "n": 256,
  "f": [0.5, 0.95, 0.99, 0.999],
  "q": [-2.0, -1.75, -1.5, -1.25, -1.0, -0.75, -0.5, -0.25, 0.0, 0.25, 0.5],
  "f2_coeff": 0.01
})json";

inline const char* kPresetFig12 = R"json({
  "command": "optimal",
  "sweep": "optimal-r-vs-f",
  "topology": "symmetric",
  "n": 256,
  "f": [0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.98, 0.99, 0.995, 0.998, 0.999],
  "presets": [
    {"label": "f1=0.01nc^0.5", "f1": {"coeff": 0.01, "exponent": 0.5}},
    {"label": "f1=0.01nc^0.75", "f1": {"coeff": 0.01, "exponent": 0.75}},
    {"label": "f1=0.01nc^1", "f1": {"coeff": 0.01, "exponent": 1.0}}
  ]
})json";

inline const char* kPresetFig13 = R"json({
  "command": "optimal",
  "sweep": "optimal-r-vs-f",
  "topology": "symmetric",
  "n": 256,
  "f": [0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.98, 0.99, 0.995, 0.998, 0.999],
  "presets": [
    {"label": "f2=0.01nc^0.5", "f2": {"coeff": 0.01, "exponent": 0.5}},
    {"label": "f2=0.01nc^0.75", "f2": {"coeff": 0.01, "exponent": 0.75}},
    {"label": "f2=0.01nc^1", "f2": {"coeff": 0.01, "exponent": 1.0}}
  ]
})json";

// Returns nullptr for an unknown name.
inline const char* preset_by_name(const std::string& name) {
  if (name == "fig6") return kPresetFig6;
  if (name == "fig7") return kPresetFig7;
  if (name == "fig8") return kPresetFig8;
  if (name == "fig9") return kPresetFig9;
  if (name == "fig10") return kPresetFig10;
  if (name == "fig11") return kPresetFig11;
  if (name == "fig12") return kPresetFig12;
  if (name == "fig13") return kPresetFig13;
  return nullptr;
}

}  // namespace mcsm::cli
