#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mcsm/baselines.hpp"
#include "mcsm/io.hpp"
#include "mcsm/model.hpp"
#include "mcsm/optimize.hpp"
#include "mcsm/simulator.hpp"
#include "mcsm/workloads.hpp"
#include "presets.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace mcsm::cli {

namespace {

// Maps a config key back to the line it appears on in the user's file, for
// error messages. Keys that came from a preset have no line.
struct Locator {
  std::string path;
  std::string text;

  std::string prefix(const std::string& key) const {
    if (!text.empty() && !key.empty()) {
      const std::string needle = "\"" + key + "\"";
      const size_t pos = text.find(needle);
      if (pos != std::string::npos) {
        const long line =
            1 + std::count(text.begin(), text.begin() + pos, '\n');
        return path + ":" + std::to_string(line) + ": ";
      }
    }
    return path.empty() ? std::string("config: ") : path + ": ";
  }
};

[[noreturn]] void fail(const Locator& loc, const std::string& key,
                       const std::string& msg) {
  throw ConfigError(loc.prefix(key) + msg);
}

// Pulls typed values out of one JSON object and rejects anything left over.
class ObjectReader {
 public:
  ObjectReader(json obj, std::string where, const Locator& loc)
      : obj_(std::move(obj)), where_(std::move(where)), loc_(loc) {
    if (!obj_.is_object()) {
      fail(loc_, "", "\"" + where_ + "\" must be a JSON object");
    }
  }

  bool has(const std::string& key) const { return obj_.contains(key); }

  json take(const std::string& key) {
    json v = obj_.at(key);
    obj_.erase(key);
    return v;
  }

  double number(const std::string& key, double fallback) {
    return has(key) ? require_number(key) : fallback;
  }

  double require_number(const std::string& key) {
    if (!has(key)) fail(loc_, "", where_ + " is missing key \"" + key + "\"");
    const json v = take(key);
    if (!v.is_number()) fail(loc_, key, "\"" + key + "\" must be a number");
    return v.get<double>();
  }

  long integer(const std::string& key, long fallback) {
    if (!has(key)) return fallback;
    const json v = take(key);
    if (!v.is_number_integer())
      fail(loc_, key, "\"" + key + "\" must be an integer");
    return v.get<long>();
  }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const json v = take(key);
    if (!v.is_boolean()) fail(loc_, key, "\"" + key + "\" must be a boolean");
    return v.get<bool>();
  }

  std::string string_value(const std::string& key, std::string fallback) {
    if (!has(key)) return fallback;
    return require_string(key);
  }

  std::string require_string(const std::string& key) {
    if (!has(key)) fail(loc_, "", where_ + " is missing key \"" + key + "\"");
    const json v = take(key);
    if (!v.is_string()) fail(loc_, key, "\"" + key + "\" must be a string");
    return v.get<std::string>();
  }

  std::vector<double> number_array(const std::string& key) {
    if (!has(key)) fail(loc_, "", where_ + " is missing key \"" + key + "\"");
    const json v = take(key);
    if (!v.is_array() || v.empty())
      fail(loc_, key, "\"" + key + "\" must be a non-empty array of numbers");
    std::vector<double> out;
    for (const json& e : v) {
      if (!e.is_number())
        fail(loc_, key, "\"" + key + "\" must contain only numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  json object(const std::string& key) {
    if (!has(key)) return json::object();
    const json v = take(key);
    if (!v.is_object()) fail(loc_, key, "\"" + key + "\" must be an object");
    return v;
  }

  // Call after all known keys were taken.
  void finish() {
    if (!obj_.empty()) {
      const std::string key = obj_.begin().key();
      fail(loc_, key, "unknown key \"" + key + "\" in " + where_);
    }
  }

 private:
  json obj_;
  std::string where_;
  const Locator& loc_;
};

PowerLaw read_power_law(const json& obj, const std::string& where,
                        const Locator& loc, PowerLaw fallback) {
  if (obj.is_null()) return fallback;
  ObjectReader reader(obj, where, loc);
  PowerLaw law;
  law.coeff = reader.number("coeff", fallback.coeff);
  law.exponent = reader.number("exponent", fallback.exponent);
  reader.finish();
  return law;
}

Topology read_topology(ObjectReader& reader) {
  const std::string name = reader.string_value("topology", "symmetric");
  if (name == "symmetric") return Topology::symmetric;
  if (name == "asymmetric") return Topology::asymmetric;
  throw ConfigError("topology must be \"symmetric\" or \"asymmetric\", got \"" +
                    name + "\"");
}

// Re-raise library invariant violations as config errors, pointing at the
// parameter block that produced them.
template <typename Fn>
void validate_block(const Locator& loc, const std::string& key, Fn&& fn) {
  try {
    fn();
  } catch (const std::domain_error& e) {
    fail(loc, key, std::string("invalid \"") + key + "\": " + e.what());
  } catch (const std::invalid_argument& e) {
    fail(loc, key, std::string("invalid \"") + key + "\": " + e.what());
  }
}

void write_output(const std::string& out_dir, const std::string& file,
                  const std::string& content) {
  fs::create_directories(out_dir);
  const std::string path = (fs::path(out_dir) / file).string();
  io::write_file(path, content);
  std::cout << "wrote " << path << "\n";
}

// ---------------------------------------------------------------------------
// speedup: model curves over an r grid, one column group per (model, f).
// ---------------------------------------------------------------------------

const std::set<std::string> kModelNames = {
    "ours", "hill-marty", "cassidy", "eyerman-eeckhout", "gunther"};

struct SpeedupSetup {
  Topology topo = Topology::symmetric;
  double n = 256.0;
  std::vector<double> f_values;
  std::vector<double> r_grid;
  std::vector<std::string> models;
  WorkloadModel ours;  // f filled per column
  PerformanceLaw law;
  baselines::CassidyParams cassidy;
  baselines::GuntherParams gunther;
  bool ee_explicit = false;
  baselines::EEParams ee;  // when explicit
  double ee_p_cnt = 0.1;
  double ee_p_cs = 0.1;
};

SpeedupSetup read_speedup_config(json cfg, const Locator& loc) {
  SpeedupSetup s;
  ObjectReader reader(std::move(cfg), "config", loc);
  reader.string_value("command", "speedup");
  s.topo = read_topology(reader);
  s.n = reader.require_number("n");
  s.f_values = reader.number_array("f");
  s.r_grid = reader.number_array("r_grid");

  if (reader.has("models")) {
    const json models = reader.take("models");
    if (!models.is_array() || models.empty()) {
      fail(loc, "models", "\"models\" must be a non-empty array");
    }
    for (const json& m : models) {
      if (!m.is_string() || !kModelNames.count(m.get<std::string>())) {
        fail(loc, "models",
             "model names must be one of ours, hill-marty, cassidy, "
             "eyerman-eeckhout, gunther");
      }
      s.models.push_back(m.get<std::string>());
    }
  } else {
    s.models = {"ours", "hill-marty"};
  }

  {
    ObjectReader ours(reader.object("ours"), "\"ours\"", loc);
    s.ours.conn = read_power_law(ours.has("f1") ? ours.take("f1") : json(),
                                 "\"ours.f1\"", loc, PowerLaw::zero());
    s.ours.sync = read_power_law(ours.has("f2") ? ours.take("f2") : json(),
                                 "\"ours.f2\"", loc, PowerLaw::zero());
    s.law.exponent = ours.number("perf_exponent", 0.5);
    ours.finish();
  }
  {
    ObjectReader cas(reader.object("cassidy"), "\"cassidy\"", loc);
    s.cassidy.fp = cas.number("fp", s.cassidy.fp);
    s.cassidy.fc = cas.number("fc", 1.0 - s.cassidy.fp);
    s.cassidy.g0 = cas.number("g0", s.cassidy.g0);
    s.cassidy.beta = cas.number("beta", s.cassidy.beta);
    s.cassidy.k = cas.number("k", s.cassidy.k);
    s.cassidy.d1 = cas.number("d1", s.cassidy.d1);
    s.cassidy.d2 = cas.number("d2", s.cassidy.d2);
    cas.finish();
  }
  {
    ObjectReader gun(reader.object("gunther"), "\"gunther\"", loc);
    s.gunther.alpha = gun.number("alpha", s.gunther.alpha);
    s.gunther.beta_c = gun.number("beta", s.gunther.beta_c);
    gun.finish();
  }
  {
    ObjectReader ee(reader.object("ee"), "\"ee\"", loc);
    if (ee.has("f_seq")) {
      s.ee_explicit = true;
      s.ee.f_seq = ee.require_number("f_seq");
      s.ee.f_par_cs = ee.require_number("f_par_cs");
      s.ee.f_par_ncs = ee.require_number("f_par_ncs");
      s.ee.p_cnt = ee.require_number("p_cnt");
      s.ee.p_cs = ee.require_number("p_cs");
    } else {
      s.ee_p_cnt = ee.number("p_cnt", 0.1);
      s.ee_p_cs = ee.number("p_cs", 0.1);
    }
    ee.finish();
  }
  reader.finish();

  // Semantic validation before any computation.
  validate_block(loc, "n", [&] { ChipBudget{s.n, 1.0}.validate(); });
  for (double f : s.f_values) {
    validate_block(loc, "f", [&] { WorkloadModel{f, {}, {}}.validate(); });
  }
  if (s.r_grid.empty()) fail(loc, "r_grid", "\"r_grid\" must not be empty");
  for (size_t i = 0; i < s.r_grid.size(); ++i) {
    validate_block(loc, "r_grid",
                   [&] { ChipBudget{s.n, s.r_grid[i]}.validate(); });
    if (i > 0 && !(s.r_grid[i - 1] < s.r_grid[i])) {
      fail(loc, "r_grid", "\"r_grid\" must be strictly increasing");
    }
  }
  validate_block(loc, "ours", [&] {
    s.ours.conn.validate();
    s.ours.sync.validate();
    s.law.validate();
  });
  validate_block(loc, "cassidy", [&] { s.cassidy.validate(); });
  validate_block(loc, "gunther", [&] { s.gunther.validate(); });
  if (s.ee_explicit) {
    validate_block(loc, "ee", [&] { s.ee.validate(); });
  }
  if (s.topo == Topology::asymmetric) {
    for (const std::string& m : s.models) {
      if (m == "cassidy" || m == "gunther") {
        fail(loc, "models",
             m + " defines no asymmetric form; use the symmetric topology");
      }
    }
  }
  return s;
}

double eval_model(const SpeedupSetup& s, const std::string& model, double f,
                  double r) {
  const ChipBudget budget{s.n, r};
  if (model == "ours") {
    WorkloadModel w = s.ours;
    w.f = f;
    return s.topo == Topology::symmetric ? speedup_sym(budget, w, s.law)
                                         : speedup_asym(budget, w, s.law);
  }
  if (model == "hill-marty") {
    return baselines::hm_speedup(budget, f, s.topo);
  }
  if (model == "cassidy") {
    return baselines::cassidy_speedup(budget, f, s.cassidy);
  }
  if (model == "eyerman-eeckhout") {
    const baselines::EEParams params =
        s.ee_explicit
            ? s.ee
            : baselines::EEParams::from_fraction(f, s.ee_p_cnt, s.ee_p_cs);
    return baselines::ee_speedup(budget, params, s.topo);
  }
  return baselines::gunther_sym_speedup(budget, f, s.gunther);
}

void cmd_speedup(json cfg, const Locator& loc, const Invocation& inv) {
  const SpeedupSetup s = read_speedup_config(std::move(cfg), loc);

  std::vector<io::SpeedupCurve> curves;
  for (const std::string& model : s.models) {
    for (double f : s.f_values) {
      io::SpeedupCurve curve;
      curve.label = model + "__f=" + io::format_double(f);
      for (double r : s.r_grid) {
        curve.samples.push_back(
            {r, ChipBudget{s.n, r}.cores(s.topo), eval_model(s, model, f, r)});
      }
      curve.validate();
      curves.push_back(std::move(curve));
    }
  }

  std::vector<io::Column> columns;
  io::Column r_col{"r", s.r_grid};
  io::Column nc_col{"nc", {}};
  for (double r : s.r_grid) {
    nc_col.values.push_back(ChipBudget{s.n, r}.cores(s.topo));
  }
  columns.push_back(std::move(r_col));
  columns.push_back(std::move(nc_col));
  for (const io::SpeedupCurve& curve : curves) {
    io::Column col{curve.label, {}};
    for (const auto& sample : curve.samples) col.values.push_back(sample.value);
    columns.push_back(std::move(col));
  }

  const std::string name = inv.preset.empty() ? "speedup" : inv.preset;
  write_output(inv.out_dir, name + ".csv", io::to_csv(columns));
}

// ---------------------------------------------------------------------------
// optimal: the two optimizer sweeps behind the optimum figures.
// ---------------------------------------------------------------------------

void cmd_optimal(json cfg, const Locator& loc, const Invocation& inv) {
  ObjectReader reader(std::move(cfg), "config", loc);
  reader.string_value("command", "optimal");
  const std::string sweep = reader.require_string("sweep");
  const Topology topo = read_topology(reader);
  const double n = reader.require_number("n");
  validate_block(loc, "n", [&] { ChipBudget{n, 1.0}.validate(); });
  const std::vector<double> f_values = reader.number_array("f");
  for (double f : f_values) {
    validate_block(loc, "f", [&] { WorkloadModel{f, {}, {}}.validate(); });
  }
  const std::string name = inv.preset.empty() ? "optimal" : inv.preset;

  if (sweep == "max-speedup-vs-sync") {
    const std::vector<double> q_values = reader.number_array("q");
    const double f2_coeff = reader.number("f2_coeff", 0.01);
    reader.finish();
    validate_block(loc, "f2_coeff",
                   [&] { PowerLaw{f2_coeff, 0.0}.validate(); });
    for (double q : q_values) {
      validate_block(loc, "q", [&] { PowerLaw{f2_coeff, q}.validate(); });
    }

    const auto series = optimize::sweep_max_speedup_vs_sync(
        n, f_values, q_values, f2_coeff, topo);

    std::vector<io::Column> columns;
    columns.push_back({"q", q_values});
    for (const auto& s : series) {
      const std::string f_tag = "__f=" + io::format_double(s.f);
      io::Column ours{"ours" + f_tag, {}};
      io::Column ropt{"ours_ropt" + f_tag, {}};
      io::Column hm{"hill-marty" + f_tag, {}};
      for (const auto& p : s.points) {
        ours.values.push_back(p.speedup_max);
        ropt.values.push_back(p.r_opt);
        hm.values.push_back(s.hm_reference);
      }
      columns.push_back(std::move(ours));
      columns.push_back(std::move(ropt));
      columns.push_back(std::move(hm));
    }
    write_output(inv.out_dir, name + ".csv", io::to_csv(columns));
    return;
  }

  if (sweep == "optimal-r-vs-f") {
    if (!reader.has("presets")) {
      fail(loc, "presets", "optimal-r-vs-f needs a \"presets\" array");
    }
    const json presets_json = reader.take("presets");
    reader.finish();
    if (!presets_json.is_array() || presets_json.empty()) {
      fail(loc, "presets", "\"presets\" must be a non-empty array");
    }
    std::vector<optimize::IntensityPreset> presets;
    for (const json& p : presets_json) {
      ObjectReader pr(p, "\"presets\" entry", loc);
      optimize::IntensityPreset preset;
      preset.label = pr.require_string("label");
      preset.conn = read_power_law(pr.has("f1") ? pr.take("f1") : json(),
                                   "\"f1\"", loc, PowerLaw::zero());
      preset.sync = read_power_law(pr.has("f2") ? pr.take("f2") : json(),
                                   "\"f2\"", loc, PowerLaw::zero());
      pr.finish();
      validate_block(loc, "presets", [&] {
        preset.conn.validate();
        preset.sync.validate();
      });
      presets.push_back(std::move(preset));
    }

    const auto series =
        optimize::sweep_optimal_r_vs_f(n, f_values, presets, topo);

    std::vector<io::Column> columns;
    columns.push_back({"f", f_values});
    for (const auto& s : series) {
      const bool is_reference = s.label == "hill-marty";
      io::Column ropt{is_reference ? "hill-marty_ropt"
                                   : "ours_ropt__" + s.label,
                      {}};
      io::Column smax{is_reference ? "hill-marty_speedup"
                                   : "ours_speedup__" + s.label,
                      {}};
      for (const auto& p : s.points) {
        ropt.values.push_back(p.r_opt);
        smax.values.push_back(p.speedup_max);
      }
      columns.push_back(std::move(ropt));
      columns.push_back(std::move(smax));
    }
    write_output(inv.out_dir, name + ".csv", io::to_csv(columns));
    return;
  }

  fail(loc, "sweep",
       "sweep must be \"max-speedup-vs-sync\" or \"optimal-r-vs-f\"");
}

// ---------------------------------------------------------------------------
// simulate: cycle-level sweeps plus the analytic overlay.
// ---------------------------------------------------------------------------

void cmd_simulate(json cfg, const Locator& loc, const Invocation& inv) {
  ObjectReader reader(std::move(cfg), "config", loc);
  reader.string_value("command", "simulate");
  const std::string workload = reader.string_value("workload", "all");

  sim::SimConfig base;
  base.task_size = reader.integer("N", 256);
  base.total_bce = reader.integer("n", base.task_size);
  base.perf_exponent = reader.number("perf_exponent", 0.5);
  base.transfer_cost = reader.number("transfer_cost", 1.0);
  base.hop_cost = reader.number("hop_cost", 1.0);
  base.input_seed =
      static_cast<std::uint32_t>(reader.integer("seed", workloads::kDefaultInputSeed));
  const bool trace = reader.boolean("trace", false);

  std::vector<long> core_sizes;  // empty = all divisors
  if (reader.has("r")) {
    const json r = reader.take("r");
    if (r.is_string()) {
      if (r.get<std::string>() != "divisors") {
        fail(loc, "r", "\"r\" must be an integer array or \"divisors\"");
      }
    } else if (r.is_array()) {
      for (const json& e : r) {
        if (!e.is_number_integer()) {
          fail(loc, "r", "\"r\" entries must be integers");
        }
        core_sizes.push_back(e.get<long>());
      }
    } else {
      fail(loc, "r", "\"r\" must be an integer array or \"divisors\"");
    }
  }
  reader.finish();

  std::vector<workloads::Kind> kinds;
  if (workload == "all") {
    kinds = {workloads::Kind::black_scholes, workloads::Kind::fft,
             workloads::Kind::dmm};
  } else {
    validate_block(loc, "workload",
                   [&] { kinds = {workloads::kind_from_string(workload)}; });
  }
  for (const auto kind : kinds) {
    validate_block(loc, "N", [&] {
      sim::SimConfig probe = base;
      probe.core_size = base.total_bce;  // nc = 1 is always partitionable
      probe.validate(kind);
    });
    if (!core_sizes.empty()) {
      const bool any_feasible =
          std::any_of(core_sizes.begin(), core_sizes.end(), [&](long r) {
            return r >= 1 && base.total_bce % r == 0 &&
                   workloads::partition_feasible(kind, base.task_size,
                                                 base.total_bce / r);
          });
      if (!any_feasible) {
        fail(loc, "r", "no feasible core size in \"r\" for workload " +
                           workloads::to_string(kind));
      }
    }
  }

  const std::string name = inv.preset.empty() ? "sim" : inv.preset;
  for (const auto kind : kinds) {
    const std::string wname = workloads::to_string(kind);
    const sim::SimCurve curve = sim::speedup_curve_sim(kind, base, core_sizes);

    std::vector<io::Column> columns(6);
    columns[0].name = "r";
    columns[1].name = "nc";
    columns[2].name = "speedup_sim";
    columns[3].name = "speedup_model";
    columns[4].name = "f1_measured";
    columns[5].name = "f2_measured";
    std::ostringstream reports;
    reports << "{\"workload\": \"" << wname << "\", \"N\": " << base.task_size
            << ", \"n\": " << base.total_bce << ", \"runs\": [";
    double peak = 0.0;
    long peak_r = 1;
    double f2_parallel = 0.0;
    for (size_t i = 0; i < curve.points.size(); ++i) {
      const auto& p = curve.points[i];
      const double nc = static_cast<double>(p.nc);
      // analytic overlay at the measured intensities; the workloads are
      // fully parallel, so the sequential term is zero
      const double overlay =
          std::pow(static_cast<double>(p.r), base.perf_exponent) /
          (1.0 / nc + p.report.f1_measured / nc + p.report.f2_measured);
      columns[0].values.push_back(static_cast<double>(p.r));
      columns[1].values.push_back(nc);
      columns[2].values.push_back(p.report.speedup);
      columns[3].values.push_back(overlay);
      columns[4].values.push_back(p.report.f1_measured);
      columns[5].values.push_back(p.report.f2_measured);
      reports << (i ? ", " : "") << "{\"r\": " << p.r << ", \"nc\": " << p.nc
              << ", \"report\": " << io::report_to_json(p.report) << "}";
      if (p.report.speedup > peak) {
        peak = p.report.speedup;
        peak_r = p.r;
      }
      if (p.nc > 1) f2_parallel = p.report.f2_measured;
    }
    reports << "]}\n";

    write_output(inv.out_dir, name + "_" + wname + ".csv",
                 io::to_csv(columns));
    write_output(inv.out_dir, name + "_" + wname + "_reports.json",
                 reports.str());

    if (trace) {
      for (const auto& p : curve.points) {
        sim::SimConfig config = base;
        config.core_size = p.r;
        const auto run = sim::run_parallel(kind, config, true);
        write_output(inv.out_dir,
                     name + "_" + wname + "_r" + std::to_string(p.r) +
                         "_trace.csv",
                     sim::trace_to_csv(run.trace));
      }
    }

    std::cout << wname << ": f2_measured = " << io::format_double(f2_parallel)
              << ", peak simulated speedup " << io::format_double(peak)
              << " at r = " << peak_r;
    if (!curve.skipped_r.empty()) {
      std::cout << " (skipped r:";
      for (long r : curve.skipped_r) std::cout << " " << r;
      std::cout << ")";
    }
    std::cout << "\n";
  }
}

// ---------------------------------------------------------------------------
// advise: scheduling decision for one workload model.
// ---------------------------------------------------------------------------

void cmd_advise(json cfg, const Locator& loc, const Invocation& inv) {
  ObjectReader reader(std::move(cfg), "config", loc);
  reader.string_value("command", "advise");
  const Topology topo = read_topology(reader);
  const double n = reader.require_number("n");
  WorkloadModel workload;
  workload.f = reader.require_number("f");
  workload.conn = read_power_law(reader.has("f1") ? reader.take("f1") : json(),
                                 "\"f1\"", loc, PowerLaw::zero());
  workload.sync = read_power_law(reader.has("f2") ? reader.take("f2") : json(),
                                 "\"f2\"", loc, PowerLaw::zero());
  PerformanceLaw law;
  law.exponent = reader.number("perf_exponent", 0.5);
  reader.finish();

  validate_block(loc, "n", [&] { ChipBudget{n, 1.0}.validate(); });
  validate_block(loc, "f", [&] { workload.validate(); });
  validate_block(loc, "perf_exponent", [&] { law.validate(); });

  const optimize::ScheduleAdvice advice =
      optimize::advise_schedule(n, workload, topo, law);

  std::ostringstream os;
  os << "{\"decision\": \"" << optimize::to_string(advice.decision)
     << "\", \"recommended_r\": " << io::format_double(advice.recommended_r)
     << ", \"recommended_cores\": " << advice.recommended_cores
     << ", \"expected_speedup\": "
     << io::format_double(advice.expected_speedup) << "}\n";
  std::cout << os.str();
  if (!inv.out_dir.empty()) {
    write_output(inv.out_dir, "advice.json", os.str());
  }
}

}  // namespace

void run_command(const Invocation& inv) {
  json merged = json::object();
  if (!inv.preset.empty()) {
    const char* preset = preset_by_name(inv.preset);
    if (preset == nullptr) {
      throw ConfigError("unknown preset \"" + inv.preset +
                        "\"; expected fig6 through fig13");
    }
    merged = json::parse(preset);
  }

  Locator loc;
  if (!inv.config_path.empty()) {
    std::ifstream in(inv.config_path, std::ios::binary);
    if (!in) {
      throw ConfigError("cannot read config file \"" + inv.config_path + "\"");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    loc.path = inv.config_path;
    loc.text = buf.str();
    json user;
    try {
      user = json::parse(loc.text);
    } catch (const json::parse_error& e) {
      const size_t byte = std::min<size_t>(e.byte, loc.text.size());
      const long line =
          1 + std::count(loc.text.begin(), loc.text.begin() + byte, '\n');
      throw ConfigError(loc.path + ":" + std::to_string(line) +
                        ": JSON parse error: " + e.what());
    }
    if (!user.is_object()) {
      throw ConfigError(loc.path + ": config root must be a JSON object");
    }
    merged.merge_patch(user);
  }

  if (merged.empty()) {
    throw ConfigError("nothing to run: pass --config and/or --preset");
  }
  if (merged.contains("command") && merged["command"] != inv.command) {
    throw ConfigError("config declares command \"" +
                      merged["command"].get<std::string>() +
                      "\" but \"" + inv.command + "\" was invoked");
  }
  if (inv.out_dir.empty() && inv.command != "advise") {
    throw ConfigError("--out <dir> is required for " + inv.command);
  }

  if (inv.command == "speedup") {
    cmd_speedup(std::move(merged), loc, inv);
  } else if (inv.command == "optimal") {
    cmd_optimal(std::move(merged), loc, inv);
  } else if (inv.command == "simulate") {
    cmd_simulate(std::move(merged), loc, inv);
  } else if (inv.command == "advise") {
    cmd_advise(std::move(merged), loc, inv);
  } else {
    throw ConfigError("unknown command \"" + inv.command + "\"");
  }
}

}  // namespace mcsm::cli
