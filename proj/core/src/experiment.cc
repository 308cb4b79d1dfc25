// Copyright 2026 The hessco Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hessco/experiment.h"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "hessco/error.h"
#include "hessco/model_builder.h"
#include "hessco/verify.h"
#include "json.hpp"

namespace hessco {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

void CheckKeys(const json& obj, std::initializer_list<const char*> allowed,
               const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || item.key() == a;
    if (!known) {
      throw ConfigError(where + ": unknown key '" + item.key() + "'");
    }
  }
}

template <typename T>
void Get(const json& obj, const char* key, T& out, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + "." + key + ": wrong type");
  }
}

template <typename T>
void GetOptional(const json& obj, const char* key, std::optional<T>& out,
                 const std::string& where) {
  if (!obj.contains(key)) return;
  T value{};
  Get(obj, key, value, where);
  out = value;
}

std::string Resolve(const std::string& base, const std::string& path) {
  if (path.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(base) / path).lexically_normal().string();
}

void ReadGrid(const json& j, GridSpec& g) {
  const std::string where = "grid";
  CheckKeys(j, {"eta_import", "eta_export", "power_ceiling", "conn_fixed",
                "tran_fixed", "var_per_mw", "peak_per_mw", "f_sell"},
            where);
  Get(j, "eta_import", g.eta_import, where);
  Get(j, "eta_export", g.eta_export, where);
  Get(j, "power_ceiling", g.power_ceiling, where);
  Get(j, "conn_fixed", g.conn_fixed, where);
  Get(j, "tran_fixed", g.tran_fixed, where);
  Get(j, "var_per_mw", g.var_per_mw, where);
  Get(j, "peak_per_mw", g.peak_per_mw, where);
  Get(j, "f_sell", g.f_sell, where);
}

void ReadPv(const json& j, PvSpec& pv) {
  const std::string where = "pv";
  CheckKeys(j, {"eta", "cost_per_mw", "om_per_mw_yr", "power_ceiling",
                "resale_factor"},
            where);
  Get(j, "eta", pv.eta, where);
  Get(j, "cost_per_mw", pv.cost_per_mw, where);
  Get(j, "om_per_mw_yr", pv.om_per_mw_yr, where);
  Get(j, "power_ceiling", pv.power_ceiling, where);
  Get(j, "resale_factor", pv.resale_factor, where);
}

FixedSizing ReadFixed(const json& j, const std::string& where) {
  CheckKeys(j, {"grid_power", "pv_power", "ess_energy", "ess_power"}, where);
  FixedSizing f;
  GetOptional(j, "grid_power", f.grid_power, where);
  GetOptional(j, "pv_power", f.pv_power, where);
  Get(j, "ess_energy", f.ess_energy, where);
  Get(j, "ess_power", f.ess_power, where);
  return f;
}

ExperimentConfig ReadExperiment(const json& j, std::size_t index) {
  const std::string where = "experiments[" + std::to_string(index) + "]";
  CheckKeys(j, {"id", "ess", "fixed", "f_sell", "years", "discount_rate"},
            where);
  ExperimentConfig e;
  Get(j, "id", e.id, where);
  if (e.id.empty()) throw ConfigError(where + ": missing id");
  Get(j, "ess", e.ess, where);
  if (j.contains("fixed")) e.fixed = ReadFixed(j["fixed"], where + ".fixed");
  GetOptional(j, "f_sell", e.f_sell, where);
  GetOptional(j, "years", e.years, where);
  GetOptional(j, "discount_rate", e.discount_rate, where);
  return e;
}

std::vector<ExperimentConfig> CaseStudyMatrix() {
  return {{"1", {"B"}, {}, {}, {}, {}},
          {"2", {"B", "S"}, {}, {}, {}, {}},
          {"3", {"B", "F"}, {}, {}, {}, {}},
          {"4", {"B", "S", "F"}, {}, {}, {}, {}}};
}

std::string Fixed(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", v == 0.0 ? 0.0 : v);
  return buffer;
}

json BreakdownToJson(const CostBreakdown& c) {
  json storage = json::array();
  for (const EssCost& e : c.storage) {
    storage.push_back({{"name", e.name},
                       {"energy_mwh", e.energy_mwh},
                       {"power_mw", e.power_mw},
                       {"throughput_mwh", e.throughput_mwh},
                       {"capex_keur", e.capex},
                       {"om_yearly_keur", e.om_yearly},
                       {"resale_keur", e.resale}});
  }
  return {{"total_keur", c.total},
          {"capex_keur", c.capex},
          {"opex_npv_keur", c.opex_npv},
          {"opex_yearly_keur", c.opex_yearly},
          {"eol_keur", c.eol_value},
          {"energy_sold_mwh", c.energy_sold},
          {"energy_purchased_mwh", c.energy_purchased},
          {"energy_cost_yearly_keur", c.energy_cost_yearly},
          {"grid_power_mw", c.grid_power},
          {"pv_power_mw", c.pv_power},
          {"peak_import_mw", c.peak_import},
          {"grid_conn_yearly_keur", c.grid_conn},
          {"grid_tran_yearly_keur", c.grid_tran},
          {"grid_var_yearly_keur", c.grid_var},
          {"grid_peak_yearly_keur", c.grid_peak},
          {"pv_capex_keur", c.pv_capex},
          {"pv_om_yearly_keur", c.pv_om_yearly},
          {"pv_resale_keur", c.pv_resale},
          {"storage", storage}};
}

std::vector<Trace> CollectTraces(const DesignModel& model,
                                 const DesignProblem& problem,
                                 const std::vector<double>& x) {
  const int steps = model.steps;
  const VariableRegistry& vars = model.vars;
  const GridSpec& grid = problem.sources.grid;
  std::vector<Trace> traces = {{"P_CH", problem.profiles.demand_ch},
                               {"P_WH", problem.profiles.demand_wh},
                               {"P_G", {}},
                               {"P_PV", {}}};
  for (int k = 0; k < steps; ++k) {
    traces[2].values.push_back(
        grid.eta_import * x[vars.At(VarKind::kSourcePlus, kGrid, k)] -
        x[vars.At(VarKind::kSourceMinus, kGrid, k)] / grid.eta_export);
    traces[3].values.push_back(problem.sources.pv.eta *
                               x[vars.At(VarKind::kPvOutput, kPv, k)]);
  }
  for (const EssSpec& e : problem.storage) {
    Trace power{"P_" + e.name, {}};
    for (int k = 0; k < steps; ++k) {
      power.values.push_back(x[vars.At(VarKind::kEssPlus, e.name, k)] -
                             x[vars.At(VarKind::kEssMinus, e.name, k)]);
    }
    traces.push_back(std::move(power));
  }
  for (const EssSpec& e : problem.storage) {
    Trace energy{"E_" + e.name, {}};
    for (int k = 0; k < steps; ++k) {
      energy.values.push_back(x[vars.At(VarKind::kStateOfEnergy, e.name, k)]);
    }
    traces.push_back(std::move(energy));
  }
  return traces;
}

}  // namespace

RunConfig DefaultRunConfig() {
  RunConfig c;
  c.horizon = CaseStudyHorizon();
  c.sources = CaseStudySources();
  c.experiments = CaseStudyMatrix();
  return c;
}

RunConfig ParseRunConfig(const std::string& json_text,
                         const std::string& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError("config", 0, e.what());
  }
  CheckKeys(root, {"data", "catalog", "horizon", "scenario", "grid", "pv",
                   "demand", "solver", "experiments", "cache_dir"},
            "config");
  RunConfig c = DefaultRunConfig();

  if (root.contains("data")) {
    const json& d = root["data"];
    CheckKeys(d, {"prices", "demand", "pv", "demo_seed", "demo_days"}, "data");
    const bool any_file =
        d.contains("prices") || d.contains("demand") || d.contains("pv");
    if (any_file) {
      DatasetFiles f;
      Get(d, "prices", f.prices, "data");
      Get(d, "demand", f.demand, "data");
      Get(d, "pv", f.pv, "data");
      if (f.prices.empty() || f.demand.empty() || f.pv.empty()) {
        throw ConfigError("data: prices, demand and pv must all be given");
      }
      f.prices = Resolve(base_dir, f.prices);
      f.demand = Resolve(base_dir, f.demand);
      f.pv = Resolve(base_dir, f.pv);
      c.files = f;
    }
    Get(d, "demo_seed", c.demo_seed, "data");
    Get(d, "demo_days", c.demo_days, "data");
  }
  if (root.contains("catalog")) {
    Get(root, "catalog", c.catalog_path, "config");
    c.catalog_path = Resolve(base_dir, c.catalog_path);
  }
  if (root.contains("horizon")) {
    const json& h = root["horizon"];
    CheckKeys(h, {"tau_minutes", "synthetic_days", "years", "discount_rate"},
              "horizon");
    Get(h, "tau_minutes", c.horizon.tau_minutes, "horizon");
    Get(h, "synthetic_days", c.horizon.synthetic_days, "horizon");
    Get(h, "years", c.horizon.years, "horizon");
    Get(h, "discount_rate", c.horizon.discount_rate, "horizon");
  }
  if (root.contains("scenario")) {
    const json& s = root["scenario"];
    CheckKeys(s, {"clusters", "seed"}, "scenario");
    Get(s, "clusters", c.clusters, "scenario");
    Get(s, "seed", c.seed, "scenario");
  }
  if (root.contains("grid")) ReadGrid(root["grid"], c.sources.grid);
  if (root.contains("pv")) ReadPv(root["pv"], c.sources.pv);
  if (root.contains("demand")) {
    const json& d = root["demand"];
    CheckKeys(d, {"eta_charging", "eta_warehouse"}, "demand");
    Get(d, "eta_charging", c.demand.eta_charging, "demand");
    Get(d, "eta_warehouse", c.demand.eta_warehouse, "demand");
  }
  if (root.contains("solver")) {
    const json& s = root["solver"];
    CheckKeys(s, {"feas_tol", "opt_tol", "max_iterations", "refactor_interval"},
              "solver");
    Get(s, "feas_tol", c.solver.feas_tol, "solver");
    Get(s, "opt_tol", c.solver.opt_tol, "solver");
    Get(s, "max_iterations", c.solver.max_iterations, "solver");
    Get(s, "refactor_interval", c.solver.refactor_interval, "solver");
  }
  if (root.contains("experiments")) {
    const json& list = root["experiments"];
    if (!list.is_array()) throw ConfigError("experiments: expected an array");
    c.experiments.clear();
    for (std::size_t i = 0; i < list.size(); ++i) {
      c.experiments.push_back(ReadExperiment(list[i], i));
    }
  }
  if (root.contains("cache_dir")) {
    Get(root, "cache_dir", c.cache_dir, "config");
    c.cache_dir = Resolve(base_dir, c.cache_dir);
  }

  c.horizon.Validate();
  c.sources.Validate();
  c.demand.Validate();
  if (c.clusters < 1) throw ConfigError("scenario.clusters must be >= 1");
  if (c.demo_days < 1) throw ConfigError("data.demo_days must be >= 1");
  if (c.solver.refactor_interval < 1 || c.solver.max_iterations < 1 ||
      !(c.solver.feas_tol > 0.0) || !(c.solver.opt_tol > 0.0)) {
    throw ConfigError("solver: invalid options");
  }
  for (std::size_t i = 0; i < c.experiments.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (c.experiments[i].id == c.experiments[j].id) {
        throw ConfigError("experiment id '" + c.experiments[i].id +
                          "' is not unique");
      }
    }
  }
  return c;
}

RunConfig LoadRunConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream text;
  text << in.rdbuf();
  const std::string base = fs::path(path).parent_path().string();
  try {
    return ParseRunConfig(text.str(), base.empty() ? "." : base);
  } catch (const ParseError& e) {
    throw ParseError(path, 0, e.what());
  }
}

std::string ScenarioCachePath(const RunConfig& config,
                              const std::vector<HistoricalDay>& days) {
  char name[128];
  std::snprintf(name, sizeof name, "scenario_%016" PRIx64 "_W%d_T%d_s%" PRIu64
                ".json",
                HashDays(days), config.clusters, config.horizon.synthetic_days,
                config.seed);
  return (fs::path(config.cache_dir) / name).string();
}

Workspace PrepareWorkspace(const RunConfig& config) {
  Workspace w;
  w.catalog = config.catalog_path.empty() ? CaseStudyCatalog()
                                          : LoadCatalog(config.catalog_path);
  if (config.files) {
    Dataset data = LoadDataset(*config.files, config.horizon.tau_minutes);
    w.days = std::move(data.days);
    w.warnings = std::move(data.warnings);
  } else {
    w.days = MakeDemoDataset(config.demo_seed, config.demo_days,
                             config.horizon.tau_minutes);
  }
  if (w.days.empty()) throw ConfigError("dataset has no complete day");

  std::string cache;
  if (!config.cache_dir.empty()) {
    cache = ScenarioCachePath(config, w.days);
    std::ifstream in(cache, std::ios::binary);
    if (in) {
      std::stringstream text;
      text << in.rdbuf();
      try {
        ScenarioModel s = ScenarioFromJson(text.str());
        if (s.clusters == config.clusters &&
            s.synthetic_days == config.horizon.synthetic_days &&
            s.seed == config.seed && s.labels.size() == w.days.size()) {
          w.scenario = std::move(s);
          w.scenario_from_cache = true;
        }
      } catch (const Error&) {
        w.warnings.push_back("ignoring unreadable scenario cache " + cache);
      }
    }
  }
  if (!w.scenario_from_cache) {
    w.scenario = BuildScenario(w.days, config.clusters,
                               config.horizon.synthetic_days, config.seed);
    if (!cache.empty()) {
      fs::create_directories(config.cache_dir);
      std::ofstream out(cache, std::ios::binary);
      out << ScenarioToJson(w.scenario);
      if (!out) w.warnings.push_back("could not write scenario cache " + cache);
    }
  }
  w.profiles = ProfilesFromScenario(w.scenario, w.days);
  return w;
}

DesignProblem MakeProblem(const RunConfig& config, const Workspace& workspace,
                          const ExperimentConfig& experiment) {
  DesignProblem p;
  p.horizon = config.horizon;
  if (experiment.years) p.horizon.years = *experiment.years;
  if (experiment.discount_rate) {
    p.horizon.discount_rate = *experiment.discount_rate;
  }
  p.sources = config.sources;
  if (experiment.f_sell) p.sources.grid.f_sell = *experiment.f_sell;
  p.demand = config.demand;
  p.storage = workspace.catalog.Subset(experiment.ess);
  p.profiles = workspace.profiles;
  p.fixed = experiment.fixed;
  p.Validate();
  return p;
}

DesignResult RunExperiment(const RunConfig& config, const Workspace& workspace,
                           const ExperimentConfig& experiment) {
  DesignResult r;
  r.id = experiment.id;
  r.ess = experiment.ess;
  try {
    const DesignProblem problem = MakeProblem(config, workspace, experiment);
    const DesignModel model = BuildDesignModel(problem);
    r.rows = model.lp.num_rows();
    r.columns = model.lp.num_columns();
    const Solution s = Solve(model.lp, config.solver);
    r.status = StatusName(s.status);
    r.message = s.message;
    r.objective = s.objective;
    r.iterations = s.iterations;
    r.seconds = s.seconds;
    if (!s.optimal()) return r;
    const VerifyReport report = Verify(model, s.values);
    r.max_row_violation = std::max(report.WorstRow(), report.bound_max);
    r.complementarity_max = report.complementarity_max;
    r.cost = Audit(model, problem, s.values, s.objective);
    r.traces = CollectTraces(model, problem, s.values);
  } catch (const std::exception& e) {
    r.status = "error";
    r.message = e.what();
  }
  return r;
}

std::vector<DesignResult> RunExperiments(const RunConfig& config,
                                         const Workspace& workspace,
                                         int jobs) {
  const std::size_t n = config.experiments.size();
  std::vector<DesignResult> results(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      results[i] = RunExperiment(config, workspace, config.experiments[i]);
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  std::sort(results.begin(), results.end(),
            [](const DesignResult& a, const DesignResult& b) {
              return a.id < b.id;
            });
  return results;
}

void EmitTraces(const DesignResult& result, std::ostream& out) {
  out << "step,series,value\n";
  const std::size_t steps =
      result.traces.empty() ? 0 : result.traces.front().values.size();
  char buffer[64];
  for (std::size_t k = 0; k < steps; ++k) {
    for (const Trace& t : result.traces) {
      std::snprintf(buffer, sizeof buffer, "%.9g", t.values[k]);
      out << k << ',' << t.series << ',' << buffer << '\n';
    }
  }
}

void EmitTraces(const DesignResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  EmitTraces(result, out);
  if (!out) throw Error("failed writing '" + path + "'");
}

std::string SummaryCsv(const std::vector<DesignResult>& results,
                       const Catalog& catalog) {
  std::string csv =
      "exp_id,e_max_mwh,p_max_mw,p_grid_mw,p_pv_mw,total_keur,capex_keur,"
      "opex_keur,eol_keur,e_sold_mwh,e_purchased_mwh,status\n";
  for (const DesignResult& r : results) {
    std::string energy = "[";
    std::string power = "[";
    for (std::size_t i = 0; i < catalog.entries().size(); ++i) {
      const std::string& name = catalog.entries()[i].name;
      double e = 0.0;
      double p = 0.0;
      for (const EssCost& c : r.cost.storage) {
        if (c.name == name) {
          e = c.energy_mwh;
          p = c.power_mw;
        }
      }
      const char* sep = i == 0 ? "" : ";";
      energy += sep + Fixed(e);
      power += sep + Fixed(p);
    }
    energy += "]";
    power += "]";
    const CostBreakdown& c = r.cost;
    csv += r.id + "," + energy + "," + power + "," + Fixed(c.grid_power) + "," +
           Fixed(c.pv_power) + "," + Fixed(c.total) + "," + Fixed(c.capex) +
           "," + Fixed(c.opex_npv) + "," + Fixed(c.eol_value) + "," +
           Fixed(c.energy_sold) + "," + Fixed(c.energy_purchased) + "," +
           r.status + "\n";
  }
  return csv;
}

std::string BreakdownJson(const CostBreakdown& cost) {
  return BreakdownToJson(cost).dump(2);
}

std::string ResultsJson(const std::vector<DesignResult>& results,
                        const Workspace& workspace) {
  json list = json::array();
  for (const DesignResult& r : results) {
    json traces = json::object();
    for (const Trace& t : r.traces) traces[t.series] = t.values;
    list.push_back({{"id", r.id},
                    {"ess", r.ess},
                    {"status", r.status},
                    {"message", r.message},
                    {"objective_keur", r.objective},
                    {"iterations", r.iterations},
                    {"seconds", r.seconds},
                    {"rows", r.rows},
                    {"columns", r.columns},
                    {"max_row_violation", r.max_row_violation},
                    {"complementarity_max", r.complementarity_max},
                    {"cost", r.ok() ? BreakdownToJson(r.cost) : json()},
                    {"traces", traces}});
  }
  json root = {{"historical_days", workspace.days.size()},
               {"clusters", workspace.scenario.clusters},
               {"synthetic_days", workspace.scenario.synthetic_days},
               {"scenario_seed", workspace.scenario.seed},
               {"experiments", list}};
  return root.dump(2) + "\n";
}

}  // namespace hessco
