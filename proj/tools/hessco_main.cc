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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hessco/dataset.h"
#include "hessco/error.h"
#include "hessco/experiment.h"
#include "hessco/model_builder.h"
#include "hessco/mps.h"
#include "hessco/scenario.h"

namespace {

namespace fs = std::filesystem;
using namespace hessco;

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "out";
  std::string catalog;
  std::string prices;
  std::string demand;
  std::string pv;
  std::optional<int> clusters;
  std::optional<int> days;
};

void AddCommon(CLI::App* app, CommonFlags& f) {
  app->add_option("--config", f.config, "Run configuration (JSON)");
  app->add_option("--seed", f.seed, "Scenario seed");
  app->add_option("--out-dir", f.out_dir, "Output directory");
  app->add_option("--catalog", f.catalog, "Storage catalog file");
  app->add_option("--prices", f.prices, "Price CSV");
  app->add_option("--demand", f.demand, "Demand CSV");
  app->add_option("--pv", f.pv, "PV capacity-factor CSV");
  app->add_option("--clusters", f.clusters, "Number of representative days");
  app->add_option("--days", f.days, "Synthetic days in the horizon");
}

RunConfig MakeConfig(const CommonFlags& f) {
  RunConfig c = f.config.empty() ? DefaultRunConfig() : LoadRunConfig(f.config);
  if (f.seed) c.seed = *f.seed;
  if (!f.catalog.empty()) c.catalog_path = f.catalog;
  const int given = !f.prices.empty() + !f.demand.empty() + !f.pv.empty();
  if (given == 3) {
    c.files = DatasetFiles{f.prices, f.demand, f.pv};
  } else if (given != 0) {
    throw ConfigError("--prices, --demand and --pv must be given together");
  }
  if (f.clusters) c.clusters = *f.clusters;
  if (f.days) c.horizon.synthetic_days = *f.days;
  if (c.cache_dir.empty()) c.cache_dir = (fs::path(f.out_dir) / "cache").string();
  c.horizon.Validate();
  return c;
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write '" + path.string() + "'");
}

void Report(const Workspace& w) {
  for (const std::string& msg : w.warnings) {
    std::cerr << "warning: " << msg << "\n";
  }
  std::cerr << "days " << w.days.size() << ", clusters "
            << w.scenario.clusters << ", synthetic days "
            << w.scenario.synthetic_days
            << (w.scenario_from_cache ? " (cached scenario)" : "") << "\n";
}

int WriteResults(const std::vector<DesignResult>& results, const Workspace& w,
                 const std::string& out_dir) {
  fs::create_directories(out_dir);
  WriteText(fs::path(out_dir) / "summary.csv", SummaryCsv(results, w.catalog));
  WriteText(fs::path(out_dir) / "results.json", ResultsJson(results, w));
  int failures = 0;
  for (const DesignResult& r : results) {
    if (r.ok()) {
      EmitTraces(r, (fs::path(out_dir) / ("traces_" + r.id + ".csv")).string());
    } else {
      ++failures;
    }
    std::fprintf(stderr, "experiment %s: %s", r.id.c_str(), r.status.c_str());
    if (r.ok()) {
      std::fprintf(stderr, " total %.3f k€ (%ld iterations, %.2f s)",
                   r.cost.total, r.iterations, r.seconds);
    } else if (!r.message.empty()) {
      std::fprintf(stderr, " (%s)", r.message.c_str());
    }
    std::fprintf(stderr, "\n");
  }
  std::cout << SummaryCsv(results, w.catalog);
  return failures == 0 ? 0 : 1;
}

int ExportAll(const RunConfig& config, const Workspace& w,
              const std::string& target) {
  const bool single = config.experiments.size() == 1 &&
                      fs::path(target).extension() == ".mps";
  if (!single) fs::create_directories(target);
  for (const ExperimentConfig& e : config.experiments) {
    const DesignModel model = BuildDesignModel(MakeProblem(config, w, e));
    const std::string path =
        single ? target : (fs::path(target) / ("exp_" + e.id + ".mps")).string();
    ExportMps(model.lp, path);
    std::cerr << "wrote " << path << " (" << model.lp.num_rows() << " rows, "
              << model.lp.num_columns() << " columns)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Co-design of grid connection, PV and hybrid storage for a "
               "truck-charging microgrid"};
  app.require_subcommand(1);

  CommonFlags common;
  int jobs = 1;
  std::string solver = "embedded";
  std::string mps_out;
  std::string ess;
  std::string out;
  std::uint64_t demo_seed = 1;
  int demo_days = 120;
  int tau = 60;

  auto* synth = app.add_subcommand("synth", "Build the representative-day scenario");
  AddCommon(synth, common);
  synth->add_option("--out", out, "Scenario JSON output")->required();

  auto* optimize = app.add_subcommand("optimize", "Size and dispatch one storage set");
  AddCommon(optimize, common);
  optimize->add_option("--ess", ess, "Comma-separated storage names");
  optimize->add_option("--solver", solver, "embedded or external")
      ->check(CLI::IsMember({"embedded", "external"}));
  optimize->add_option("--mps-out", mps_out, "MPS path for --solver external");

  auto* experiments = app.add_subcommand("experiments", "Run the experiment matrix");
  AddCommon(experiments, common);
  experiments->add_option("--jobs", jobs, "Parallel experiments")
      ->check(CLI::PositiveNumber);
  experiments->add_option("--solver", solver, "embedded or external")
      ->check(CLI::IsMember({"embedded", "external"}));
  experiments->add_option("--mps-out", mps_out,
                          "Directory for MPS files with --solver external");

  auto* export_mps = app.add_subcommand("export-mps", "Write the design LP as MPS");
  AddCommon(export_mps, common);
  export_mps->add_option("--ess", ess, "Comma-separated storage names");
  export_mps->add_option("--out", out, "MPS file or directory")->required();

  auto* demo = app.add_subcommand("demo-data", "Write the synthetic demo dataset");
  demo->add_option("--seed", demo_seed, "Generator seed");
  demo->add_option("--days", demo_days, "Number of days")
      ->check(CLI::PositiveNumber);
  demo->add_option("--tau", tau, "Step length in minutes");
  demo->add_option("--out-dir", common.out_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (demo->parsed()) {
      fs::create_directories(common.out_dir);
      const fs::path dir(common.out_dir);
      const DatasetFiles files{(dir / "prices.csv").string(),
                               (dir / "demand.csv").string(),
                               (dir / "pv.csv").string()};
      WriteDataset(MakeDemoDataset(demo_seed, demo_days, tau), files, tau);
      std::cerr << "wrote " << demo_days << " days to " << common.out_dir << "\n";
      return 0;
    }

    RunConfig config = MakeConfig(common);
    if (!ess.empty() || optimize->parsed()) {
      if (!ess.empty()) {
        config.experiments = {ExperimentConfig{"cli", SplitList(ess), {}, {}, {}, {}}};
      } else if (!config.experiments.empty()) {
        config.experiments.resize(1);
      }
    }
    const Workspace w = PrepareWorkspace(config);
    Report(w);

    if (synth->parsed()) {
      WriteText(out, ScenarioToJson(w.scenario));
      std::cerr << "wrote " << out << "\n";
      return 0;
    }
    if (export_mps->parsed()) return ExportAll(config, w, out);
    if (solver == "external") {
      if (mps_out.empty()) {
        throw ConfigError("--solver external needs --mps-out");
      }
      return ExportAll(config, w, mps_out);
    }
    const std::vector<DesignResult> results =
        RunExperiments(config, w, optimize->parsed() ? 1 : jobs);
    return WriteResults(results, w, common.out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
