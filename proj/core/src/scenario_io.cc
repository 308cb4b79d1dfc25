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

#include <string>

#include "hessco/error.h"
#include "hessco/scenario.h"
#include "json.hpp"

namespace hessco {

using nlohmann::json;

std::string ScenarioToJson(const ScenarioModel& m) {
  json j;
  j["clusters"] = m.clusters;
  j["synthetic_days"] = m.synthetic_days;
  j["seed"] = m.seed;
  j["objective"] = m.objective;
  j["feature_mean"] = m.scaling.mean;
  j["feature_scale"] = m.scaling.scale;
  j["centroids"] = m.centroids;
  j["labels"] = m.labels;
  j["representatives"] = m.representatives;
  json rep_dates = json::array();
  for (int r : m.representatives) rep_dates.push_back(m.dates[r].ToString());
  j["representative_dates"] = rep_dates;
  j["weights"] = m.weights;
  j["transition_counts"] = m.transition.counts;
  j["transition"] = m.transition.probabilities;
  j["sequence"] = m.sequence;
  json dates = json::array();
  for (const CalendarDate& d : m.dates) dates.push_back(d.ToString());
  j["dates"] = dates;
  return j.dump(2) + "\n";
}

ScenarioModel ScenarioFromJson(const std::string& text) {
  try {
    const json j = json::parse(text);
    ScenarioModel m;
    m.clusters = j.at("clusters").get<int>();
    m.synthetic_days = j.at("synthetic_days").get<int>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.objective = j.at("objective").get<double>();
    m.scaling.mean = j.at("feature_mean").get<std::vector<double>>();
    m.scaling.scale = j.at("feature_scale").get<std::vector<double>>();
    m.centroids = j.at("centroids").get<std::vector<FeatureVector>>();
    m.labels = j.at("labels").get<std::vector<int>>();
    m.representatives = j.at("representatives").get<std::vector<int>>();
    m.weights = j.at("weights").get<std::vector<double>>();
    m.transition.counts =
        j.at("transition_counts").get<std::vector<std::vector<long>>>();
    m.transition.probabilities =
        j.at("transition").get<std::vector<std::vector<double>>>();
    m.sequence = j.at("sequence").get<std::vector<int>>();
    for (const auto& d : j.at("dates")) {
      m.dates.push_back(CalendarDate::Parse(d.get<std::string>()));
    }
    const int n = static_cast<int>(m.dates.size());
    if (static_cast<int>(m.labels.size()) != n ||
        static_cast<int>(m.representatives.size()) != m.clusters ||
        static_cast<int>(m.sequence.size()) != m.synthetic_days) {
      throw ParseError("", 0, "scenario: inconsistent array lengths");
    }
    for (int r : m.representatives) {
      if (r < 0 || r >= n) throw ParseError("", 0, "scenario: bad representative");
    }
    for (int s : m.sequence) {
      if (s < 0 || s >= m.clusters) {
        throw ParseError("", 0, "scenario: bad sequence label");
      }
    }
    return m;
  } catch (const json::exception& e) {
    throw ParseError("", 0, std::string("scenario: ") + e.what());
  } catch (const ValidationError& e) {
    throw ParseError("", 0, std::string("scenario: ") + e.what());
  }
}

}  // namespace hessco
