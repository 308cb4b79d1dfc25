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

#ifndef HESSCO_SCENARIO_H_
#define HESSCO_SCENARIO_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hessco/types.h"

namespace hessco {

// Per-day statistics used for clustering. Twelve entries: mean, population
// standard deviation, maximum and minimum of price, total demand
// (charging + warehouse) and PV capacity factor, in that order.
using FeatureVector = std::vector<double>;
inline constexpr int kFeatureCount = 12;

FeatureVector ExtractFeatures(const HistoricalDay& day);

// Per-dimension affine map to zero mean and unit variance. Dimensions with
// zero spread are only centred.
struct FeatureScaling {
  std::vector<double> mean;
  std::vector<double> scale;

  bool operator==(const FeatureScaling&) const = default;
};

FeatureScaling FitScaling(std::span<const FeatureVector> features);
std::vector<FeatureVector> ApplyScaling(std::span<const FeatureVector> features,
                                        const FeatureScaling& scaling);

struct KMeansOptions {
  int restarts = 10;
  int max_iterations = 300;
};

struct KMeansResult {
  std::vector<FeatureVector> centroids;
  std::vector<int> labels;
  double objective = 0.0;
  // Objective after every centroid update of the winning restart.
  std::vector<double> history;
};

// Lloyd's algorithm with k-means++ seeding; best of `restarts` seeded runs.
// A cluster left empty by an assignment step is reseeded at the point
// farthest from its own centroid. Every returned cluster is nonempty.
// Throws ValidationError when clusters is not in [1, points.size()].
KMeansResult KMeans(std::span<const FeatureVector> points, int clusters,
                    std::uint64_t seed, const KMeansOptions& options = {});

// For each cluster, the member closest to its centroid; ties go to the
// smaller index.
std::vector<int> SelectRepresentatives(std::span<const FeatureVector> points,
                                       std::span<const FeatureVector> centroids,
                                       std::span<const int> labels);

// Share of days carrying each label. The last nonempty cluster absorbs the
// rounding residual so that summing the weights in order gives exactly 1.
std::vector<double> ClusterWeights(std::span<const int> labels, int clusters);

struct TransitionModel {
  std::vector<std::vector<long>> counts;
  std::vector<std::vector<double>> probabilities;

  bool operator==(const TransitionModel&) const = default;
};

// Counts consecutive label pairs and normalises each row. A row without any
// outgoing transition becomes uniform.
TransitionModel FitTransition(std::span<const int> labels, int clusters);

// Samples a chain of `length` labels: the first from `initial`, the rest from
// the rows of `transition`. Clusters missing from the sample replace the last
// occurrences of the currently most frequent cluster (smallest index on
// ties), so every cluster appears at least once.
// Throws ValidationError when length < number of clusters.
std::vector<int> SampleSequence(
    const std::vector<std::vector<double>>& transition,
    std::span<const double> initial, int length, std::uint64_t seed);

struct ScenarioModel {
  int clusters = 0;
  int synthetic_days = 0;
  std::uint64_t seed = 0;
  FeatureScaling scaling;
  std::vector<FeatureVector> centroids;  // in scaled feature space
  std::vector<int> labels;               // one per historical day
  std::vector<int> representatives;      // historical day index per cluster
  std::vector<double> weights;
  TransitionModel transition;
  std::vector<int> sequence;             // cluster per synthetic day
  std::vector<CalendarDate> dates;       // historical day dates
  double objective = 0.0;

  // Historical day index used for each synthetic day.
  std::vector<int> SyntheticDays() const;

  bool operator==(const ScenarioModel&) const = default;
};

// Full pipeline: features, scaling, k-means, representatives, weights,
// transition fit and sequence sampling.
ScenarioModel BuildScenario(const std::vector<HistoricalDay>& days,
                            int clusters, int synthetic_days,
                            std::uint64_t seed);

std::string ScenarioToJson(const ScenarioModel& model);
// Throws ParseError.
ScenarioModel ScenarioFromJson(const std::string& text);

// SplitMix64 finaliser; derives independent seeds from one user seed.
std::uint64_t SplitMix64(std::uint64_t x);

}  // namespace hessco

#endif  // HESSCO_SCENARIO_H_
