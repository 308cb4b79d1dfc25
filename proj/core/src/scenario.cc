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

#include "hessco/scenario.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "hessco/error.h"

namespace hessco {
namespace {

double Uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double SquaredDistance(const FeatureVector& a, const FeatureVector& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

void AppendMoments(const std::vector<double>& x, FeatureVector& out) {
  const double n = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  out.push_back(mean);
  out.push_back(std::sqrt(ss / n));
  out.push_back(*std::max_element(x.begin(), x.end()));
  out.push_back(*std::min_element(x.begin(), x.end()));
}

// Index drawn with probability proportional to `weights`; uniform when all
// weights vanish.
int Draw(std::mt19937_64& rng, std::span<const double> weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  const int n = static_cast<int>(weights.size());
  if (!(total > 0.0)) {
    return std::min(static_cast<int>(Uniform(rng) * n), n - 1);
  }
  const double target = Uniform(rng) * total;
  double running = 0.0;
  int last_positive = 0;
  for (int i = 0; i < n; ++i) {
    if (weights[i] <= 0.0) continue;
    running += weights[i];
    last_positive = i;
    if (target < running) return i;
  }
  return last_positive;
}

int NearestCentroid(const FeatureVector& point,
                    const std::vector<FeatureVector>& centroids) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int c = 0; c < static_cast<int>(centroids.size()); ++c) {
    const double d = SquaredDistance(point, centroids[c]);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

double Objective(std::span<const FeatureVector> points,
                 const std::vector<FeatureVector>& centroids,
                 const std::vector<int>& labels) {
  double sum = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    sum += SquaredDistance(points[i], centroids[labels[i]]);
  }
  return sum;
}

std::vector<FeatureVector> SeedPlusPlus(std::span<const FeatureVector> points,
                                        int clusters, std::mt19937_64& rng) {
  const int n = static_cast<int>(points.size());
  std::vector<FeatureVector> centroids;
  centroids.push_back(points[std::min(static_cast<int>(Uniform(rng) * n),
                                      n - 1)]);
  std::vector<double> d2(n);
  for (int i = 0; i < n; ++i) d2[i] = SquaredDistance(points[i], centroids[0]);
  while (static_cast<int>(centroids.size()) < clusters) {
    const int pick = Draw(rng, d2);
    centroids.push_back(points[pick]);
    for (int i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], SquaredDistance(points[i], centroids.back()));
    }
  }
  return centroids;
}

KMeansResult Lloyd(std::span<const FeatureVector> points, int clusters,
                   std::mt19937_64& rng, int max_iterations) {
  const int n = static_cast<int>(points.size());
  const std::size_t dim = points[0].size();
  KMeansResult r;
  r.centroids = SeedPlusPlus(points, clusters, rng);
  r.labels.assign(n, -1);

  for (int iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      const int c = NearestCentroid(points[i], r.centroids);
      if (c != r.labels[i]) {
        r.labels[i] = c;
        changed = true;
      }
    }
    if (!changed && iter > 0) break;

    std::vector<FeatureVector> sums(clusters, FeatureVector(dim, 0.0));
    std::vector<int> sizes(clusters, 0);
    for (int i = 0; i < n; ++i) {
      ++sizes[r.labels[i]];
      for (std::size_t j = 0; j < dim; ++j) sums[r.labels[i]][j] += points[i][j];
    }
    for (int c = 0; c < clusters; ++c) {
      if (sizes[c] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        r.centroids[c][j] = sums[c][j] / sizes[c];
      }
    }
    // Empty clusters move to the point farthest from its own centroid.
    for (int c = 0; c < clusters; ++c) {
      if (sizes[c] != 0) continue;
      int far = 0;
      double far_d = -1.0;
      for (int i = 0; i < n; ++i) {
        const double d = SquaredDistance(points[i], r.centroids[r.labels[i]]);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      r.centroids[c] = points[far];
    }
    r.history.push_back(Objective(points, r.centroids, r.labels));
    assert(r.history.size() < 2 ||
           r.history.back() <=
               r.history[r.history.size() - 2] * (1.0 + 1e-12) + 1e-12);
  }

  // Duplicated points can leave a cluster empty after convergence; hand it
  // the farthest point of a cluster that has more than one member.
  for (int c = 0; c < clusters; ++c) {
    std::vector<int> sizes(clusters, 0);
    for (int l : r.labels) ++sizes[l];
    if (sizes[c] != 0) continue;
    int far = -1;
    double far_d = -1.0;
    for (int i = 0; i < n; ++i) {
      if (sizes[r.labels[i]] < 2) continue;
      const double d = SquaredDistance(points[i], r.centroids[r.labels[i]]);
      if (d > far_d) {
        far_d = d;
        far = i;
      }
    }
    const int donor = r.labels[far];
    r.labels[far] = c;
    r.centroids[c] = points[far];
    FeatureVector mean(dim, 0.0);
    int count = 0;
    for (int i = 0; i < n; ++i) {
      if (r.labels[i] != donor) continue;
      ++count;
      for (std::size_t j = 0; j < dim; ++j) mean[j] += points[i][j];
    }
    for (double& v : mean) v /= count;
    r.centroids[donor] = mean;
  }
  r.objective = Objective(points, r.centroids, r.labels);
  return r;
}

}  // namespace

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

FeatureVector ExtractFeatures(const HistoricalDay& day) {
  std::vector<double> demand(day.demand_ch.size());
  for (std::size_t k = 0; k < demand.size(); ++k) {
    demand[k] = day.demand_ch[k] + day.demand_wh[k];
  }
  FeatureVector f;
  f.reserve(kFeatureCount);
  AppendMoments(day.price, f);
  AppendMoments(demand, f);
  AppendMoments(day.pv_cf, f);
  return f;
}

FeatureScaling FitScaling(std::span<const FeatureVector> features) {
  FeatureScaling s;
  if (features.empty()) return s;
  const std::size_t dim = features[0].size();
  const double n = static_cast<double>(features.size());
  s.mean.assign(dim, 0.0);
  s.scale.assign(dim, 1.0);
  for (const auto& f : features) {
    for (std::size_t j = 0; j < dim; ++j) s.mean[j] += f[j];
  }
  for (double& m : s.mean) m /= n;
  for (std::size_t j = 0; j < dim; ++j) {
    double ss = 0.0;
    for (const auto& f : features) ss += (f[j] - s.mean[j]) * (f[j] - s.mean[j]);
    const double sd = std::sqrt(ss / n);
    s.scale[j] = sd > 0.0 ? sd : 1.0;
  }
  return s;
}

std::vector<FeatureVector> ApplyScaling(std::span<const FeatureVector> features,
                                        const FeatureScaling& scaling) {
  std::vector<FeatureVector> out;
  out.reserve(features.size());
  for (const auto& f : features) {
    FeatureVector z(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
      z[j] = (f[j] - scaling.mean[j]) / scaling.scale[j];
    }
    out.push_back(std::move(z));
  }
  return out;
}

KMeansResult KMeans(std::span<const FeatureVector> points, int clusters,
                    std::uint64_t seed, const KMeansOptions& options) {
  if (clusters < 1 || clusters > static_cast<int>(points.size())) {
    throw ValidationError("k-means: cluster count " +
                          std::to_string(clusters) + " not in [1, " +
                          std::to_string(points.size()) + "]");
  }
  KMeansResult best;
  bool have_best = false;
  for (int run = 0; run < std::max(options.restarts, 1); ++run) {
    std::mt19937_64 rng(SplitMix64(seed + static_cast<std::uint64_t>(run)));
    KMeansResult r = Lloyd(points, clusters, rng, options.max_iterations);
    if (!have_best || r.objective < best.objective) {
      best = std::move(r);
      have_best = true;
    }
  }
  return best;
}

std::vector<int> SelectRepresentatives(std::span<const FeatureVector> points,
                                       std::span<const FeatureVector> centroids,
                                       std::span<const int> labels) {
  std::vector<int> reps(centroids.size(), -1);
  std::vector<double> best(centroids.size(),
                           std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int w = labels[i];
    const double d = SquaredDistance(points[i], centroids[w]);
    if (d < best[w]) {
      best[w] = d;
      reps[w] = static_cast<int>(i);
    }
  }
  return reps;
}

std::vector<double> ClusterWeights(std::span<const int> labels, int clusters) {
  std::vector<long> counts(clusters, 0);
  for (int l : labels) ++counts[l];
  std::vector<double> pi(clusters, 0.0);
  int last = -1;
  for (int w = 0; w < clusters; ++w) {
    pi[w] = static_cast<double>(counts[w]) / static_cast<double>(labels.size());
    if (counts[w] > 0) last = w;
  }
  if (last >= 0) {
    double head = 0.0;
    for (int w = 0; w < last; ++w) head += pi[w];
    pi[last] = 1.0 - head;
  }
  return pi;
}

TransitionModel FitTransition(std::span<const int> labels, int clusters) {
  TransitionModel t;
  t.counts.assign(clusters, std::vector<long>(clusters, 0));
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    ++t.counts[labels[i]][labels[i + 1]];
  }
  t.probabilities.assign(clusters, std::vector<double>(clusters, 0.0));
  for (int i = 0; i < clusters; ++i) {
    long total = 0;
    for (long c : t.counts[i]) total += c;
    for (int j = 0; j < clusters; ++j) {
      t.probabilities[i][j] =
          total == 0 ? 1.0 / clusters
                     : static_cast<double>(t.counts[i][j]) /
                           static_cast<double>(total);
    }
  }
  return t;
}

std::vector<int> SampleSequence(
    const std::vector<std::vector<double>>& transition,
    std::span<const double> initial, int length, std::uint64_t seed) {
  const int clusters = static_cast<int>(transition.size());
  if (length < clusters) {
    throw ValidationError("cannot cover all clusters: " +
                          std::to_string(length) + " days for " +
                          std::to_string(clusters) + " clusters");
  }
  std::mt19937_64 rng(SplitMix64(seed ^ 0x5ce7a110ULL));
  std::vector<int> seq;
  seq.reserve(length);
  if (length > 0) seq.push_back(Draw(rng, initial));
  while (static_cast<int>(seq.size()) < length) {
    seq.push_back(Draw(rng, transition[seq.back()]));
  }

  std::vector<int> counts(clusters, 0);
  for (int s : seq) ++counts[s];
  for (int missing = 0; missing < clusters; ++missing) {
    if (counts[missing] > 0) continue;
    const int donor = static_cast<int>(
        std::max_element(counts.begin(), counts.end()) - counts.begin());
    for (int t = length - 1; t >= 0; --t) {
      if (seq[t] == donor) {
        seq[t] = missing;
        break;
      }
    }
    --counts[donor];
    ++counts[missing];
  }
  return seq;
}

std::vector<int> ScenarioModel::SyntheticDays() const {
  std::vector<int> out;
  out.reserve(sequence.size());
  for (int w : sequence) out.push_back(representatives[w]);
  return out;
}

ScenarioModel BuildScenario(const std::vector<HistoricalDay>& days,
                            int clusters, int synthetic_days,
                            std::uint64_t seed) {
  if (days.empty()) throw ValidationError("scenario: no historical days");
  if (synthetic_days < clusters) {
    throw ValidationError("cannot cover all clusters: " +
                          std::to_string(synthetic_days) + " days for " +
                          std::to_string(clusters) + " clusters");
  }
  std::vector<FeatureVector> raw;
  raw.reserve(days.size());
  for (const HistoricalDay& d : days) raw.push_back(ExtractFeatures(d));

  ScenarioModel m;
  m.clusters = clusters;
  m.synthetic_days = synthetic_days;
  m.seed = seed;
  m.scaling = FitScaling(raw);
  const std::vector<FeatureVector> points = ApplyScaling(raw, m.scaling);
  KMeansResult km = KMeans(points, clusters, seed);
  m.centroids = std::move(km.centroids);
  m.labels = std::move(km.labels);
  m.objective = km.objective;
  m.representatives = SelectRepresentatives(points, m.centroids, m.labels);
  m.weights = ClusterWeights(m.labels, clusters);
  m.transition = FitTransition(m.labels, clusters);
  m.sequence = SampleSequence(m.transition.probabilities, m.weights,
                              synthetic_days, seed);
  for (const HistoricalDay& d : days) m.dates.push_back(d.date);
  return m;
}

}  // namespace hessco
