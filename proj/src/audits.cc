//
// Copyright 2026 The privconn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "privconn/audits.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "privconn/bounded_laplace.h"
#include "privconn/graph.h"
#include "privconn/property_bounds.h"
#include "privconn/random.h"
#include "privconn/spectrum.h"

namespace privconn {

void AuditReport::Add(AuditCase c) {
  worst_violation = std::max(worst_violation, c.violation);
  passed = passed && c.passed;
  details.push_back(std::move(c));
}

namespace {

constexpr int64_t kMinDpSamples = 100'000;
constexpr int64_t kMinConcentrationTrials = 10'000;

AuditCase MakeCase(std::string label, double statistic, double bound,
                   double slack) {
  AuditCase c;
  c.label = std::move(label);
  c.statistic = statistic;
  c.bound = bound;
  c.slack = slack;
  c.violation = statistic - bound - slack;
  c.passed = c.violation <= 0.0;
  return c;
}

std::vector<double> Histogram(const BoundedLaplace& law, int64_t samples,
                              int bins, RandomStream rng) {
  std::vector<int64_t> counts(bins, 0);
  const double width = law.upper() / bins;
  for (int64_t i = 0; i < samples; ++i) {
    const double x = law.Sample(rng);
    const int k = std::min(bins - 1, static_cast<int>(x / width));
    ++counts[k];
  }
  std::vector<double> freq(bins);
  for (int k = 0; k < bins; ++k) {
    freq[k] = static_cast<double>(counts[k]) / samples;
  }
  return freq;
}

// Greedy worst set for P[S] - e^eps Q[S]: every bin where the difference is
// positive.
AuditCase DirectionalCase(std::string label, const std::vector<double>& p,
                          const std::vector<double>& q, int64_t samples,
                          const PrivacyParams& params) {
  const double ratio = std::exp(params.epsilon);
  double p_set = 0.0;
  double q_set = 0.0;
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k] - ratio * q[k] > 0.0) {
      p_set += p[k];
      q_set += q[k];
    }
  }
  const double n = static_cast<double>(samples);
  const double slack =
      kSigmaMultiplier * std::sqrt(p_set * (1.0 - p_set) / n +
                                   ratio * ratio * q_set * (1.0 - q_set) / n);
  return MakeCase(std::move(label), p_set - ratio * q_set, params.delta,
                  slack);
}

std::string PairLabel(const Graph& g) {
  std::string out = "{";
  for (const auto& [u, v] : g.edges()) {
    absl::StrAppend(&out, out.size() > 1 ? "," : "", u, "-", v);
  }
  return out + "}";
}

}  // namespace

absl::StatusOr<std::vector<AuditCase>> AuditDpPair(
    double lambda2_g, double lambda2_h, double b, double n,
    const PrivacyParams& params, int64_t samples, int bins, uint64_t seed) {
  absl::StatusOr<BoundedLaplace> law_g = BoundedLaplace::Create(lambda2_g, b, n);
  if (!law_g.ok()) return law_g.status();
  absl::StatusOr<BoundedLaplace> law_h = BoundedLaplace::Create(lambda2_h, b, n);
  if (!law_h.ok()) return law_h.status();
  const RandomStream root(seed);
  const std::vector<double> p = Histogram(*law_g, samples, bins, root.Split(0));
  const std::vector<double> q = Histogram(*law_h, samples, bins, root.Split(1));
  return std::vector<AuditCase>{
      DirectionalCase("G vs G'", p, q, samples, params),
      DirectionalCase("G' vs G", q, p, samples, params)};
}

absl::StatusOr<AuditReport> AuditDp(const DpAuditConfig& config) {
  if (config.n < 2 || config.n > 6) {
    return absl::InvalidArgumentError(
        absl::StrCat("DP audit needs 2 <= n <= 6, got ", config.n));
  }
  if (config.samples_per_graph < kMinDpSamples) {
    return absl::InvalidArgumentError(absl::StrCat(
        "DP audit needs at least ", kMinDpSamples, " samples per graph"));
  }
  if (config.bins < 1 || config.pairs < 0 || !(config.scale_multiplier > 0)) {
    return absl::InvalidArgumentError(
        "DP audit needs bins >= 1, pairs >= 0 and a positive scale multiplier");
  }
  if (absl::Status s = config.params.Validate(); !s.ok()) return s;
  const int num_pairs = config.n * (config.n - 1) / 2;
  if (config.params.adjacency > num_pairs) {
    return absl::InvalidArgumentError(
        absl::StrCat("adjacency ", config.params.adjacency, " exceeds the ",
                     num_pairs, " node pairs"));
  }
  absl::StatusOr<double> solved = SolveScale(config.params, config.n);
  if (!solved.ok()) return solved.status();
  const double b = *solved * config.scale_multiplier;

  std::vector<std::pair<Graph, Graph>> cases;
  RandomStream picker = RandomStream(config.seed).Split(0);
  const std::vector<Edge> pairs = AllNodePairs(config.n);
  for (int i = 0; i < config.pairs; ++i) {
    Graph g = Graph::FromPairMask(
        config.n, picker.NextU64() & ((uint64_t{1} << num_pairs) - 1));
    // Exactly A distinct pairs toggled, by a partial Fisher-Yates shuffle.
    std::vector<int> order(num_pairs);
    for (int k = 0; k < num_pairs; ++k) order[k] = k;
    Graph h = g;
    for (int k = 0; k < config.params.adjacency; ++k) {
      const int j = k + static_cast<int>(picker.UniformInt(num_pairs - k));
      std::swap(order[k], order[j]);
      h = h.WithEdgeToggled(pairs[order[k]].first, pairs[order[k]].second);
    }
    cases.emplace_back(std::move(g), std::move(h));
  }
  if (config.include_extremal_pair) {
    const Graph complete = CompleteGraph(config.n);
    cases.emplace_back(complete, complete.WithEdgeToggled(0, 1));
  }

  AuditReport report;
  report.name = "dp";
  report.trials = 2 * config.samples_per_graph *
                  static_cast<int64_t>(cases.size());
  const RandomStream root(config.seed);
  for (size_t i = 0; i < cases.size(); ++i) {
    const auto& [g, h] = cases[i];
    absl::StatusOr<double> lg = AlgebraicConnectivity(g);
    if (!lg.ok()) return lg.status();
    absl::StatusOr<double> lh = AlgebraicConnectivity(h);
    if (!lh.ok()) return lh.status();
    absl::StatusOr<std::vector<AuditCase>> pair_cases =
        AuditDpPair(*lg, *lh, b, config.n, config.params,
                    config.samples_per_graph, config.bins,
                    root.Split(i + 1).NextU64());
    if (!pair_cases.ok()) return pair_cases.status();
    const std::string prefix = absl::StrFormat(
        "pair %d %s/%s (l2 %.6f/%.6f, b %.6f)", i, PairLabel(g), PairLabel(h),
        *lg, *lh, b);
    for (AuditCase& c : *pair_cases) {
      c.label = absl::StrCat(prefix, " ", c.label);
      report.Add(std::move(c));
    }
  }
  return report;
}

absl::StatusOr<AuditReport> AuditSensitivity(int n, int adjacency) {
  if (n < 2 || n > 6) {
    return absl::InvalidArgumentError(
        absl::StrCat("sensitivity audit needs 2 <= n <= 6, got ", n));
  }
  if (adjacency < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("adjacency must be >= 1, got ", adjacency));
  }
  const int num_pairs = n * (n - 1) / 2;
  const uint64_t num_graphs = uint64_t{1} << num_pairs;
  std::vector<double> lambda2(num_graphs);
  for (uint64_t mask = 0; mask < num_graphs; ++mask) {
    absl::StatusOr<double> l2 =
        AlgebraicConnectivity(Graph::FromPairMask(n, mask));
    if (!l2.ok()) return l2.status();
    lambda2[mask] = *l2;
  }
  // XOR masks with 1..A bits set.
  std::vector<uint64_t> flips;
  for (uint64_t d = 1; d < num_graphs; ++d) {
    if (std::popcount(d) <= adjacency) flips.push_back(d);
  }
  double worst = 0.0;
  uint64_t worst_g = 0;
  uint64_t worst_h = 0;
  int64_t compared = 0;
  for (uint64_t g = 0; g < num_graphs; ++g) {
    for (uint64_t d : flips) {
      const uint64_t h = g ^ d;
      if (h < g) continue;
      ++compared;
      const double diff = std::abs(lambda2[g] - lambda2[h]);
      if (diff > worst) {
        worst = diff;
        worst_g = g;
        worst_h = h;
      }
    }
  }
  AuditReport report;
  report.name = "sensitivity";
  report.trials = compared;
  report.Add(MakeCase(
      absl::StrFormat("n=%d A=%d max |dl2| between %s and %s", n, adjacency,
                      PairLabel(Graph::FromPairMask(n, worst_g)),
                      PairLabel(Graph::FromPairMask(n, worst_h))),
      worst, SensitivityBound(adjacency), 1e-9));
  return report;
}

absl::StatusOr<ConcentrationAudit> AuditConcentration(
    double lambda2, double b, double n, std::span<const double> t_grid,
    double a, int64_t trials, uint64_t seed) {
  if (trials < kMinConcentrationTrials) {
    return absl::InvalidArgumentError(absl::StrCat(
        "concentration audit needs at least ", kMinConcentrationTrials,
        " trials"));
  }
  absl::StatusOr<BoundedLaplace> law = BoundedLaplace::Create(lambda2, b, n);
  if (!law.ok()) return law.status();
  absl::StatusOr<std::vector<BoundCurvePoint>> curve =
      BoundCurve(t_grid, a, lambda2, b, n);
  if (!curve.ok()) return curve.status();

  ConcentrationAudit out;
  out.report.name = "concentration";
  out.report.trials = trials * static_cast<int64_t>(t_grid.size());
  const RandomStream root(seed);
  for (size_t i = 0; i < t_grid.size(); ++i) {
    const double t = t_grid[i];
    const double rate = TrueRate(lambda2, t);
    RandomStream rng = root.Split(i);
    int64_t exceed = 0;
    for (int64_t k = 0; k < trials; ++k) {
      if (std::abs(TrueRate(law->Sample(rng), t) - rate) >= a) ++exceed;
    }
    const double p = static_cast<double>(exceed) / trials;
    // One-count floor keeps the slack from vanishing when p is 0.
    const double var = std::max(p * (1.0 - p), 1.0 / trials);
    out.report.Add(MakeCase(absl::StrFormat("t=%.6g", t), p,
                            (*curve)[i].bound,
                            kSigmaMultiplier * std::sqrt(var / trials)));
  }
  out.curve = *std::move(curve);
  return out;
}

absl::StatusOr<AuditReport> AuditExpectations(double lambda2, double b,
                                              double n, int64_t trials,
                                              uint64_t seed, double t) {
  if (trials < 2) {
    return absl::InvalidArgumentError("expectation audit needs >= 2 trials");
  }
  absl::StatusOr<BoundedLaplace> law = BoundedLaplace::Create(lambda2, b, n);
  if (!law.ok()) return law.status();
  absl::StatusOr<double> mean = ExpectedLambda2(lambda2, b, n);
  if (!mean.ok()) return mean.status();
  absl::StatusOr<double> inv_sqrt = ExpectedInverseSqrtLambda2(lambda2, b, n);
  if (!inv_sqrt.ok()) return inv_sqrt.status();
  absl::StatusOr<double> rate_error = ExpectedRateError(t, lambda2, b, n);
  if (!rate_error.ok()) return rate_error.status();

  struct Moments {
    double sum = 0.0;
    double sum_sq = 0.0;
    void Push(double x) {
      sum += x;
      sum_sq += x * x;
    }
  };
  Moments m_x, m_inv, m_err;
  RandomStream rng = RandomStream(seed).Split(0);
  const double rate = TrueRate(lambda2, t);
  for (int64_t k = 0; k < trials; ++k) {
    const double x = law->Sample(rng);
    m_x.Push(x);
    m_inv.Push(1.0 / std::sqrt(x));
    m_err.Push(std::abs(TrueRate(x, t) - rate));
  }

  AuditReport report;
  report.name = "expectations";
  report.trials = trials;
  auto add = [&](std::string label, const Moments& m, double closed) {
    const double nn = static_cast<double>(trials);
    const double avg = m.sum / nn;
    const double var = std::max(0.0, (m.sum_sq - nn * avg * avg) / (nn - 1));
    const double se = std::sqrt(var / nn);
    // Two-sided: |mean - closed form| against 3 standard errors.
    report.Add(MakeCase(absl::StrFormat("%s (closed form %.10g, MC %.10g)",
                                        label, closed, avg),
                        std::abs(avg - closed), 0.0, kSigmaMultiplier * se));
  };
  add("E[l2~]", m_x, *mean);
  add("E[1/sqrt(l2~)]", m_inv, *inv_sqrt);
  add(absl::StrFormat("E|r~-r| at t=%g", t), m_err, *rate_error);
  return report;
}

}  // namespace privconn
