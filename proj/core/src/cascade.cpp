#include "fairspread/cascade.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "fairspread/rng.hpp"

namespace fairspread {

namespace {

double hop_probability(double p, std::int32_t d) {
  if (!reachable(d)) return 0.0;
  return std::pow(p, static_cast<double>(d));
}

SpreadVector spread_from_distances(const NetworkInstance& instance,
                                   const std::vector<std::int32_t>& dist) {
  const NodeId n = instance.graph.num_nodes();
  SpreadVector f(static_cast<std::size_t>(n), 0.0);
  for (NodeId v = 0; v < n; ++v) {
    if (instance.is_source(v)) continue;
    f[static_cast<std::size_t>(v)] = hop_probability(instance.p, dist[static_cast<std::size_t>(v)]);
  }
  return f;
}

}  // namespace

SpreadVector spread_rmpp(const NetworkInstance& instance, const CandidateDistanceIndex& index,
                         std::span<const CandidateEdge> chosen) {
  std::vector<std::int32_t> dist = index.baseline.d;
  for (const auto& e : chosen) {
    if (e.index < 0 || e.index >= static_cast<std::int32_t>(index.candidates.size()) ||
        !(index.candidates[static_cast<std::size_t>(e.index)] == e))
      throw std::invalid_argument("chosen edge not in candidate index");
    for (const auto& [node, d] : index.per_edge[static_cast<std::size_t>(e.index)]) {
      auto& cur = dist[static_cast<std::size_t>(node)];
      cur = std::min(cur, d);
    }
  }
  return spread_from_distances(instance, dist);
}

SpreadVector spread_mip(const NetworkInstance& instance, const DistanceMap& baseline,
                        std::span<const CandidateEdge> chosen) {
  std::vector<std::int32_t> dist = baseline.d;
  DiffMap diff = edge_delta_multiple(instance.graph, baseline, chosen);
  for (const auto& [node, d] : diff) dist[static_cast<std::size_t>(node)] = d;
  return spread_from_distances(instance, dist);
}

SpreadVector spread_mip(const NetworkInstance& instance, std::span<const CandidateEdge> chosen) {
  DistanceMap baseline = multi_source_shortest_distances(instance.graph, instance.sources);
  return spread_mip(instance, baseline, chosen);
}

SpreadVector spread_ic(const NetworkInstance& instance, std::span<const CandidateEdge> chosen,
                       std::int32_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("ic: samples must be >= 1");
  const NodeId n = instance.graph.num_nodes();
  const bool undirected = !instance.graph.directed();

  std::unordered_map<NodeId, std::vector<NodeId>> extra;
  for (const auto& e : chosen) {
    extra[e.from].push_back(e.to);
    if (undirected) extra[e.to].push_back(e.from);
  }

  std::vector<std::int64_t> hits(static_cast<std::size_t>(n), 0);
  std::vector<char> active(static_cast<std::size_t>(n), 0);
  std::deque<NodeId> queue;

  for (std::int32_t s = 0; s < samples; ++s) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(s));
    std::fill(active.begin(), active.end(), 0);
    queue.clear();
    for (NodeId src : instance.sources) {
      active[static_cast<std::size_t>(src)] = 1;
      queue.push_back(src);
    }
    // Arc liveness is decided lazily the first time its tail activates, which
    // draws each arc's coin at most once per sample.
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      auto try_arc = [&](NodeId v) {
        bool live = rng.next_unit() < instance.p;
        if (live && !active[static_cast<std::size_t>(v)]) {
          active[static_cast<std::size_t>(v)] = 1;
          queue.push_back(v);
        }
      };
      for (NodeId v : instance.graph.out_neighbors(u)) try_arc(v);
      if (auto it = extra.find(u); it != extra.end())
        for (NodeId v : it->second) try_arc(v);
    }
    for (NodeId v = 0; v < n; ++v)
      if (active[static_cast<std::size_t>(v)]) ++hits[static_cast<std::size_t>(v)];
  }

  SpreadVector f(static_cast<std::size_t>(n), 0.0);
  for (NodeId v = 0; v < n; ++v) {
    if (instance.is_source(v)) continue;
    f[static_cast<std::size_t>(v)] =
        static_cast<double>(hits[static_cast<std::size_t>(v)]) / static_cast<double>(samples);
  }
  return f;
}

double total_spread(const NetworkInstance& instance, const SpreadVector& spread) {
  double sum = 0.0;
  for (NodeId v = 0; v < instance.graph.num_nodes(); ++v)
    if (!instance.is_source(v)) sum += spread[static_cast<std::size_t>(v)];
  return sum;
}

namespace {

std::vector<double> group_averages(const NetworkInstance& instance, const SpreadVector& spread,
                                   bool require_members) {
  std::vector<double> sums(static_cast<std::size_t>(instance.num_groups), 0.0);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(instance.num_groups), 0);
  for (NodeId v = 0; v < instance.graph.num_nodes(); ++v) {
    if (instance.is_source(v)) continue;
    auto g = static_cast<std::size_t>(instance.groups[static_cast<std::size_t>(v)]);
    sums[g] += spread[static_cast<std::size_t>(v)];
    ++counts[g];
  }
  for (std::size_t g = 0; g < sums.size(); ++g) {
    if (counts[g] == 0) {
      if (require_members)
        throw std::invalid_argument("fairness: group " + std::to_string(g) +
                                    " has no non-source member");
      sums[g] = 0.0;
      continue;
    }
    sums[g] /= static_cast<double>(counts[g]);
  }
  return sums;
}

// Max over ordered group pairs of avg_a / avg_b, minus one.
double disparity_of(const std::vector<double>& avgs, bool* infinite) {
  double lo = avgs[0], hi = avgs[0];
  for (double a : avgs) {
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  if (infinite) *infinite = false;
  if (lo <= 0.0) {
    if (hi <= 0.0) return 0.0;  // all groups equally at zero
    if (infinite) *infinite = true;
    return std::numeric_limits<double>::infinity();
  }
  return hi / lo - 1.0;
}

}  // namespace

FairnessReport fairness_report(const NetworkInstance& instance, const SpreadVector& spread,
                               const SpreadVector* baseline_spread) {
  FairnessReport report;
  report.group_avgs = group_averages(instance, spread, /*require_members=*/true);
  report.disparity = disparity_of(report.group_avgs, &report.infinite_disparity);
  report.total_spread = total_spread(instance, spread);
  if (baseline_spread) {
    double base = total_spread(instance, *baseline_spread);
    if (base <= 0.0) throw std::invalid_argument("lift undefined: baseline spread is zero");
    report.lift_pct = 100.0 * (report.total_spread - base) / base;
  }
  return report;
}

double selection_disparity(const NetworkInstance& instance, const SpreadVector& spread) {
  std::vector<double> avgs = group_averages(instance, spread, /*require_members=*/false);
  double lo = avgs[0], hi = avgs[0];
  for (double a : avgs) {
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  if (lo <= 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo - 1.0;
}

SpreadVector spread_for_model(const NetworkInstance& instance, const CandidateDistanceIndex& index,
                              std::span<const CandidateEdge> chosen, const CascadeModel& model,
                              std::uint64_t seed) {
  switch (model.kind) {
    case CascadeKind::Rmpp:
      return spread_rmpp(instance, index, chosen);
    case CascadeKind::Mip:
      return spread_mip(instance, index.baseline, chosen);
    case CascadeKind::Ic:
      return spread_ic(instance, chosen, model.ic_samples, seed);
  }
  throw std::logic_error("unknown cascade model");
}

}  // namespace fairspread
