#include "fairspread/distances.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace fairspread {

DiffMap::DiffMap(std::vector<std::pair<NodeId, std::int32_t>> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
}

std::int32_t DiffMap::improved(NodeId v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(),
                             std::pair{v, std::numeric_limits<std::int32_t>::min()});
  if (it != entries_.end() && it->first == v) return it->second;
  return kUnreachable;
}

DistanceMap multi_source_shortest_distances(const Graph& graph,
                                            std::span<const NodeId> sources) {
  if (sources.empty()) throw std::invalid_argument("no content nodes");
  DistanceMap dist;
  dist.d.assign(static_cast<std::size_t>(graph.num_nodes()), kUnreachable);
  std::deque<NodeId> queue;
  for (NodeId s : sources) {
    if (!graph.valid_node(s)) throw std::invalid_argument("source id out of range");
    if (dist.d[static_cast<std::size_t>(s)] != 0) {
      dist.d[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    std::int32_t du = dist.d[static_cast<std::size_t>(u)];
    for (NodeId v : graph.out_neighbors(u)) {
      if (dist.d[static_cast<std::size_t>(v)] == kUnreachable) {
        dist.d[static_cast<std::size_t>(v)] = du + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

namespace {

// Adjacency overlay for edges not present in the graph.
using ExtraAdj = std::unordered_map<NodeId, std::vector<NodeId>>;

// Core of the bucketed difference search. Buckets are keyed by distance;
// processing walks them in ascending order, so the first time a node is
// popped it carries its final (smallest) improved distance.
DiffMap run_diff(const Graph& graph, const DistanceMap& baseline,
                 std::span<const std::pair<NodeId, std::int32_t>> seeds,
                 const ExtraAdj* extra) {
  std::map<std::int32_t, std::vector<NodeId>> buckets;
  for (const auto& [node, d] : seeds) {
    if (!graph.valid_node(node)) throw std::invalid_argument("diff seed node out of range");
    if (d < 1) throw std::invalid_argument("diff seed distance must be >= 1");
    buckets[d].push_back(node);
  }

  std::unordered_map<NodeId, std::int32_t> diff;
  while (!buckets.empty()) {
    auto bucket = buckets.begin();
    const std::int32_t i = bucket->first;
    std::vector<NodeId> nodes = std::move(bucket->second);
    buckets.erase(bucket);
    for (std::size_t qi = 0; qi < nodes.size(); ++qi) {
      NodeId node = nodes[qi];
      if (diff.count(node) || baseline.at(node) <= i) continue;
      diff.emplace(node, i);
      auto push = [&](NodeId nbr) {
        // Worth enqueueing only if i+1 can still improve the neighbor.
        if (baseline.at(nbr) > i + 1 && !diff.count(nbr)) buckets[i + 1].push_back(nbr);
      };
      for (NodeId nbr : graph.out_neighbors(node)) push(nbr);
      if (extra) {
        auto it = extra->find(node);
        if (it != extra->end())
          for (NodeId nbr : it->second) push(nbr);
      }
    }
  }

  std::vector<std::pair<NodeId, std::int32_t>> entries(diff.begin(), diff.end());
  return DiffMap(std::move(entries));
}

void append_edge_seeds(const Graph& graph, const DistanceMap& baseline, const CandidateEdge& e,
                       std::vector<std::pair<NodeId, std::int32_t>>& seeds) {
  if (!graph.valid_node(e.from) || !graph.valid_node(e.to))
    throw std::invalid_argument("candidate edge endpoint out of range");
  // An edge whose tail is unreachable contributes nothing.
  if (reachable(baseline.at(e.from))) seeds.push_back({e.to, baseline.at(e.from) + 1});
  if (!graph.directed() && reachable(baseline.at(e.to)))
    seeds.push_back({e.from, baseline.at(e.to) + 1});
}

}  // namespace

DiffMap distance_diff(const Graph& graph, const DistanceMap& baseline,
                      std::span<const std::pair<NodeId, std::int32_t>> seeds) {
  return run_diff(graph, baseline, seeds, nullptr);
}

DiffMap edge_delta_single(const Graph& graph, const DistanceMap& baseline,
                          const CandidateEdge& edge) {
  std::vector<std::pair<NodeId, std::int32_t>> seeds;
  append_edge_seeds(graph, baseline, edge, seeds);
  return run_diff(graph, baseline, seeds, nullptr);
}

DiffMap edge_delta_multiple(const Graph& graph, const DistanceMap& baseline,
                            std::span<const CandidateEdge> edges) {
  std::vector<std::pair<NodeId, std::int32_t>> seeds;
  ExtraAdj extra;
  for (const auto& e : edges) {
    append_edge_seeds(graph, baseline, e, seeds);
    extra[e.from].push_back(e.to);
    if (!graph.directed()) extra[e.to].push_back(e.from);
  }
  return run_diff(graph, baseline, seeds, &extra);
}

CandidateDistanceIndex candidate_distance_index(const Graph& graph,
                                                std::span<const NodeId> sources,
                                                std::vector<CandidateEdge> candidates) {
  validate_candidates(graph, candidates);
  CandidateDistanceIndex index;
  index.baseline = multi_source_shortest_distances(graph, sources);
  index.candidates = std::move(candidates);
  index.per_edge.reserve(index.candidates.size());

  index.best_distance = index.baseline.d;
  for (const auto& e : index.candidates) {
    DiffMap diff = edge_delta_single(graph, index.baseline, e);
    for (const auto& [node, d] : diff) {
      auto& best = index.best_distance[static_cast<std::size_t>(node)];
      best = std::min(best, d);
    }
    index.per_edge.push_back(std::move(diff));
  }

  std::vector<char> is_source(static_cast<std::size_t>(graph.num_nodes()), 0);
  for (NodeId s : sources) is_source[static_cast<std::size_t>(s)] = 1;
  index.r_m = 0;
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    if (is_source[static_cast<std::size_t>(v)]) continue;
    std::int32_t best = index.best_distance[static_cast<std::size_t>(v)];
    if (reachable(best)) index.r_m = std::max(index.r_m, best);
  }
  return index;
}

}  // namespace fairspread
