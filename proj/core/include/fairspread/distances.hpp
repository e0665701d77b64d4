#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fairspread/graph.hpp"

namespace fairspread {

/// Hop distance from the nearest source per node; kUnreachable when none.
struct DistanceMap {
  std::vector<std::int32_t> d;

  std::int32_t at(NodeId v) const { return d[static_cast<std::size_t>(v)]; }
  std::size_t size() const { return d.size(); }
};

/// Sparse map node -> strictly improved distance, sorted by node id.
class DiffMap {
 public:
  DiffMap() = default;
  explicit DiffMap(std::vector<std::pair<NodeId, std::int32_t>> entries);

  // kUnreachable when the node is not in the diff.
  std::int32_t improved(NodeId v) const;
  bool contains(NodeId v) const { return improved(v) != kUnreachable; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<std::pair<NodeId, std::int32_t>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<NodeId, std::int32_t>> entries_;
};

// Multi-source BFS hop distances. Throws std::invalid_argument on an empty
// source set ("no content nodes") or invalid ids.
DistanceMap multi_source_shortest_distances(const Graph& graph, std::span<const NodeId> sources);

// Distance-bucketed search over the baseline: seeds are processed in
// nondecreasing distance order, a node enters the diff only when the proposed
// distance beats both the baseline and any earlier diff entry, and neighbors
// are enqueued one hop further. Seed distances must be >= 1.
DiffMap distance_diff(const Graph& graph, const DistanceMap& baseline,
                      std::span<const std::pair<NodeId, std::int32_t>> seeds);

// Diff caused by adding one candidate edge: seeded with (to, d(from)+1), and
// for undirected graphs also (from, d(to)+1). Seeds from unreachable
// endpoints are dropped; the result may be empty.
DiffMap edge_delta_single(const Graph& graph, const DistanceMap& baseline,
                          const CandidateEdge& edge);

// Joint diff of adding a whole edge set; equals a full BFS on
// G(V, E + edges) minus the baseline, restricted to improved nodes. Unlike
// the single-edge case the search also traverses the added edges, so chained
// improvements through several new edges are found.
DiffMap edge_delta_multiple(const Graph& graph, const DistanceMap& baseline,
                            std::span<const CandidateEdge> edges);

/// Baseline distances plus, per candidate edge, the set of nodes it brings
/// closer to a source and their improved distances.
struct CandidateDistanceIndex {
  DistanceMap baseline;
  std::vector<CandidateEdge> candidates;
  std::vector<DiffMap> per_edge;  // parallel to candidates
  // Per node: min(baseline, best single-edge improvement).
  std::vector<std::int32_t> best_distance;
  // Max over non-source nodes of best_distance, over nodes where it is
  // finite; 0 when no non-source node is reachable even with one edge.
  std::int32_t r_m = 0;
};

CandidateDistanceIndex candidate_distance_index(const Graph& graph,
                                                std::span<const NodeId> sources,
                                                std::vector<CandidateEdge> candidates);

}  // namespace fairspread
