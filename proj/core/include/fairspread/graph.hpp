#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace fairspread {

using NodeId = std::int32_t;

// Hop distance sentinel for unreachable nodes.
inline constexpr std::int32_t kUnreachable = std::numeric_limits<std::int32_t>::max();

inline constexpr bool reachable(std::int32_t d) { return d != kUnreachable; }

/// Simple graph over dense node ids 0..n-1. Undirected graphs store each edge
/// in both adjacency lists; neighbor lists are kept sorted.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on out-of-range ids, self-loops, or
  // duplicate edges (duplicate up to orientation when undirected).
  static Graph from_edges(NodeId num_nodes, bool directed,
                          std::span<const std::pair<NodeId, NodeId>> edges);

  NodeId num_nodes() const { return static_cast<NodeId>(adj_.size()); }
  std::int64_t num_edges() const { return edge_count_; }
  bool directed() const { return directed_; }

  std::span<const NodeId> out_neighbors(NodeId u) const {
    return {adj_[static_cast<std::size_t>(u)].data(), adj_[static_cast<std::size_t>(u)].size()};
  }

  // Directed: arc u->v exists. Undirected: edge {u,v} exists.
  bool has_edge(NodeId u, NodeId v) const;

  bool valid_node(NodeId v) const { return v >= 0 && v < num_nodes(); }

 private:
  bool directed_ = true;
  std::vector<std::vector<NodeId>> adj_;
  std::int64_t edge_count_ = 0;
};

struct CandidateEdge {
  NodeId from = 0;
  NodeId to = 0;
  std::int32_t index = 0;  // position in the candidate list

  friend bool operator==(const CandidateEdge&, const CandidateEdge&) = default;
};

/// A network plus the metadata the solvers need: per-node demographic group,
/// content source set, activation probability and suggestion budget.
struct NetworkInstance {
  Graph graph;
  std::vector<std::int32_t> groups;  // per node, 0..num_groups-1
  std::int32_t num_groups = 0;
  std::vector<NodeId> sources;  // sorted, unique
  std::vector<char> source_mask;
  double p = 0.5;     // edge activation probability, in (0, 1]
  std::int32_t k = 0;  // per-node suggestion budget

  bool is_source(NodeId v) const { return source_mask[static_cast<std::size_t>(v)] != 0; }
};

// Validates and normalizes: group labels must cover 0..c-1 with every group
// non-empty, sources must be valid node ids (deduplicated here), p in (0,1],
// k >= 0. Throws std::invalid_argument on violations.
NetworkInstance make_network_instance(Graph graph, std::vector<std::int32_t> groups,
                                      std::vector<NodeId> sources, double p, std::int32_t k);

// Candidate edges must not exist in the graph, must not repeat (up to
// orientation when undirected), and index fields must match positions.
void validate_candidates(const Graph& graph, std::span<const CandidateEdge> candidates);

// Renumbers candidate indices to match their positions.
std::vector<CandidateEdge> reindex_candidates(std::vector<std::pair<NodeId, NodeId>> pairs);

}  // namespace fairspread
