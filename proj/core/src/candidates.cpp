#include "fairspread/candidates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fairspread {

namespace {

std::vector<CandidateEdge> finalize(const Graph& graph,
                                    std::vector<std::pair<NodeId, NodeId>> pairs,
                                    const std::optional<std::int32_t>& max_per_node) {
  if (!graph.directed())
    for (auto& [u, w] : pairs)
      if (u > w) std::swap(u, w);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  if (max_per_node) {
    std::vector<std::pair<NodeId, NodeId>> kept;
    std::vector<std::int32_t> used(static_cast<std::size_t>(graph.num_nodes()), 0);
    for (const auto& pr : pairs) {
      auto& count = used[static_cast<std::size_t>(pr.first)];
      if (count < *max_per_node) {
        ++count;
        kept.push_back(pr);
      }
    }
    pairs = std::move(kept);
  }
  return reindex_candidates(std::move(pairs));
}

}  // namespace

std::vector<CandidateEdge> fof_candidates(const Graph& graph) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::set<std::pair<NodeId, NodeId>> seen;
  for (NodeId u = 0; u < graph.num_nodes(); ++u) {
    for (NodeId x : graph.out_neighbors(u)) {
      for (NodeId w : graph.out_neighbors(x)) {
        if (w == u || graph.has_edge(u, w)) continue;
        auto key = graph.directed() ? std::pair{u, w}
                                    : std::pair{std::min(u, w), std::max(u, w)};
        if (seen.insert(key).second) pairs.push_back(key);
      }
    }
  }
  return finalize(graph, std::move(pairs), std::nullopt);
}

std::vector<CandidateEdge> igc_candidates(const Graph& graph) {
  const NodeId n = graph.num_nodes();

  // closed[u] = {u} + out-neighbors(u), sorted
  std::vector<std::vector<NodeId>> closed(static_cast<std::size_t>(n));
  for (NodeId u = 0; u < n; ++u) {
    auto nbrs = graph.out_neighbors(u);
    auto& c = closed[static_cast<std::size_t>(u)];
    c.assign(nbrs.begin(), nbrs.end());
    c.push_back(u);
    std::sort(c.begin(), c.end());
  }
  // membership[w] = neighborhoods containing w
  std::vector<std::vector<NodeId>> membership(static_cast<std::size_t>(n));
  for (NodeId u = 0; u < n; ++u)
    for (NodeId w : closed[static_cast<std::size_t>(u)])
      membership[static_cast<std::size_t>(w)].push_back(u);

  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::vector<char> shares(static_cast<std::size_t>(n), 0);
  std::vector<std::int32_t> rating(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> touched;

  for (NodeId v = 0; v < n; ++v) {
    auto friends = graph.out_neighbors(v);
    if (friends.empty()) continue;

    touched.clear();
    for (NodeId f : friends) {
      // Nodes sharing a neighborhood with friend f.
      for (NodeId u : membership[static_cast<std::size_t>(f)])
        for (NodeId w : closed[static_cast<std::size_t>(u)])
          shares[static_cast<std::size_t>(w)] = 1;
      for (NodeId w = 0; w < n; ++w) {
        if (!shares[static_cast<std::size_t>(w)]) continue;
        shares[static_cast<std::size_t>(w)] = 0;
        if (w == v || graph.has_edge(v, w)) continue;
        if (rating[static_cast<std::size_t>(w)] == 0) touched.push_back(w);
        ++rating[static_cast<std::size_t>(w)];
      }
    }
    if (!touched.empty()) {
      std::sort(touched.begin(), touched.end(), [&](NodeId a, NodeId b) {
        auto ra = rating[static_cast<std::size_t>(a)], rb = rating[static_cast<std::size_t>(b)];
        if (ra != rb) return ra > rb;
        return a < b;
      });
      std::size_t keep = (touched.size() + 2) / 3;  // ceil(rated / 3)
      for (std::size_t i = 0; i < keep; ++i) pairs.push_back({v, touched[i]});
      for (NodeId w : touched) rating[static_cast<std::size_t>(w)] = 0;
    }
  }
  return finalize(graph, std::move(pairs), std::nullopt);
}

std::vector<CandidateEdge> generate_candidates(const Graph& graph, const CandidateSpec& spec) {
  switch (spec.method) {
    case CandidateMethod::Fof: {
      auto out = fof_candidates(graph);
      if (spec.max_per_node) {
        std::vector<std::pair<NodeId, NodeId>> pairs;
        for (const auto& e : out) pairs.push_back({e.from, e.to});
        return finalize(graph, std::move(pairs), spec.max_per_node);
      }
      return out;
    }
    case CandidateMethod::Igc: {
      auto out = igc_candidates(graph);
      if (spec.max_per_node) {
        std::vector<std::pair<NodeId, NodeId>> pairs;
        for (const auto& e : out) pairs.push_back({e.from, e.to});
        return finalize(graph, std::move(pairs), spec.max_per_node);
      }
      return out;
    }
    case CandidateMethod::Explicit:
      throw std::invalid_argument("explicit candidates are loaded from a file by the harness");
  }
  throw std::logic_error("unknown candidate method");
}

}  // namespace fairspread
