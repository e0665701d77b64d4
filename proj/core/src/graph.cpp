#include "fairspread/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace fairspread {

Graph Graph::from_edges(NodeId num_nodes, bool directed,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
  if (num_nodes < 0) throw std::invalid_argument("graph: negative node count");
  Graph g;
  g.directed_ = directed;
  g.adj_.assign(static_cast<std::size_t>(num_nodes), {});

  std::set<std::pair<NodeId, NodeId>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= num_nodes || v < 0 || v >= num_nodes)
      throw std::invalid_argument("graph: edge endpoint out of range: (" + std::to_string(u) +
                                  "," + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("graph: self-loop at node " + std::to_string(u));
    auto key = directed ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second)
      throw std::invalid_argument("graph: duplicate edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    if (!directed) g.adj_[static_cast<std::size_t>(v)].push_back(u);
    ++g.edge_count_;
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (!valid_node(u) || !valid_node(v)) return false;
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

NetworkInstance make_network_instance(Graph graph, std::vector<std::int32_t> groups,
                                      std::vector<NodeId> sources, double p, std::int32_t k) {
  const NodeId n = graph.num_nodes();
  if (static_cast<NodeId>(groups.size()) != n)
    throw std::invalid_argument("instance: group vector size mismatch");
  std::int32_t num_groups = 0;
  for (auto g : groups) {
    if (g < 0) throw std::invalid_argument("instance: negative group label");
    num_groups = std::max(num_groups, g + 1);
  }
  if (n > 0 && num_groups == 0) throw std::invalid_argument("instance: no groups");
  std::vector<std::int64_t> sizes(static_cast<std::size_t>(num_groups), 0);
  for (auto g : groups) ++sizes[static_cast<std::size_t>(g)];
  for (std::int32_t g = 0; g < num_groups; ++g)
    if (sizes[static_cast<std::size_t>(g)] == 0)
      throw std::invalid_argument("instance: empty group " + std::to_string(g));

  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  for (auto s : sources)
    if (!graph.valid_node(s))
      throw std::invalid_argument("instance: source id out of range: " + std::to_string(s));

  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("instance: p must be in (0,1]");
  if (k < 0) throw std::invalid_argument("instance: negative budget k");

  NetworkInstance inst;
  inst.source_mask.assign(static_cast<std::size_t>(n), 0);
  for (auto s : sources) inst.source_mask[static_cast<std::size_t>(s)] = 1;
  inst.graph = std::move(graph);
  inst.groups = std::move(groups);
  inst.num_groups = num_groups;
  inst.sources = std::move(sources);
  inst.p = p;
  inst.k = k;
  return inst;
}

void validate_candidates(const Graph& graph, std::span<const CandidateEdge> candidates) {
  std::set<std::pair<NodeId, NodeId>> seen;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    const auto& e = candidates[j];
    if (!graph.valid_node(e.from) || !graph.valid_node(e.to))
      throw std::invalid_argument("candidate edge endpoint out of range");
    if (e.from == e.to) throw std::invalid_argument("candidate edge is a self-loop");
    if (e.index != static_cast<std::int32_t>(j))
      throw std::invalid_argument("candidate edge index does not match position");
    if (graph.has_edge(e.from, e.to))
      throw std::invalid_argument("candidate edge already exists in the graph: (" +
                                  std::to_string(e.from) + "," + std::to_string(e.to) + ")");
    auto key = graph.directed() ? std::pair{e.from, e.to}
                                : std::pair{std::min(e.from, e.to), std::max(e.from, e.to)};
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate candidate edge (" + std::to_string(e.from) + "," +
                                  std::to_string(e.to) + ")");
  }
}

std::vector<CandidateEdge> reindex_candidates(std::vector<std::pair<NodeId, NodeId>> pairs) {
  std::vector<CandidateEdge> out;
  out.reserve(pairs.size());
  for (std::size_t j = 0; j < pairs.size(); ++j)
    out.push_back({pairs[j].first, pairs[j].second, static_cast<std::int32_t>(j)});
  return out;
}

}  // namespace fairspread
