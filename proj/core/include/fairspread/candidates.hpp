#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairspread/graph.hpp"

namespace fairspread {

enum class CandidateMethod { Fof, Igc, Explicit };

struct CandidateSpec {
  CandidateMethod method = CandidateMethod::Fof;
  std::optional<std::int32_t> max_per_node;  // optional cap, applied per from-node
  std::string explicit_path;                 // Explicit only
};

// Friend-of-friend candidates: all pairs (u, w) at exactly two hops with no
// direct edge. Directed graphs follow out-edges twice; undirected pairs are
// emitted once with from < to. Output is lexicographic by (from, to).
std::vector<CandidateEdge> fof_candidates(const Graph& graph);

// Implicit-neighborhood candidates: every closed neighborhood N[u] acts as a
// grouping; a non-neighbor w of v is rated by how many of v's friends share
// at least one neighborhood with w, and the top third of rated nodes (count
// rounded up) become candidates for v. Ties prefer the lower node id.
std::vector<CandidateEdge> igc_candidates(const Graph& graph);

std::vector<CandidateEdge> generate_candidates(const Graph& graph, const CandidateSpec& spec);

}  // namespace fairspread
