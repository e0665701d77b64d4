#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fairspread/cascade.hpp"
#include "fairspread/distances.hpp"
#include "fairspread/graph.hpp"

namespace fairspread {

struct RoundingConfig {
  std::int32_t iter_m = 200;  // independent roundings per solve
  double eps_tol = 0.01;      // keep roundings with disparity within this of the best
  CascadeModel eval_model{CascadeKind::Rmpp};
  std::uint64_t seed = 0;
};

struct SuggestionResult {
  std::vector<CandidateEdge> chosen;  // E_p
  double disparity = 0.0;             // ratio minus one; +inf possible
  double total_spread = 0.0;
  double lift_pct = 0.0;  // vs the empty selection under the evaluation model
  std::string algorithm;
  std::uint64_t seed = 0;
  std::int32_t rounds_evaluated = 0;
  bool feasible = true;  // false when the LP had no solution (hard mode)
};

// One randomized rounding: edge j is included iff a uniform draw from the
// (seed, j) substream is below y_star[j]. Independent of evaluation order.
std::vector<CandidateEdge> round_once(std::span<const double> y_star,
                                      std::span<const CandidateEdge> candidates,
                                      std::uint64_t seed);

// Runs iter_m roundings, evaluates disparity and spread under the configured
// cascade model, keeps those within eps_tol of the smallest disparity seen
// and returns the one with maximum spread (ties: smaller disparity, then
// earlier iteration). Deterministic given the seed.
SuggestionResult round_select(std::span<const double> y_star, const NetworkInstance& instance,
                              const CandidateDistanceIndex& index, const RoundingConfig& config);

}  // namespace fairspread
