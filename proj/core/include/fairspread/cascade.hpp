#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fairspread/distances.hpp"
#include "fairspread/graph.hpp"

namespace fairspread {

enum class CascadeKind { Rmpp, Mip, Ic };

struct CascadeModel {
  CascadeKind kind = CascadeKind::Rmpp;
  std::int32_t ic_samples = 10000;  // IC only
};

/// Per-node probability of receiving content; 0 at source nodes (the metric
/// is defined over V \ V_s) and 0 for unreachable nodes.
using SpreadVector = std::vector<double>;

struct FairnessReport {
  std::vector<double> group_avgs;
  double disparity = 0.0;       // max pairwise ratio - 1; +inf when one group gets nothing
  bool infinite_disparity = false;
  double total_spread = 0.0;
  std::optional<double> lift_pct;  // vs baseline spread, when supplied
};

// RMPP spread: F(v) = p^d with d = min(baseline(v), best improvement over
// the chosen edges). A path may use at most one chosen edge, so improvements
// never compound. Throws if a chosen edge is not part of the index.
SpreadVector spread_rmpp(const NetworkInstance& instance, const CandidateDistanceIndex& index,
                         std::span<const CandidateEdge> chosen);

// MIP spread: F(v) = p^(hop distance in the graph augmented with all chosen
// edges); paths may use any number of chosen edges.
SpreadVector spread_mip(const NetworkInstance& instance, std::span<const CandidateEdge> chosen);
// Variant reusing a precomputed baseline distance map for the unaugmented graph.
SpreadVector spread_mip(const NetworkInstance& instance, const DistanceMap& baseline,
                        std::span<const CandidateEdge> chosen);

// Monte-Carlo IC estimate via live-edge reachability: each sample keeps every
// arc independently with probability p and measures reachability from the
// sources. Deterministic given the seed.
SpreadVector spread_ic(const NetworkInstance& instance, std::span<const CandidateEdge> chosen,
                       std::int32_t samples, std::uint64_t seed);

// Group means over non-source members, disparity, total spread and lift.
// Throws when some group has no non-source member, or when a baseline with
// zero total spread is supplied for lift.
FairnessReport fairness_report(const NetworkInstance& instance, const SpreadVector& spread,
                               const SpreadVector* baseline_spread = nullptr);

// Selection-time disparity: +inf whenever any group average is zero (never
// NaN), otherwise max pairwise ratio - 1.
double selection_disparity(const NetworkInstance& instance, const SpreadVector& spread);

double total_spread(const NetworkInstance& instance, const SpreadVector& spread);

SpreadVector spread_for_model(const NetworkInstance& instance, const CandidateDistanceIndex& index,
                              std::span<const CandidateEdge> chosen, const CascadeModel& model,
                              std::uint64_t seed);

}  // namespace fairspread
