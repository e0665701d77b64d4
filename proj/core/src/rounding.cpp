#include "fairspread/rounding.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fairspread/rng.hpp"

namespace fairspread {

std::vector<CandidateEdge> round_once(std::span<const double> y_star,
                                      std::span<const CandidateEdge> candidates,
                                      std::uint64_t seed) {
  if (y_star.size() != candidates.size())
    throw std::invalid_argument("round_once: y* size does not match candidate list");
  std::vector<CandidateEdge> chosen;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    double y = y_star[j];
    if (y <= 0.0) continue;
    double u = Rng::substream(seed, static_cast<std::uint64_t>(j)).next_unit();
    if (u < y) chosen.push_back(candidates[j]);
  }
  return chosen;
}

SuggestionResult round_select(std::span<const double> y_star, const NetworkInstance& instance,
                              const CandidateDistanceIndex& index, const RoundingConfig& config) {
  if (config.iter_m < 1) throw std::invalid_argument("round_select: iter_m must be >= 1");
  if (y_star.size() != index.candidates.size())
    throw std::invalid_argument("round_select: y* size does not match index");

  const SpreadVector baseline =
      spread_for_model(instance, index, {}, config.eval_model, Rng::substream(config.seed, ~0ull).next_u64());
  const double baseline_total = total_spread(instance, baseline);

  struct Outcome {
    double disparity;
    double spread;
    std::int32_t iteration;
  };
  std::vector<Outcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(config.iter_m));
  std::vector<std::vector<CandidateEdge>> selections;
  selections.reserve(static_cast<std::size_t>(config.iter_m));

  double best_disparity = std::numeric_limits<double>::infinity();
  for (std::int32_t it = 0; it < config.iter_m; ++it) {
    std::uint64_t iter_seed = mix_seed(config.seed, static_cast<std::uint64_t>(it));
    std::vector<CandidateEdge> chosen = round_once(y_star, index.candidates, iter_seed);
    SpreadVector spread = spread_for_model(instance, index, chosen, config.eval_model, iter_seed);
    double disparity = selection_disparity(instance, spread);
    double cs = total_spread(instance, spread);
    best_disparity = std::min(best_disparity, disparity);
    outcomes.push_back({disparity, cs, it});
    selections.push_back(std::move(chosen));
  }

  // Keep roundings whose disparity is within eps_tol of the most fair one,
  // then pick the highest spread among them.
  std::int32_t best = -1;
  for (const auto& o : outcomes) {
    if (!(o.disparity <= best_disparity + config.eps_tol ||
          (std::isinf(o.disparity) && std::isinf(best_disparity))))
      continue;
    if (best < 0) {
      best = o.iteration;
      continue;
    }
    const auto& b = outcomes[static_cast<std::size_t>(best)];
    if (o.spread > b.spread || (o.spread == b.spread && o.disparity < b.disparity)) best = o.iteration;
  }

  const auto& win = outcomes[static_cast<std::size_t>(best)];
  SuggestionResult result;
  result.chosen = std::move(selections[static_cast<std::size_t>(best)]);
  result.disparity = win.disparity;
  result.total_spread = win.spread;
  result.lift_pct =
      baseline_total > 0.0 ? 100.0 * (win.spread - baseline_total) / baseline_total : 0.0;
  result.seed = config.seed;
  result.rounds_evaluated = config.iter_m;
  return result;
}

}  // namespace fairspread
