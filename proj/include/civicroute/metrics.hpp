#pragma once

#include <cstdint>
#include <vector>

#include "civicroute/network.hpp"
#include "civicroute/routing.hpp"
#include "civicroute/spatial.hpp"

namespace civicroute {

// Two readings of the consumer-choice condition, which genuinely differ:
//   ProseNearest    1  iff  min_G t(h,fG) - min_B t(h,fB) < k
//   FormulaPairMin  1  iff  min over (fG,fB) pairs of [t(h,fG) - t(h,fB)] < k,
//                   which equals min_G t(h,fG) - max_B t(h,fB) < k.
// ProseNearest compares against the easiest bad option and is the default;
// FormulaPairMin rewards the farthest bad option. Both ship so the
// divergence is observable.
enum class FoodSemantics { ProseNearest, FormulaPairMin };

const char* to_string(FoodSemantics semantics);

struct FoodDesertParams {
  double threshold_k_s = 60.0;  // > 0, seconds
  FoodSemantics semantics = FoodSemantics::ProseNearest;

  friend bool operator==(const FoodDesertParams&, const FoodDesertParams&) = default;
};

void validate_food_params(const FoodDesertParams& params);

struct PollutionParams {
  double min_distance_m = 1.0;     // > 0, clamps the inverse-square singularity
  double sample_spacing_m = 10.0;  // > 0, route integration resolution

  friend bool operator==(const PollutionParams&, const PollutionParams&) = default;
};

void validate_pollution_params(const PollutionParams& params);

// Per-epoch report row. Totals cover that epoch's trips; segment_traversals
// is the cumulative counter snapshot at epoch end. eta is evaluated against
// the live (worn) qualities at report time.
struct MetricReport {
  std::uint32_t epoch = 0;
  double eta = 0.0;
  double total_wear_cost = 0.0;
  std::uint64_t repair_count = 0;
  double total_pollution_exposure = 0.0;
  double mean_travel_time_s = 0.0;
  std::vector<std::uint64_t> segment_traversals;
};

// 1 if a consumer at h would pick a high-quality food option under the
// policy, else 0. Travel times are those of the routes the policy itself
// chooses between snapped nodes.
int consumer_choice(const RoadNetwork& network, const EdgeCostModel& policy, const CostContext& context,
                    Vec2 h, const SpatialDistribution& good, const SpatialDistribution& bad,
                    const FoodDesertParams& params);

// Exact weighted expectation of consumer_choice over the housing points.
double eta(const RoadNetwork& network, const EdgeCostModel& policy, const CostContext& context,
           const SpatialDistribution& housing, const SpatialDistribution& good,
           const SpatialDistribution& bad, const FoodDesertParams& params);

// Inverse-square pollution impact of a vehicle at v on the population:
// exact expectation of max(|p - v|, min_distance)^-2.
double pollution_at(Vec2 v, const SpatialDistribution& population, const PollutionParams& params);

// Exposure accumulated over one traversal of the segment: trapezoidal
// integration of pollution_at along the straight-line geometry, sampled
// every sample_spacing_m (endpoints inclusive), with dwell time prorated by
// arc length.
double segment_pollution_exposure(const RoadNetwork& network, const Segment& segment,
                                  const SpatialDistribution& population, const PollutionParams& params);

// Per-traversal exposure for every segment; index is segment id. Population
// and geometry are static per scenario, so this is computed once per run.
std::vector<double> segment_pollution_exposures(const RoadNetwork& network,
                                                const SpatialDistribution& population,
                                                const PollutionParams& params);

double route_pollution_exposure(const RoadNetwork& network, const Route& route,
                                const SpatialDistribution& population, const PollutionParams& params);

// Wear navigation cost of the route: sum of j * q(s) at current qualities.
double kappa(const RoadNetwork& network, const Route& route, const WearParams& params);

}  // namespace civicroute
