#pragma once

#include <cstdint>
#include <vector>

#include "civicroute/metrics.hpp"
#include "civicroute/network.hpp"
#include "civicroute/rng.hpp"
#include "civicroute/routing.hpp"
#include "civicroute/spatial.hpp"

namespace civicroute {

enum class OriginSource { HousingDistribution, UniformNodes };
enum class DestinationSource { UniformNodes, GoodFood, BadFood, MixedFood };

const char* to_string(OriginSource source);
const char* to_string(DestinationSource source);

struct TripDemand {
  OriginSource origin = OriginSource::HousingDistribution;
  DestinationSource destination = DestinationSource::UniformNodes;
  double p_good = 0.5;  // MixedFood only, in [0, 1]
  std::uint32_t trips_per_epoch = 100;

  friend bool operator==(const TripDemand&, const TripDemand&) = default;
};

void validate_demand(const TripDemand& demand);

// Everything one simulation run consumes. The network is owned by value and
// mutated (qualities, counters) as the run progresses.
struct SimInputs {
  RoadNetwork network;
  SpatialDistribution housing;
  SpatialDistribution good_food;
  SpatialDistribution bad_food;
  SpatialDistribution population;
  EdgeCostModel policy;
  WearParams wear;
  FoodDesertParams food;
  PollutionParams pollution;
  TripDemand demand;
  std::uint32_t epochs = 50;
  std::uint64_t seed = 0;
};

// Epoch-based loop: per trip, draw an origin/destination pair from the
// (seed, epoch, trip) substream, route it under the policy, apply wear
// segment by segment, and accumulate exposure and wear cost as cached at
// route-selection time. Trips are sequential, so trip i's wear shapes trip
// i+1's routing. Strictly single-writer; distinct runs are independent.
class Simulation {
 public:
  explicit Simulation(SimInputs inputs);

  MetricReport run_epoch();
  // Runs the configured number of epochs from the current state.
  std::vector<MetricReport> run();

  const RoadNetwork& network() const { return in_.network; }
  const SimInputs& inputs() const { return in_; }
  std::uint32_t epoch() const { return epoch_; }
  CostContext cost_context() const { return {in_.wear, &segment_exposure_}; }

 private:
  NodeId draw_origin(RngStream& stream) const;
  NodeId draw_destination(RngStream& stream) const;
  NodeId draw_weighted_node(RngStream& stream, const std::vector<double>& cumulative,
                            const std::vector<NodeId>& nodes) const;

  SimInputs in_;
  std::vector<double> segment_exposure_;
  // Snapped node and cumulative-weight tables per distribution, fixed at
  // construction.
  std::vector<NodeId> housing_nodes_, good_nodes_, bad_nodes_;
  std::vector<double> housing_cum_, good_cum_, bad_cum_;
  std::uint32_t epoch_ = 0;
};

// Convenience wrapper: run the whole scenario and collect one report per
// epoch.
std::vector<MetricReport> run(SimInputs inputs);

}  // namespace civicroute
