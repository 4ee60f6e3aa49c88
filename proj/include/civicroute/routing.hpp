#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "civicroute/network.hpp"

namespace civicroute {

enum class CostKind {
  TravelTime,         // base_time_s
  WearProportional,   // j * q(s): the wear formula as written, favors worn roads
  WearInverse,        // j / q(s): favors fresh roads, distributes wear
  PollutionExposure,  // per-traversal exposure of the segment
  WeightedSum,
};

const char* to_string(CostKind kind);

// Pluggable edge-cost composition: the routing policy under which routes are
// selected. Every component cost is non-negative on a valid network, which
// the label-setting search relies on.
struct EdgeCostModel {
  CostKind kind = CostKind::TravelTime;
  // WeightedSum only: (component, weight) terms in declaration order.
  // Zero-weight terms are skipped during evaluation.
  std::vector<std::pair<CostKind, double>> weights;

  static EdgeCostModel travel_time() { return {CostKind::TravelTime, {}}; }
  static EdgeCostModel wear_proportional() { return {CostKind::WearProportional, {}}; }
  static EdgeCostModel wear_inverse() { return {CostKind::WearInverse, {}}; }
  static EdgeCostModel pollution_exposure() { return {CostKind::PollutionExposure, {}}; }
  static EdgeCostModel weighted_sum(std::vector<std::pair<CostKind, double>> weights) {
    return {CostKind::WeightedSum, std::move(weights)};
  }

  friend bool operator==(const EdgeCostModel&, const EdgeCostModel&) = default;
};

// Throws ConfigError unless weights are non-negative and finite, at least
// one is positive, components are not themselves WeightedSum, and
// non-composite kinds carry no weights.
void validate_cost_model(const EdgeCostModel& model);

// Read-only evaluation context for edge costs. `segment_exposure` maps
// segment id to the pollution exposure of one traversal; required by
// PollutionExposure components and for Route exposure caching. The pointee
// must outlive any ReachTree built from this context.
struct CostContext {
  WearParams wear;
  const std::vector<double>* segment_exposure = nullptr;
};

double edge_cost(const EdgeCostModel& model, const Segment& segment, const CostContext& context);

struct Route {
  std::vector<SegmentId> segments;
  NodeId origin = 0;
  NodeId destination = 0;
  // Cached at selection time against the qualities the router saw.
  double travel_time_s = 0.0;
  double wear_cost = 0.0;
  double pollution_exposure = 0.0;
};

// One backward Dijkstra pass from a destination; afterwards yields the
// minimum-cost route from any origin. Among equal-cost routes the returned
// segment-id sequence is the lexicographically smallest. Holds references to
// the network and context; qualities must not change while it is in use.
class ReachTree {
 public:
  ReachTree(const RoadNetwork& network, NodeId destination, const EdgeCostModel& model,
            const CostContext& context);

  NodeId destination() const { return destination_; }
  bool reachable(NodeId origin) const;
  // Minimum total edge cost origin -> destination; +inf if unreachable.
  double cost_from(NodeId origin) const;
  // Throws RoutingError if the destination is unreachable from origin.
  Route route_from(NodeId origin) const;

 private:
  const RoadNetwork* network_;
  EdgeCostModel model_;
  CostContext context_;
  NodeId destination_;
  std::vector<double> dist_;
};

// Minimum-cost route under the model with the deterministic tie-break.
Route shortest_route(const RoadNetwork& network, NodeId origin, NodeId destination,
                     const EdgeCostModel& model, const CostContext& context);

// Time of the given route: sum of base_time_s over its segments. This is the
// time of whatever route the active policy chose, not the time-optimal time.
double route_travel_time(const RoadNetwork& network, const Route& route);

}  // namespace civicroute
