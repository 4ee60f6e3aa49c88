#include "civicroute/routing.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <utility>

#include "civicroute/errors.hpp"

namespace civicroute {

const char* to_string(CostKind kind) {
  switch (kind) {
    case CostKind::TravelTime: return "travel_time";
    case CostKind::WearProportional: return "wear_proportional";
    case CostKind::WearInverse: return "wear_inverse";
    case CostKind::PollutionExposure: return "pollution";
    case CostKind::WeightedSum: return "weighted_sum";
  }
  return "unknown";
}

void validate_cost_model(const EdgeCostModel& model) {
  if (model.kind != CostKind::WeightedSum) {
    if (!model.weights.empty()) {
      throw ConfigError("policy weights are only valid for weighted_sum");
    }
    return;
  }
  if (model.weights.empty()) {
    throw ConfigError("weighted_sum policy needs at least one weight");
  }
  bool any_positive = false;
  for (const auto& [kind, w] : model.weights) {
    if (kind == CostKind::WeightedSum) {
      throw ConfigError("weighted_sum components cannot themselves be weighted_sum");
    }
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ConfigError(std::string("weight for ") + to_string(kind) + " must be a non-negative number");
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) {
    throw ConfigError("weighted_sum policy needs at least one positive weight");
  }
}

double edge_cost(const EdgeCostModel& model, const Segment& segment, const CostContext& context) {
  double cost = 0.0;
  switch (model.kind) {
    case CostKind::TravelTime:
      cost = segment.base_time_s;
      break;
    case CostKind::WearProportional:
      cost = context.wear.wear_coefficient_j * segment.quality;
      break;
    case CostKind::WearInverse:
      cost = context.wear.wear_coefficient_j / segment.quality;
      break;
    case CostKind::PollutionExposure:
      if (context.segment_exposure == nullptr) {
        throw ConfigError("pollution edge costs need a population exposure context");
      }
      if (segment.id >= context.segment_exposure->size()) {
        throw InternalError("exposure table does not cover segment " + std::to_string(segment.id));
      }
      cost = (*context.segment_exposure)[segment.id];
      break;
    case CostKind::WeightedSum:
      for (const auto& [kind, w] : model.weights) {
        if (w == 0.0) {
          continue;  // zero-weight elimination: unused components need no context
        }
        if (kind == CostKind::WeightedSum) {
          throw ConfigError("weighted_sum components cannot themselves be weighted_sum");
        }
        cost += w * edge_cost(EdgeCostModel{kind, {}}, segment, context);
      }
      break;
  }
  if (!(cost >= 0.0) || !std::isfinite(cost)) {
    throw InternalError("edge cost for segment " + std::to_string(segment.id) +
                        " is negative or non-finite");
  }
  return cost;
}

ReachTree::ReachTree(const RoadNetwork& network, NodeId destination, const EdgeCostModel& model,
                     const CostContext& context)
    : network_(&network), model_(model), context_(context), destination_(destination) {
  const std::size_t n = network.nodes().size();
  if (destination >= n) {
    throw ConfigError("unknown node id " + std::to_string(destination));
  }
  dist_.assign(n, std::numeric_limits<double>::infinity());
  dist_[destination] = 0.0;

  // Label-setting search over the reverse graph; requires the non-negative
  // edge costs the model invariants guarantee.
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.push({0.0, destination});
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d != dist_[u]) {
      continue;  // stale entry
    }
    for (SegmentId sid : network.incoming(u)) {
      const Segment& s = network.segment(sid);
      const double candidate = edge_cost(model_, s, context_) + dist_[u];
      if (candidate < dist_[s.from]) {
        dist_[s.from] = candidate;
        queue.push({candidate, s.from});
      }
    }
  }
}

bool ReachTree::reachable(NodeId origin) const {
  return origin < dist_.size() && std::isfinite(dist_[origin]);
}

double ReachTree::cost_from(NodeId origin) const {
  if (origin >= dist_.size()) {
    throw ConfigError("unknown node id " + std::to_string(origin));
  }
  return dist_[origin];
}

Route ReachTree::route_from(NodeId origin) const {
  if (origin >= dist_.size()) {
    throw ConfigError("unknown node id " + std::to_string(origin));
  }
  if (!std::isfinite(dist_[origin])) {
    throw RoutingError("node " + std::to_string(destination_) + " is unreachable from node " +
                       std::to_string(origin));
  }

  Route route;
  route.origin = origin;
  route.destination = destination_;

  // Walk tight edges greedily. Outgoing lists are ascending by segment id,
  // so taking the first tight edge at every step yields the
  // lexicographically smallest segment sequence among minimum-cost routes.
  const std::size_t guard = network_->segments().size() + network_->nodes().size() + 1;
  NodeId u = origin;
  while (u != destination_) {
    if (route.segments.size() > guard) {
      throw InternalError("route reconstruction exceeded the path-length bound");
    }
    bool advanced = false;
    for (SegmentId sid : network_->outgoing(u)) {
      const Segment& s = network_->segment(sid);
      if (!std::isfinite(dist_[s.to])) {
        continue;
      }
      if (edge_cost(model_, s, context_) + dist_[s.to] == dist_[u]) {
        route.segments.push_back(sid);
        u = s.to;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      throw InternalError("no tight edge found during route reconstruction");
    }
  }

  for (SegmentId sid : route.segments) {
    const Segment& s = network_->segment(sid);
    route.travel_time_s += s.base_time_s;
    route.wear_cost += context_.wear.wear_coefficient_j * s.quality;
    if (context_.segment_exposure != nullptr) {
      route.pollution_exposure += (*context_.segment_exposure)[sid];
    }
  }
  return route;
}

Route shortest_route(const RoadNetwork& network, NodeId origin, NodeId destination,
                     const EdgeCostModel& model, const CostContext& context) {
  validate_cost_model(model);
  return ReachTree(network, destination, model, context).route_from(origin);
}

double route_travel_time(const RoadNetwork& network, const Route& route) {
  double total = 0.0;
  for (SegmentId sid : route.segments) {
    total += network.segment(sid).base_time_s;
  }
  return total;
}

}  // namespace civicroute
