#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "civicroute/geometry.hpp"

namespace civicroute {

using NodeId = std::uint32_t;
using SegmentId = std::uint32_t;

struct Node {
  NodeId id = 0;
  Vec2 position;
};

// One directed road segment. Bidirectional roads are two segments that wear
// independently. `quality` stays in (0, 1] for the life of the network.
struct Segment {
  SegmentId id = 0;
  NodeId from = 0;
  NodeId to = 0;
  double length_m = 0.0;
  double base_time_s = 0.0;
  double quality = 1.0;
};

// Per-traversal wear model: quality decays by the factor (1 - epsilon) on
// every traversal; dropping below quality_floor triggers an immediate repair
// back to 1.0 (new pavement) and bumps the segment's repair counter.
struct WearParams {
  double epsilon = 0.01;           // in (0, 1)
  double quality_floor = 0.5;      // in (0, 1)
  double wear_coefficient_j = 1.0; // > 0, scales wear navigation cost

  friend bool operator==(const WearParams&, const WearParams&) = default;
};

// Throws ConfigError unless epsilon and quality_floor lie in (0, 1) and the
// coefficient is strictly positive.
void validate_wear_params(const WearParams& params);

struct TraversalOutcome {
  double new_quality = 1.0;
  bool repaired = false;
};

enum class ViolationKind {
  EmptyNetwork,
  NonDenseNodeIds,
  NonFinitePosition,
  NonDenseSegmentIds,
  UnknownNode,
  SelfLoop,
  NonPositiveLength,
  NonPositiveTravelTime,
  QualityOutOfRange,
  NotStronglyConnected,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

// Directed road graph with per-segment mutable quality and traversal/repair
// counters. Topology is fixed after construction; only qualities and
// counters change. Single writer during a simulation run; read-only
// snapshots are safe to share.
class RoadNetwork {
 public:
  RoadNetwork() = default;
  RoadNetwork(std::vector<Node> nodes, std::vector<Segment> segments);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const Node& node(NodeId id) const;
  const Segment& segment(SegmentId id) const;

  // Outgoing/incoming segment ids per node, ascending by segment id.
  std::span<const SegmentId> outgoing(NodeId id) const;
  std::span<const SegmentId> incoming(NodeId id) const;

  // Applies one traversal's wear to the segment. Throws ConfigError for an
  // unknown segment id or invalid params.
  TraversalOutcome apply_traversal(SegmentId id, const WearParams& params);

  std::uint64_t traversal_count(SegmentId id) const;
  std::uint64_t repair_count(SegmentId id) const;
  std::uint64_t total_repairs() const;

  // Violations are data, not exceptions; empty means every invariant holds,
  // including strong connectivity.
  std::vector<Violation> validate() const;

 private:
  std::vector<Node> nodes_;
  std::vector<Segment> segments_;
  std::vector<std::vector<SegmentId>> outgoing_;
  std::vector<std::vector<SegmentId>> incoming_;
  std::vector<std::uint64_t> traversals_;
  std::vector<std::uint64_t> repairs_;
};

// Closed form of the wear dynamics: q0 * (1 - epsilon)^n, assuming no repair
// fires within the first n traversals.
double segment_quality_series(double q0, double epsilon, std::uint64_t n);

// Text format with [nodes] / [segments] sections; see README for the exact
// column layout. parse_network reports 1-based line numbers on bad input but
// does not validate graph invariants; load_network parses and validates,
// throwing ConfigError on any violation.
RoadNetwork parse_network(std::string_view text, const std::string& source_name);
RoadNetwork load_network(const std::string& path);
std::string format_network(const RoadNetwork& network);
void save_network(const RoadNetwork& network, const std::string& path);

}  // namespace civicroute
