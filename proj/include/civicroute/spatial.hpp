#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "civicroute/errors.hpp"
#include "civicroute/geometry.hpp"
#include "civicroute/network.hpp"

namespace civicroute {

enum class DistributionKind { Housing, GoodFood, BadFood, Population };

const char* to_string(DistributionKind kind);

struct WeightedPoint {
  Vec2 position;
  double weight = 1.0;

  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

// Finite weighted point set. Expectations are exact normalized sums, never
// sampled, so every metric built on top is reproducible. Immutable after
// construction.
class SpatialDistribution {
 public:
  // Throws ConfigError if points is empty, any weight is negative or
  // non-finite, any position is non-finite, or the total weight is zero.
  SpatialDistribution(DistributionKind kind, std::vector<WeightedPoint> points);

  DistributionKind kind() const { return kind_; }
  const std::vector<WeightedPoint>& points() const { return points_; }
  double total_weight() const { return total_weight_; }
  std::size_t size() const { return points_.size(); }

  // Exact weighted expectation: sum_i w_i f(i, p_i) / sum_i w_i, accumulated
  // in point order.
  template <class F>
  double expectation_over_points(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      acc += points_[i].weight * f(i, points_[i]);
    }
    return acc / total_weight_;
  }

  template <class F>
  double expectation(F&& f) const {
    return expectation_over_points([&](std::size_t, const WeightedPoint& p) { return f(p.position); });
  }

  // Returns a copy with one extra point appended.
  SpatialDistribution with_point(WeightedPoint extra) const;

 private:
  DistributionKind kind_;
  std::vector<WeightedPoint> points_;
  double total_weight_;
};

// Nearest node by Euclidean distance; ties break toward the smallest NodeId.
NodeId snap_to_node(const RoadNetwork& network, Vec2 position);

struct Bounds {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

  bool ordered() const { return x0 < x1 && y0 < y1; }
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

// Generators are pure functions of their parameters and seed; all weights
// are 1. Invalid parameters throw ConfigError.
SpatialDistribution generate_uniform_in_bounds(DistributionKind kind, const Bounds& bounds,
                                               std::uint32_t count, std::uint64_t seed);
SpatialDistribution generate_gaussian_cluster(DistributionKind kind, Vec2 center, double sigma,
                                              std::uint32_t count, std::uint64_t seed);
// One unit-weight point at every node position.
SpatialDistribution generate_at_nodes(DistributionKind kind, const RoadNetwork& network);

// Distribution file: [distribution.<name>] sections with one `x y weight`
// row per point. parse_* reports line numbers; load_* reads from disk.
SpatialDistribution parse_distribution(std::string_view text, const std::string& source_name,
                                       DistributionKind kind, const std::string& section);
SpatialDistribution load_distribution(const std::string& path, DistributionKind kind,
                                      const std::string& section);

}  // namespace civicroute
