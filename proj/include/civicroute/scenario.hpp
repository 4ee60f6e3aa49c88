#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "civicroute/metrics.hpp"
#include "civicroute/network.hpp"
#include "civicroute/routing.hpp"
#include "civicroute/sim.hpp"
#include "civicroute/spatial.hpp"

namespace civicroute {

struct FileNetworkSpec {
  std::string path;  // relative paths resolve against the scenario file's directory

  friend bool operator==(const FileNetworkSpec&, const FileNetworkSpec&) = default;
};

struct GridSpec {
  std::uint32_t rows = 2;
  std::uint32_t cols = 2;
  double edge_length_m = 100.0;
  double edge_time_s = 10.0;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct GeometricSpec {
  std::uint32_t count = 25;
  double radius_m = 250.0;
  Bounds bounds{0.0, 0.0, 1000.0, 1000.0};
  double speed_mps = 10.0;  // derives base_time_s = length_m / speed_mps
  std::optional<std::uint64_t> seed;  // unset: scenario seed

  friend bool operator==(const GeometricSpec&, const GeometricSpec&) = default;
};

using NetworkSpec = std::variant<FileNetworkSpec, GridSpec, GeometricSpec>;

struct AtNodesSpec {
  friend bool operator==(const AtNodesSpec&, const AtNodesSpec&) = default;
};

struct UniformSpec {
  Bounds bounds;
  std::uint32_t count = 1;
  std::optional<std::uint64_t> seed;  // unset: scenario seed + role offset

  friend bool operator==(const UniformSpec&, const UniformSpec&) = default;
};

struct GaussianSpec {
  Vec2 center;
  double sigma = 1.0;
  std::uint32_t count = 1;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const GaussianSpec&, const GaussianSpec&) = default;
};

struct PointsSpec {
  std::vector<WeightedPoint> points;

  friend bool operator==(const PointsSpec& a, const PointsSpec& b);
};

struct FileDistSpec {
  std::string path;
  std::string section;  // [distribution.<section>] to read; defaults to the role name

  friend bool operator==(const FileDistSpec&, const FileDistSpec&) = default;
};

using DistributionSpec = std::variant<AtNodesSpec, UniformSpec, GaussianSpec, PointsSpec, FileDistSpec>;

enum class WearCostMode { Proportional, Inverse };

const char* to_string(WearCostMode mode);

// One reproducible experiment record: network, distributions, policy, and
// every model parameter, as parsed from a scenario file. Immutable after
// load.
struct Scenario {
  std::string name;
  NetworkSpec network = GridSpec{};
  DistributionSpec housing = AtNodesSpec{};
  DistributionSpec good_food = AtNodesSpec{};
  DistributionSpec bad_food = AtNodesSpec{};
  DistributionSpec population = AtNodesSpec{};
  EdgeCostModel policy = EdgeCostModel::travel_time();
  WearCostMode wear_cost_mode = WearCostMode::Inverse;
  WearParams wear;
  FoodDesertParams food;
  PollutionParams pollution;
  TripDemand demand;
  std::uint32_t epochs = 50;
  std::uint64_t seed = 0;
  std::string base_dir;  // directory of the source file; not part of equivalence
};

// Field-for-field equivalence ignoring base_dir; load(save(s)) round-trips.
bool equivalent(const Scenario& a, const Scenario& b);

// Parses and validates. Throws ParseError for malformed text and
// ConfigError listing every field-level problem by dotted path.
Scenario parse_scenario(std::string_view text, const std::string& source_name,
                        const std::string& base_dir, const std::string& default_name);
Scenario load_scenario(const std::string& path);
std::string format_scenario(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::string& path);

// 4-connected lattice; node (r, c) sits at (c * edge_length, r * edge_length)
// and every adjacent pair gets two directed segments with quality 1.
RoadNetwork build_grid(std::uint32_t rows, std::uint32_t cols, double edge_length_m, double edge_time_s);

// Uniform random nodes connected within radius_m (both directions). Retries
// with an incremented sub-seed until the result is strongly connected, up to
// 100 attempts, then throws ConfigError.
RoadNetwork build_random_geometric(const GeometricSpec& spec, std::uint64_t scenario_seed);

RoadNetwork build_network(const NetworkSpec& spec, std::uint64_t scenario_seed,
                          const std::string& base_dir);

SpatialDistribution build_distribution(DistributionKind kind, const DistributionSpec& spec,
                                       const RoadNetwork& network, std::uint64_t scenario_seed,
                                       const std::string& base_dir);

// Materializes the scenario: builds the network and all four distributions
// and bundles every parameter a run needs.
SimInputs build(const Scenario& scenario);

// Built-in policy names accepted by the compare command.
// time | wear | wear-proportional | wear-inverse | pollution | scenario
EdgeCostModel resolve_policy_name(const std::string& name, const Scenario& scenario);
std::vector<std::string> policy_names();

}  // namespace civicroute
