#pragma once

#include <span>
#include <string_view>

namespace civicroute {

// Where a transportation-system feature sits on the problem ladder: ready to
// compute, in need of elaboration, or in need of basic definition.
enum class ProblemStage { Technical, Sociotechnical, Social };

enum class SystemFeature { SocialMobility, PublicInfrastructure, EnvironmentalImpacts };

const char* to_string(ProblemStage stage);
const char* to_string(SystemFeature feature);

// One cell of the 3x3 feature/stage taxonomy this simulator is organized
// around. Only the three technical cells are computed (eta, kappa, pi); the
// rest are registered for documentation so the scope boundary is explicit.
struct RegistryEntry {
  SystemFeature feature;
  ProblemStage stage;
  std::string_view name;
  std::string_view metric;  // symbol name when computed, empty otherwise
  bool computed;
  std::string_view summary;
};

// The nine cells, row-major by feature then stage.
std::span<const RegistryEntry> metric_registry();

}  // namespace civicroute
