#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "civicroute/metrics.hpp"
#include "civicroute/network.hpp"

namespace civicroute {

// Header: epoch,eta,total_wear_cost,repair_count,total_pollution_exposure,mean_travel_time
std::string format_metrics_csv(const std::vector<MetricReport>& reports);

// Header: segment_id,traversals,repairs,final_quality  (cumulative counters)
std::string format_segments_csv(const RoadNetwork& network);

// Whole-run aggregate of one policy's report series, used by the comparison.
struct PolicyAggregate {
  std::string policy;
  double eta_mean = 0.0;
  double total_wear_cost = 0.0;
  std::uint64_t repair_count = 0;
  double total_pollution_exposure = 0.0;
  double mean_travel_time_s = 0.0;
};

PolicyAggregate aggregate_reports(const std::string& policy, const std::vector<MetricReport>& reports);

// One row per policy in input order; deltas are policy minus baseline.
std::string format_comparison_csv(const std::vector<PolicyAggregate>& aggregates,
                                  std::size_t baseline_index);

}  // namespace civicroute
