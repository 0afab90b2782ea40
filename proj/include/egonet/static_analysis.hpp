#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "egonet/core_model.hpp"
#include "egonet/ingestion.hpp"

namespace egonet {

// Tweet-level usage of one ego; tweets are counted once per tweet_id.
struct UsageStats {
  std::string ego_id;
  double pct_social = 0.0;   // direct tweets / all tweets
  double pct_reply = 0.0;    // the three below are shares of direct tweets
  double pct_mention = 0.0;
  double pct_retweet = 0.0;
  std::optional<double> fs_ratio;  // null when the second-highest share is 0
  double tweet_freq = 0.0;         // tweets per day over the full span
};

UsageStats usage_stats(const EgoTimeline& timeline);

// Highest over second-highest of three percentages.
std::optional<double> fs_ratio(double reply, double mention, double retweet);

struct UsageMeans {
  std::size_t n = 0;
  double pct_social = 0.0;
  double pct_reply = 0.0;
  double pct_mention = 0.0;
  double pct_retweet = 0.0;
  double fs_ratio = 0.0;  // over egos with a defined ratio
  double tweet_freq = 0.0;
};

UsageMeans mean_usage(std::span<const UsageStats> rows);

// |C_{i+1}| / |C_i|; sizes must be >= 1.
std::array<double, 4> scaling_ratios(const std::array<int, 5>& sizes);

struct StatSummary {
  double mean = 0.0;
  double sd = 0.0;          // sample standard deviation
  double half_width = 0.0;  // z * sd / sqrt(n)
  double c_index = 0.0;     // (2 * half_width) / mean
};

// Two-sided standard-normal critical value, e.g. 1.959964 for 0.95.
double normal_critical_value(double confidence);

// Throws Error(InsufficientSample) for n < 2 and Error(UndefinedC) for mean 0.
StatSummary summarize(std::span<const double> values, double confidence = 0.95);

struct PopulationSummary {
  std::size_t n_egos = 0;
  std::size_t n_excluded = 0;  // networks with fewer than 5 rings
  double confidence = 0.95;
  std::array<StatSummary, 5> circle_sizes{};
  std::array<StatSummary, 4> scaling_ratios{};
};

// Aggregates only networks with k_used == 5.
PopulationSummary population_summary(std::span<const LayeredEgoNetwork> networks, double confidence = 0.95);

// Neumaier-compensated sum.
double compensated_sum(std::span<const double> values);

}  // namespace egonet
