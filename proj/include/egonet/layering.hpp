#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "egonet/core_model.hpp"
#include "egonet/ingestion.hpp"

namespace egonet {

// Events of `tie` inside `period`, scaled to contacts per 365-day year.
// Throws Error(ZeroSpan) when the period has zero length.
double contact_frequency(const TieSeries& tie, const Period& period);

// Contacted alters only (frequency > 0), sorted by alter_id.
std::vector<AlterFrequency> frequency_vector(std::span<const InteractionEvent> ego_events,
                                             ChannelSelector selector, const Period& period);

struct Clustering {
  int k = 0;
  // labels[i] is the cluster of values[i]; 1 = highest mean.
  std::vector<int> labels;
  // Start index of each cluster after the first, on the ascending-sorted values.
  std::vector<std::size_t> boundaries;
  // Within-cluster sum of squared deviations.
  double cost = 0.0;
};

// Exact 1-D k-means by dynamic programming over the sorted values. Among
// optimal partitions, the one with lexicographically smallest boundary
// indices wins. Throws Error(TooFewDistinct) if there are fewer than k
// distinct values, Error(InvalidArgument) if k < 1.
Clustering cluster_1d(std::span<const double> values, int k);

// n ln(RSS/n) + 2k, -inf when RSS == 0.
double aic_score(std::size_t n, double rss, int k);

// argmin of aic_score over k = 1..min(k_max, #distinct); ties go to smaller k.
int select_k_aic(std::span<const double> values, int k_max);

std::size_t count_distinct(std::span<const double> values);

// Clusters an explicit frequency vector; k' = min(k, #distinct frequencies).
// Throws Error(EmptyNetwork) on an empty vector.
LayeredEgoNetwork layer_frequencies(std::string ego_id, ChannelSelector channel, Period period,
                                    std::vector<AlterFrequency> frequencies, int k = 5);

// Full pipeline for one ego: frequency vector over `period`, then layering.
LayeredEgoNetwork build_ego_network(const EgoTimeline& timeline, ChannelSelector channel,
                                    const Period& period, int k = 5);

inline FullSpan full_span(const EgoTimeline& t) { return {t.first_ts, t.last_ts}; }

}  // namespace egonet
