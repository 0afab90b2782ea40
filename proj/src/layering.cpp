#include "egonet/layering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace egonet {

double contact_frequency(const TieSeries& tie, const Period& period) {
  const double span = period_span_days(period);
  if (!(span > 0.0)) throw Error(ErrorCode::ZeroSpan, "period for tie " + tie.ego_id + "->" + tie.alter_id + " has zero length");
  const auto inside = std::count_if(tie.events.begin(), tie.events.end(),
                                    [&](const InteractionEvent& e) { return period_contains(period, e.timestamp); });
  return static_cast<double>(inside) * kDaysPerYear / span;
}

std::vector<AlterFrequency> frequency_vector(std::span<const InteractionEvent> ego_events, ChannelSelector selector,
                                             const Period& period) {
  const double span = period_span_days(period);
  if (!(span > 0.0)) throw Error(ErrorCode::ZeroSpan, "frequency period has zero length");
  std::map<std::string, long> counts;
  for (const auto& e : ego_events) {
    if (matches(selector, e.channel) && period_contains(period, e.timestamp)) ++counts[*e.alter_id];
  }
  std::vector<AlterFrequency> out;
  out.reserve(counts.size());
  for (const auto& [alter, n] : counts) out.push_back({alter, static_cast<double>(n) * kDaysPerYear / span});
  return out;
}

std::size_t count_distinct(std::span<const double> values) {
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

namespace {

// Running mean / sum of squared deviations.
struct Welford {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }
};

double segment_sse(std::span<const double> sorted, std::size_t begin, std::size_t end) {
  const double len = static_cast<double>(end - begin);
  double sum = 0.0;
  for (std::size_t i = begin; i < end; ++i) sum += sorted[i];
  const double mean = sum / len;
  double sse = 0.0;
  for (std::size_t i = begin; i < end; ++i) sse += (sorted[i] - mean) * (sorted[i] - mean);
  return sse;
}

bool within_tie(double candidate, double best) { return candidate <= best + 1e-10 * std::abs(best); }

// cost[j][i]: optimal cost of splitting sorted[i..n) into j+1 contiguous clusters.
class SuffixDp {
 public:
  SuffixDp(std::span<const double> sorted, int max_k) : v_(sorted), cost_(max_k) {
    const std::size_t n = v_.size();
    const double inf = std::numeric_limits<double>::infinity();
    for (auto& row : cost_) row.assign(n + 1, inf);

    Welford tail;
    for (std::size_t i = n; i-- > 0;) {
      tail.add(v_[i]);
      cost_[0][i] = std::max(tail.m2, 0.0);
    }
    for (int j = 1; j < max_k; ++j) {
      const std::size_t clusters = static_cast<std::size_t>(j) + 1;
      for (std::size_t i = 0; i + clusters <= n; ++i) {
        Welford head;
        double best = inf;
        // First cluster is [i, b); the remaining j clusters need n - b >= j.
        for (std::size_t b = i + 1; b + j <= n; ++b) {
          head.add(v_[b - 1]);
          best = std::min(best, std::max(head.m2, 0.0) + cost_[j - 1][b]);
        }
        cost_[j][i] = best;
      }
    }
  }

  // Greedy left-to-right reconstruction yields the lexicographically smallest
  // boundary vector among (tolerance-)optimal partitions.
  std::vector<std::size_t> boundaries(int k) const {
    const std::size_t n = v_.size();
    std::vector<std::size_t> cuts;
    std::size_t i = 0;
    for (int j = k - 1; j >= 1; --j) {
      const double target = cost_[j][i];
      Welford head;
      std::size_t chosen = n;
      for (std::size_t b = i + 1; b + j <= n; ++b) {
        head.add(v_[b - 1]);
        if (within_tie(std::max(head.m2, 0.0) + cost_[j - 1][b], target)) {
          chosen = b;
          break;
        }
      }
      cuts.push_back(chosen);
      i = chosen;
    }
    return cuts;
  }

 private:
  std::span<const double> v_;
  std::vector<std::vector<double>> cost_;
};

struct SortedValues {
  std::vector<std::size_t> order;  // order[r] = original index of rank r
  std::vector<double> values;
};

SortedValues sort_values(std::span<const double> values) {
  for (double x : values) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "clustering input must be finite");
  }
  SortedValues s;
  s.order.resize(values.size());
  std::iota(s.order.begin(), s.order.end(), std::size_t{0});
  std::stable_sort(s.order.begin(), s.order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  s.values.reserve(values.size());
  for (auto idx : s.order) s.values.push_back(values[idx]);
  return s;
}

Clustering assemble(const SortedValues& s, int k, std::vector<std::size_t> cuts) {
  Clustering c;
  c.k = k;
  c.boundaries = std::move(cuts);
  c.labels.assign(s.values.size(), 0);
  std::vector<std::size_t> edges{0};
  edges.insert(edges.end(), c.boundaries.begin(), c.boundaries.end());
  edges.push_back(s.values.size());
  for (int seg = 0; seg < k; ++seg) {
    c.cost += segment_sse(s.values, edges[seg], edges[seg + 1]);
    // Ascending segments: the last one has the highest mean and becomes 1.
    for (std::size_t r = edges[seg]; r < edges[seg + 1]; ++r) c.labels[s.order[r]] = k - seg;
  }
  return c;
}

}  // namespace

Clustering cluster_1d(std::span<const double> values, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  const auto distinct = count_distinct(values);
  if (distinct < static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::TooFewDistinct,
                std::to_string(distinct) + " distinct values cannot form " + std::to_string(k) + " clusters");
  }
  const auto sorted = sort_values(values);
  const SuffixDp dp(sorted.values, k);
  return assemble(sorted, k, dp.boundaries(k));
}

double aic_score(std::size_t n, double rss, int k) {
  if (rss <= 0.0) return -std::numeric_limits<double>::infinity();
  const double nn = static_cast<double>(n);
  return nn * std::log(rss / nn) + 2.0 * k;
}

int select_k_aic(std::span<const double> values, int k_max) {
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "k_max must be >= 1");
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "no values to cluster");
  const int top = static_cast<int>(std::min<std::size_t>(k_max, count_distinct(values)));
  const auto sorted = sort_values(values);
  const SuffixDp dp(sorted.values, top);

  int best_k = 1;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= top; ++k) {
    const double score = aic_score(values.size(), assemble(sorted, k, dp.boundaries(k)).cost, k);
    if (score < best) {
      best = score;
      best_k = k;
    }
    if (std::isinf(score) && score < 0) break;
  }
  return best_k;
}

LayeredEgoNetwork layer_frequencies(std::string ego_id, ChannelSelector channel, Period period,
                                    std::vector<AlterFrequency> frequencies, int k) {
  if (k < 1 || k > 5) throw Error(ErrorCode::InvalidArgument, "k must be in 1..5, got " + std::to_string(k));
  if (frequencies.empty()) throw Error(ErrorCode::EmptyNetwork, "ego " + ego_id + " has no matching events");

  std::vector<double> values;
  values.reserve(frequencies.size());
  for (const auto& f : frequencies) values.push_back(f.frequency);
  const int k_used = static_cast<int>(std::min<std::size_t>(k, count_distinct(values)));
  const auto clustering = cluster_1d(values, k_used);

  LayeredEgoNetwork net;
  net.ego_id = std::move(ego_id);
  net.channel = channel;
  net.period = period;
  net.rings.resize(k_used);
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    net.rings[clustering.labels[i] - 1].push_back(std::move(frequencies[i]));
  }
  for (auto& ring : net.rings) {
    std::sort(ring.begin(), ring.end(), [](const AlterFrequency& a, const AlterFrequency& b) {
      return a.frequency != b.frequency ? a.frequency > b.frequency : a.alter_id < b.alter_id;
    });
  }
  return net;
}

LayeredEgoNetwork build_ego_network(const EgoTimeline& timeline, ChannelSelector channel, const Period& period, int k) {
  return layer_frequencies(timeline.ego_id, channel, period, frequency_vector(timeline.events, channel, period), k);
}

}  // namespace egonet
