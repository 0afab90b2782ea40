#include "egonet/static_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include <boost/math/distributions/normal.hpp>

namespace egonet {

std::optional<double> fs_ratio(double reply, double mention, double retweet) {
  std::array<double, 3> p{reply, mention, retweet};
  std::sort(p.begin(), p.end(), std::greater<>());
  if (p[1] <= 0.0) return std::nullopt;
  return p[0] / p[1];
}

UsageStats usage_stats(const EgoTimeline& t) {
  const double span = days_between(t.first_ts, t.last_ts);
  if (!(span > 0.0)) throw Error(ErrorCode::ZeroSpan, "ego " + t.ego_id + " has a zero-length history");

  std::map<std::string_view, Channel> tweets;
  for (const auto& e : t.events) tweets.emplace(e.tweet_id, e.channel);

  std::array<long, 4> by_channel{};
  for (const auto& [id, channel] : tweets) ++by_channel[static_cast<std::size_t>(channel)];
  const long direct = by_channel[0] + by_channel[1] + by_channel[2];
  const auto total = static_cast<double>(tweets.size());

  UsageStats u;
  u.ego_id = t.ego_id;
  u.pct_social = 100.0 * static_cast<double>(direct) / total;
  if (direct > 0) {
    u.pct_reply = 100.0 * static_cast<double>(by_channel[0]) / static_cast<double>(direct);
    u.pct_mention = 100.0 * static_cast<double>(by_channel[1]) / static_cast<double>(direct);
    u.pct_retweet = 100.0 * static_cast<double>(by_channel[2]) / static_cast<double>(direct);
  }
  u.fs_ratio = fs_ratio(u.pct_reply, u.pct_mention, u.pct_retweet);
  u.tweet_freq = total / span;
  return u;
}

double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double carry = 0.0;
  for (double x : values) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

UsageMeans mean_usage(std::span<const UsageStats> rows) {
  UsageMeans m;
  m.n = rows.size();
  if (rows.empty()) return m;
  auto mean_of = [&](auto field) {
    std::vector<double> v;
    for (const auto& r : rows) v.push_back(field(r));
    return compensated_sum(v) / static_cast<double>(v.size());
  };
  m.pct_social = mean_of([](const UsageStats& r) { return r.pct_social; });
  m.pct_reply = mean_of([](const UsageStats& r) { return r.pct_reply; });
  m.pct_mention = mean_of([](const UsageStats& r) { return r.pct_mention; });
  m.pct_retweet = mean_of([](const UsageStats& r) { return r.pct_retweet; });
  m.tweet_freq = mean_of([](const UsageStats& r) { return r.tweet_freq; });
  std::vector<double> fs;
  for (const auto& r : rows) {
    if (r.fs_ratio) fs.push_back(*r.fs_ratio);
  }
  if (!fs.empty()) m.fs_ratio = compensated_sum(fs) / static_cast<double>(fs.size());
  return m;
}

std::array<double, 4> scaling_ratios(const std::array<int, 5>& sizes) {
  std::array<double, 4> r{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (sizes[i] < 1) throw Error(ErrorCode::InvalidArgument, "circle sizes must be >= 1");
    r[i] = static_cast<double>(sizes[i + 1]) / static_cast<double>(sizes[i]);
  }
  return r;
}

double normal_critical_value(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "confidence must be in (0,1)");
  }
  return boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + confidence / 2.0);
}

StatSummary summarize(std::span<const double> values, double confidence) {
  const std::size_t n = values.size();
  if (n < 2) throw Error(ErrorCode::InsufficientSample, "need at least 2 values, got " + std::to_string(n));
  StatSummary s;
  s.mean = compensated_sum(values) / static_cast<double>(n);
  std::vector<double> sq;
  sq.reserve(n);
  for (double x : values) sq.push_back((x - s.mean) * (x - s.mean));
  s.sd = std::sqrt(compensated_sum(sq) / static_cast<double>(n - 1));
  s.half_width = normal_critical_value(confidence) * s.sd / std::sqrt(static_cast<double>(n));
  if (s.mean == 0.0) throw Error(ErrorCode::UndefinedC, "mean is zero");
  s.c_index = 2.0 * s.half_width / s.mean;
  return s;
}

PopulationSummary population_summary(std::span<const LayeredEgoNetwork> networks, double confidence) {
  PopulationSummary p;
  p.confidence = confidence;
  std::array<std::vector<double>, 5> sizes;
  std::array<std::vector<double>, 4> ratios;
  for (const auto& net : networks) {
    if (net.k_used() != 5) {
      ++p.n_excluded;
      continue;
    }
    const auto c = circle_sizes(net);
    const auto r = scaling_ratios(c);
    for (std::size_t i = 0; i < 5; ++i) sizes[i].push_back(c[i]);
    for (std::size_t i = 0; i < 4; ++i) ratios[i].push_back(r[i]);
    ++p.n_egos;
  }
  if (p.n_egos < 2) {
    throw Error(ErrorCode::InsufficientSample,
                std::to_string(p.n_egos) + " networks with 5 rings; population summary needs 2");
  }
  for (std::size_t i = 0; i < 5; ++i) p.circle_sizes[i] = summarize(sizes[i], confidence);
  for (std::size_t i = 0; i < 4; ++i) p.scaling_ratios[i] = summarize(ratios[i], confidence);
  return p;
}

}  // namespace egonet
