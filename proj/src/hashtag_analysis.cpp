#include "egonet/hashtag_analysis.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "egonet/layering.hpp"
#include "egonet/static_analysis.hpp"

namespace egonet {

namespace {

// Tags in first-appearance order with the number of tie tweets containing each.
struct TagTally {
  std::vector<std::string> order;
  std::unordered_map<std::string, int> tweets;
  int occurrences = 0;

  explicit TagTally(const TieSeries& tie) {
    for (const auto& e : tie.events) {
      std::unordered_set<std::string_view> in_tweet;
      for (const auto& tag : e.hashtags) {
        ++occurrences;
        if (!in_tweet.insert(tag).second) continue;
        auto [it, inserted] = tweets.emplace(tag, 0);
        if (inserted) order.push_back(tag);
        ++it->second;
      }
    }
  }

  int count(const std::string& tag) const {
    auto it = tweets.find(tag);
    return it == tweets.end() ? 0 : it->second;
  }
};

std::optional<std::string> pick_activating(const TieSeries& tie, const TagTally& tally) {
  const auto& first = tie.first_contact().hashtags;
  if (first.empty()) return std::nullopt;
  const std::string* best = &first.front();
  for (const auto& tag : first) {
    if (tally.count(tag) > tally.count(*best)) best = &tag;
  }
  return *best;
}

}  // namespace

Activation detect_activation(const TieSeries& tie) {
  if (tie.events.empty()) throw Error(ErrorCode::EmptyInput, "tie has no events");
  const TagTally tally(tie);
  auto h = pick_activating(tie, tally);
  return {h.has_value(), std::move(h)};
}

EgoHashtagContext::EgoHashtagContext(std::span<const TieSeries> ego_ties) {
  for (const auto& tie : ego_ties) {
    for (const auto& [tag, n] : TagTally(tie).tweets) counts_[tag] += n;
  }
}

int EgoHashtagContext::tweets_with(const std::string& tag) const {
  auto it = counts_.find(tag);
  return it == counts_.end() ? 0 : it->second;
}

HashtagTieStats tie_hashtag_stats(const TieSeries& tie, const EgoHashtagContext& ego) {
  if (tie.events.empty()) throw Error(ErrorCode::EmptyInput, "tie has no events");
  const TagTally tally(tie);
  HashtagTieStats s;
  s.ego_id = tie.ego_id;
  s.alter_id = tie.alter_id;
  s.h_act = pick_activating(tie, tally);
  s.activated = s.h_act.has_value();
  if (s.h_act) {
    s.n_r_hact = tally.count(*s.h_act);
    s.n_e_hact = ego.tweets_with(*s.h_act);
  }
  for (const auto& tag : tally.order) {
    if (!s.h_max || tally.count(tag) > s.n_r_hmax) {
      s.h_max = tag;
      s.n_r_hmax = tally.count(tag);
    }
  }
  if (s.h_max) s.n_e_hmax = ego.tweets_with(*s.h_max);
  s.d_rel = tally.occurrences;
  s.u_rel = static_cast<int>(tally.order.size());
  return s;
}

std::vector<HashtagTieStats> ego_hashtag_stats(std::span<const TieSeries> ego_ties) {
  const EgoHashtagContext ctx(ego_ties);
  std::vector<HashtagTieStats> out;
  out.reserve(ego_ties.size());
  for (const auto& tie : ego_ties) out.push_back(tie_hashtag_stats(tie, ctx));
  return out;
}

std::vector<TieRecord> join_ties(const LayeredEgoNetwork& net, std::span<const TieSeries> ties) {
  const auto index = ring_index(net);
  std::unordered_map<std::string_view, double> freq;
  for (const auto& ring : net.rings) {
    for (const auto& a : ring) freq.emplace(a.alter_id, a.frequency);
  }
  const EgoHashtagContext ctx(ties);
  std::vector<TieRecord> out;
  out.reserve(ties.size());
  for (const auto& tie : ties) {
    TieRecord rec;
    rec.stats = tie_hashtag_stats(tie, ctx);
    const RingId pos = position_of(index, tie.alter_id);
    if (!pos.is_out()) rec.ring = pos;
    auto it = freq.find(tie.alter_id);
    rec.frequency = it != freq.end() ? it->second : contact_frequency(tie, net.period);
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

std::optional<double> mean_or_null(const std::vector<double>& v) {
  if (v.empty()) return std::nullopt;
  return compensated_sum(v) / static_cast<double>(v.size());
}

GroupMeans group_means(const std::vector<const TieRecord*>& group) {
  std::vector<double> f, d, u;
  for (const auto* r : group) {
    f.push_back(r->frequency);
    d.push_back(r->stats.d_rel);
    u.push_back(r->stats.u_rel);
  }
  return {group.size(), mean_or_null(f), mean_or_null(d), mean_or_null(u)};
}

LayerHashtagRow make_row(std::string label, const std::vector<const TieRecord*>& ties) {
  std::vector<const TieRecord*> act, non;
  for (const auto* r : ties) (r->stats.activated ? act : non).push_back(r);
  LayerHashtagRow row;
  row.ring = std::move(label);
  row.n_ties = ties.size();
  row.n_activated = act.size();
  if (!ties.empty()) row.pct_activated = 100.0 * static_cast<double>(act.size()) / static_cast<double>(ties.size());
  row.activated = group_means(act);
  row.non_activated = group_means(non);
  return row;
}

}  // namespace

LayerHashtagReport layer_hashtag_report(std::string sample, std::span<const TieRecord> records) {
  LayerHashtagReport report;
  report.sample = std::move(sample);
  std::vector<const TieRecord*> all;
  std::array<std::vector<const TieRecord*>, 5> by_ring;
  for (const auto& r : records) {
    all.push_back(&r);
    if (r.ring) by_ring[r.ring->position() - 1].push_back(&r);
  }
  report.rows.push_back(make_row("ALL", all));
  for (int r = 0; r < 5; ++r) report.rows.push_back(make_row(to_string(RingId::ring(r + 1)), by_ring[r]));
  return report;
}

GrowthSeries growth_series(const EgoTimeline& t) {
  auto first_direct = std::find_if(t.events.begin(), t.events.end(),
                                   [](const InteractionEvent& e) { return is_direct(e.channel); });
  if (first_direct == t.events.end()) throw Error(ErrorCode::EmptyInput, "ego " + t.ego_id + " has no direct tweets");

  GrowthSeries g;
  g.ego_id = t.ego_id;
  g.origin = month_of(first_direct->timestamp);
  const int n_months = months_between(g.origin, month_of(t.last_ts)) + 1;
  g.new_alters.assign(n_months, 0);
  g.new_hashtags.assign(n_months, 0);

  std::set<std::string_view> seen_alters, seen_tags;
  for (auto it = first_direct; it != t.events.end(); ++it) {
    if (!is_direct(it->channel)) continue;
    const int m = months_between(g.origin, month_of(it->timestamp));
    if (seen_alters.insert(*it->alter_id).second) ++g.new_alters[m];
    for (const auto& tag : it->hashtags) {
      if (seen_tags.insert(tag).second) ++g.new_hashtags[m];
    }
  }
  const auto months = static_cast<double>(n_months);
  for (int v : g.new_alters) g.mean_new_alters += v;
  for (int v : g.new_hashtags) g.mean_new_hashtags += v;
  g.mean_new_alters /= months;
  g.mean_new_hashtags /= months;
  return g;
}

GrowthSummary summarize_growth(std::span<const GrowthSeries> series) {
  GrowthSummary s;
  s.n_egos = series.size();
  if (series.empty()) return s;
  std::vector<double> a, h;
  for (const auto& g : series) {
    a.push_back(g.mean_new_alters);
    h.push_back(g.mean_new_hashtags);
  }
  s.mean_new_alters = compensated_sum(a) / static_cast<double>(a.size());
  s.mean_new_hashtags = compensated_sum(h) / static_cast<double>(h.size());
  return s;
}

}  // namespace egonet
