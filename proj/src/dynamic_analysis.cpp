#include "egonet/dynamic_analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_set>

#include "egonet/layering.hpp"
#include "egonet/static_analysis.hpp"

namespace egonet {

WindowSeries make_windows(const EgoTimeline& timeline, int length_months, int step_months) {
  if (length_months < 1 || step_months < 1) {
    throw Error(ErrorCode::InvalidArgument, "window length and step must be positive");
  }
  const int span_months = static_cast<int>(timeline.months.size());
  if (span_months < length_months) {
    throw Error(ErrorCode::SpanTooShort, "ego " + timeline.ego_id + " spans " + std::to_string(span_months) +
                                             " months, window needs " + std::to_string(length_months));
  }
  const Month first = month_of(timeline.first_ts);
  WindowSeries s;
  s.step_months = step_months;
  for (int offset = 0; offset + length_months <= span_months; offset += step_months) {
    s.windows.push_back({first + std::chrono::months{offset}, length_months});
  }
  return s;
}

WindowSeries make_windows(const EgoTimeline& timeline, int length_months, WindowMode mode) {
  return make_windows(timeline, length_months, mode == WindowMode::Overlapping ? 1 : length_months);
}

std::vector<LayeredEgoNetwork> window_networks(const EgoTimeline& timeline, const WindowSeries& series, int k) {
  std::vector<LayeredEgoNetwork> nets;
  nets.reserve(series.windows.size());
  for (const auto& w : series.windows) {
    auto freqs = frequency_vector(timeline.events, ChannelSelector::AllDirect, w);
    if (freqs.empty()) {
      LayeredEgoNetwork empty;
      empty.ego_id = timeline.ego_id;
      empty.channel = ChannelSelector::AllDirect;
      empty.period = w;
      nets.push_back(std::move(empty));
    } else {
      nets.push_back(layer_frequencies(timeline.ego_id, ChannelSelector::AllDirect, w, std::move(freqs), k));
    }
  }
  return nets;
}

namespace {

std::unordered_set<std::string_view> ring_members(const LayeredEgoNetwork& net, RingId ring) {
  std::unordered_set<std::string_view> out;
  const int idx = ring.position() - 1;
  if (!ring.is_out() && idx < net.k_used()) {
    for (const auto& a : net.rings[idx]) out.insert(a.alter_id);
  }
  return out;
}

}  // namespace

std::optional<double> ring_jaccard(const LayeredEgoNetwork& a, const LayeredEgoNetwork& b, RingId ring) {
  const auto sa = ring_members(a, ring);
  const auto sb = ring_members(b, ring);
  if (sa.empty() && sb.empty()) return std::nullopt;
  std::size_t common = 0;
  for (auto id : sa) common += sb.count(id);
  const std::size_t uni = sa.size() + sb.size() - common;
  return static_cast<double>(common) / static_cast<double>(uni);
}

int max_jumps_from(RingId start) {
  const int p = start.position();
  return std::max(p - 1, RingId::kOutPosition - p);
}

std::vector<JumpSample> jump_samples(const LayeredEgoNetwork& a, const LayeredEgoNetwork& b) {
  const auto ia = ring_index(a);
  const auto ib = ring_index(b);
  std::set<std::string> alters;
  for (const auto& [id, r] : ia) alters.insert(id);
  for (const auto& [id, r] : ib) alters.insert(id);

  std::vector<JumpSample> out;
  for (const auto& id : alters) {
    const RingId from = position_of(ia, id);
    const RingId to = position_of(ib, id);
    const int jumps = std::abs(from.position() - to.position());
    if (jumps == 0) continue;
    out.push_back({id, from, to, jumps, static_cast<double>(jumps) / max_jumps_from(from)});
  }
  return out;
}

EgoTurnover turnover_samples(std::span<const LayeredEgoNetwork> series) {
  EgoTurnover t;
  if (!series.empty()) t.ego_id = series.front().ego_id;
  for (std::size_t w = 0; w + 1 < series.size(); ++w) {
    const auto& a = series[w];
    const auto& b = series[w + 1];
    for (int r = 1; r <= 5; ++r) {
      if (auto j = ring_jaccard(a, b, RingId::ring(r))) t.jaccard[r - 1].push_back(*j);
    }
    for (auto& s : jump_samples(a, b)) {
      if (s.from.is_out()) {
        t.entries[s.to.position() - 1].push_back(std::move(s));
      } else {
        t.exits[s.from.position() - 1].push_back(std::move(s));
      }
    }
  }
  return t;
}

namespace {

std::optional<double> mean_of(const std::vector<double>& v) {
  if (v.empty()) return std::nullopt;
  return compensated_sum(v) / static_cast<double>(v.size());
}

struct JumpAccumulator {
  std::vector<double> jumps;
  std::vector<double> normalized;

  void add(const std::vector<JumpSample>& samples) {
    for (const auto& s : samples) {
      jumps.push_back(s.jumps);
      normalized.push_back(s.normalized);
    }
  }
};

JumpStats micro_stats(const JumpAccumulator& acc) {
  return {mean_of(acc.jumps), mean_of(acc.normalized), acc.jumps.size()};
}

// Per-ego means collected into one accumulator for the across-ego mean.
void add_macro(JumpAccumulator& across, std::size_t& total, const JumpAccumulator& ego) {
  total += ego.jumps.size();
  if (ego.jumps.empty()) return;
  across.jumps.push_back(*mean_of(ego.jumps));
  across.normalized.push_back(*mean_of(ego.normalized));
}

}  // namespace

TurnoverReport aggregate_turnover(std::span<const EgoTurnover> egos, Aggregation aggregation) {
  TurnoverReport report;
  report.aggregation = aggregation;
  report.n_egos = egos.size();

  for (std::size_t r = 0; r < 5; ++r) {
    auto& out = report.rings[r];
    if (aggregation == Aggregation::Micro) {
      std::vector<double> jac;
      JumpAccumulator exit, entry, pooled;
      for (const auto& e : egos) {
        jac.insert(jac.end(), e.jaccard[r].begin(), e.jaccard[r].end());
        exit.add(e.exits[r]);
        entry.add(e.entries[r]);
        pooled.add(e.exits[r]);
        pooled.add(e.entries[r]);
      }
      out.mean_jaccard = mean_of(jac);
      out.jaccard_samples = jac.size();
      out.exit = micro_stats(exit);
      out.entry = micro_stats(entry);
      out.pooled = micro_stats(pooled);
    } else {
      std::vector<double> jac;
      JumpAccumulator exit, entry, pooled;
      for (const auto& e : egos) {
        out.jaccard_samples += e.jaccard[r].size();
        if (auto m = mean_of(e.jaccard[r])) jac.push_back(*m);
        JumpAccumulator ego_exit, ego_entry, ego_pooled;
        ego_exit.add(e.exits[r]);
        ego_entry.add(e.entries[r]);
        ego_pooled.add(e.exits[r]);
        ego_pooled.add(e.entries[r]);
        add_macro(exit, out.exit.samples, ego_exit);
        add_macro(entry, out.entry.samples, ego_entry);
        add_macro(pooled, out.pooled.samples, ego_pooled);
      }
      out.mean_jaccard = mean_of(jac);
      out.exit.mean_jumps = mean_of(exit.jumps);
      out.exit.mean_normalized = mean_of(exit.normalized);
      out.entry.mean_jumps = mean_of(entry.jumps);
      out.entry.mean_normalized = mean_of(entry.normalized);
      out.pooled.mean_jumps = mean_of(pooled.jumps);
      out.pooled.mean_normalized = mean_of(pooled.normalized);
    }
  }
  return report;
}

CorrespondenceMatrix correspondence(const LayeredEgoNetwork& static_net, std::span<const LayeredEgoNetwork> dynamic_nets) {
  if (dynamic_nets.empty()) throw Error(ErrorCode::InvalidArgument, "correspondence needs at least one dynamic window");
  std::vector<RingIndex> indices;
  indices.reserve(dynamic_nets.size());
  for (const auto& net : dynamic_nets) indices.push_back(ring_index(net));

  CorrespondenceMatrix m;
  const double windows = static_cast<double>(dynamic_nets.size());
  for (int r = 0; r < static_net.k_used() && r < 5; ++r) {
    const auto& ring = static_net.rings[r];
    m.row_ties[r] = ring.size();
    if (ring.empty()) continue;
    m.empty_row[r] = false;
    std::array<std::vector<double>, 6> fractions;
    for (const auto& alter : ring) {
      std::array<int, 6> hits{};
      for (const auto& index : indices) ++hits[position_of(index, alter.alter_id).position() - 1];
      for (std::size_t c = 0; c < 6; ++c) fractions[c].push_back(hits[c] / windows);
    }
    for (std::size_t c = 0; c < 6; ++c) m.entries[r][c] = *mean_of(fractions[c]);
  }
  return m;
}

CorrespondenceMatrix average_correspondence(std::span<const CorrespondenceMatrix> matrices) {
  CorrespondenceMatrix out;
  for (std::size_t r = 0; r < 5; ++r) {
    std::array<std::vector<double>, 6> cols;
    for (const auto& m : matrices) {
      out.row_ties[r] += m.row_ties[r];
      if (m.empty_row[r]) continue;
      for (std::size_t c = 0; c < 6; ++c) cols[c].push_back(m.entries[r][c]);
    }
    if (cols[0].empty()) continue;
    out.empty_row[r] = false;
    for (std::size_t c = 0; c < 6; ++c) out.entries[r][c] = *mean_of(cols[c]);
  }
  return out;
}

}  // namespace egonet
