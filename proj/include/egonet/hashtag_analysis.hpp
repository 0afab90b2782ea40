#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "egonet/core_model.hpp"
#include "egonet/ingestion.hpp"

namespace egonet {

struct Activation {
  bool activated = false;
  std::optional<std::string> h_act;
};

// Activated iff the first direct tweet carries a hashtag. With several
// first-tweet tags, the one in most of the tie's tweets wins, then the first listed.
Activation detect_activation(const TieSeries& tie);

// Per-tag tweet counts summed over every tie of one ego.
class EgoHashtagContext {
 public:
  explicit EgoHashtagContext(std::span<const TieSeries> ego_ties);

  int tweets_with(const std::string& tag) const;

 private:
  std::unordered_map<std::string, int> counts_;
};

struct HashtagTieStats {
  std::string ego_id;
  std::string alter_id;
  bool activated = false;
  std::optional<std::string> h_act;
  std::optional<std::string> h_max;
  int n_r_hact = 0;  // tie tweets containing h_act
  int n_e_hact = 0;  // ego tweets (all ties) containing h_act
  int n_r_hmax = 0;
  int n_e_hmax = 0;
  int d_rel = 0;  // hashtag occurrences on the tie
  int u_rel = 0;  // distinct hashtags on the tie
};

HashtagTieStats tie_hashtag_stats(const TieSeries& tie, const EgoHashtagContext& ego_context);

// Stats for all ties of one ego, in the order given.
std::vector<HashtagTieStats> ego_hashtag_stats(std::span<const TieSeries> ego_ties);

// A tie's hashtag statistics joined with its contact frequency and static ring.
struct TieRecord {
  HashtagTieStats stats;
  double frequency = 0.0;
  std::optional<RingId> ring;  // nullopt if the alter is not in the network
};

// `ties` must be the ego's ties on the network's channel.
std::vector<TieRecord> join_ties(const LayeredEgoNetwork& net, std::span<const TieSeries> ties);

struct GroupMeans {
  std::size_t n = 0;
  std::optional<double> mean_frequency;
  std::optional<double> mean_d_rel;
  std::optional<double> mean_u_rel;
};

struct LayerHashtagRow {
  std::string ring;  // "ALL", "R1".."R5"
  std::size_t n_ties = 0;
  std::size_t n_activated = 0;
  std::optional<double> pct_activated;
  GroupMeans activated;
  GroupMeans non_activated;
};

struct LayerHashtagReport {
  std::string sample;
  std::vector<LayerHashtagRow> rows;  // ALL, R1..R5
};

LayerHashtagReport layer_hashtag_report(std::string sample, std::span<const TieRecord> records);

struct GrowthSeries {
  std::string ego_id;
  Month origin{};  // month of the first direct event
  std::vector<int> new_alters;
  std::vector<int> new_hashtags;
  double mean_new_alters = 0.0;
  double mean_new_hashtags = 0.0;
};

// Months run from the first direct event's month through the month of
// last_ts; months without activity count as zero. Throws Error(EmptyInput)
// if the ego has no direct events.
GrowthSeries growth_series(const EgoTimeline& timeline);

struct GrowthSummary {
  std::size_t n_egos = 0;
  double mean_new_alters = 0.0;
  double mean_new_hashtags = 0.0;
};

GrowthSummary summarize_growth(std::span<const GrowthSeries> series);

}  // namespace egonet
