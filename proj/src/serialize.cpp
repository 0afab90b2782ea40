#include "egonet/serialize.hpp"

namespace egonet {

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

void to_json(json& j, const InteractionEvent& e) {
  j = json{{"tweet_id", e.tweet_id},
           {"ego", e.ego_id},
           {"kind", to_string(e.channel)},
           {"ts", format_rfc3339(e.timestamp)},
           {"alter", opt(e.alter_id)},
           {"hashtags", e.hashtags}};
}

void from_json(const json& j, InteractionEvent& e) {
  e.tweet_id = j.at("tweet_id").get<std::string>();
  e.ego_id = j.at("ego").get<std::string>();
  e.channel = parse_channel(j.at("kind").get<std::string>());
  e.timestamp = parse_rfc3339(j.at("ts").get<std::string>());
  const auto& alter = j.at("alter");
  e.alter_id = alter.is_null() ? std::nullopt : std::optional<std::string>(alter.get<std::string>());
  e.hashtags = j.at("hashtags").get<std::vector<std::string>>();
}

void to_json(json& j, const Window& w) {
  j = json{{"start", format_month(w.start)}, {"length_months", w.length_months}};
}

void from_json(const json& j, Window& w) {
  w.start = parse_month(j.at("start").get<std::string>());
  w.length_months = j.at("length_months").get<int>();
}

void to_json(json& j, const FullSpan& s) {
  j = json{{"first", format_rfc3339(s.first)}, {"last", format_rfc3339(s.last)}};
}

void from_json(const json& j, FullSpan& s) {
  s.first = parse_rfc3339(j.at("first").get<std::string>());
  s.last = parse_rfc3339(j.at("last").get<std::string>());
}

json period_to_json(const Period& p) {
  if (const auto* w = std::get_if<Window>(&p)) {
    json j = *w;
    j["type"] = "window";
    return j;
  }
  json j = std::get<FullSpan>(p);
  j["type"] = "full_span";
  return j;
}

Period period_from_json(const json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "window") return j.get<Window>();
  if (type == "full_span") return j.get<FullSpan>();
  throw Error(ErrorCode::InvalidArgument, "unknown period type '" + type + "'");
}

void to_json(json& j, const RingId& r) { j = to_string(r); }

void from_json(const json& j, RingId& r) {
  const auto s = j.get<std::string>();
  if (s == "OUT") {
    r = RingId::out();
  } else if (s.size() == 2 && s[0] == 'R') {
    r = RingId::ring(s[1] - '0');
  } else {
    throw Error(ErrorCode::InvalidArgument, "bad ring id '" + s + "'");
  }
}

void to_json(json& j, const AlterFrequency& a) { j = json{{"alter", a.alter_id}, {"frequency", a.frequency}}; }

void from_json(const json& j, AlterFrequency& a) {
  a.alter_id = j.at("alter").get<std::string>();
  a.frequency = j.at("frequency").get<double>();
}

void to_json(json& j, const LayeredEgoNetwork& net) {
  j = json{{"ego", net.ego_id},
           {"channel", to_string(net.channel)},
           {"period", period_to_json(net.period)},
           {"k_used", net.k_used()},
           {"rings", net.rings}};
}

void from_json(const json& j, LayeredEgoNetwork& net) {
  net.ego_id = j.at("ego").get<std::string>();
  net.channel = parse_selector(j.at("channel").get<std::string>());
  net.period = period_from_json(j.at("period"));
  net.rings = j.at("rings").get<std::vector<std::vector<AlterFrequency>>>();
  if (j.contains("k_used") && j.at("k_used").get<int>() != net.k_used()) {
    throw Error(ErrorCode::InvalidArgument, "k_used does not match ring count for ego " + net.ego_id);
  }
}

void to_json(json& j, const MonthBucket& m) {
  j = json{{"month", format_month(m.month)}, {"direct", m.direct_count}, {"plain", m.plain_count}, {"days", m.days}};
}

void to_json(json& j, const UsageStats& u) {
  j = json{{"ego", u.ego_id},           {"pct_social", u.pct_social}, {"pct_reply", u.pct_reply},
           {"pct_mention", u.pct_mention}, {"pct_retweet", u.pct_retweet}, {"fs_ratio", opt(u.fs_ratio)},
           {"tweet_freq", u.tweet_freq}};
}

void to_json(json& j, const UsageMeans& u) {
  j = json{{"n", u.n},
           {"pct_social", u.pct_social},
           {"pct_reply", u.pct_reply},
           {"pct_mention", u.pct_mention},
           {"pct_retweet", u.pct_retweet},
           {"fs_ratio", u.fs_ratio},
           {"tweet_freq", u.tweet_freq}};
}

void to_json(json& j, const StatSummary& s) {
  j = json{{"mean", s.mean}, {"sd", s.sd}, {"half_width", s.half_width}, {"c_index", s.c_index}};
}

void to_json(json& j, const PopulationSummary& p) {
  j = json{{"n_egos", p.n_egos},
           {"n_excluded", p.n_excluded},
           {"confidence", p.confidence},
           {"circle_sizes", p.circle_sizes},
           {"scaling_ratios", p.scaling_ratios}};
}

void to_json(json& j, const JumpStats& s) {
  j = json{{"mean_jumps", opt(s.mean_jumps)}, {"mean_normalized", opt(s.mean_normalized)}, {"samples", s.samples}};
}

void to_json(json& j, const RingTurnover& r) {
  j = json{{"mean_jaccard", opt(r.mean_jaccard)},
           {"jaccard_samples", r.jaccard_samples},
           {"exit", r.exit},
           {"entry", r.entry},
           {"pooled", r.pooled}};
}

void to_json(json& j, const TurnoverReport& t) {
  j = json{{"aggregation", t.aggregation == Aggregation::Macro ? "macro" : "micro"},
           {"n_egos", t.n_egos},
           {"rings", t.rings}};
}

void to_json(json& j, const CorrespondenceMatrix& m) {
  j = json{{"columns", {"R1", "R2", "R3", "R4", "R5", "OUT"}},
           {"entries", m.entries},
           {"empty_row", m.empty_row},
           {"row_ties", m.row_ties}};
}

void to_json(json& j, const HashtagTieStats& s) {
  j = json{{"ego", s.ego_id},        {"alter", s.alter_id},      {"activated", s.activated},
           {"h_act", opt(s.h_act)},  {"h_max", opt(s.h_max)},    {"n_r_hact", s.n_r_hact},
           {"n_e_hact", s.n_e_hact}, {"n_r_hmax", s.n_r_hmax},   {"n_e_hmax", s.n_e_hmax},
           {"d_rel", s.d_rel},       {"u_rel", s.u_rel}};
}

void to_json(json& j, const GroupMeans& g) {
  j = json{{"n", g.n},
           {"mean_frequency", opt(g.mean_frequency)},
           {"mean_d_rel", opt(g.mean_d_rel)},
           {"mean_u_rel", opt(g.mean_u_rel)}};
}

void to_json(json& j, const LayerHashtagRow& r) {
  j = json{{"ring", r.ring},
           {"n_ties", r.n_ties},
           {"n_activated", r.n_activated},
           {"pct_activated", opt(r.pct_activated)},
           {"activated", r.activated},
           {"non_activated", r.non_activated}};
}

void to_json(json& j, const LayerHashtagReport& r) { j = json{{"sample", r.sample}, {"rows", r.rows}}; }

void to_json(json& j, const GrowthSummary& g) {
  j = json{{"n_egos", g.n_egos}, {"mean_new_alters", g.mean_new_alters}, {"mean_new_hashtags", g.mean_new_hashtags}};
}

void to_json(json& j, const RegressionModel& m) {
  j = json{{"predictors", m.predictor_names},
           {"coefficients", m.coefficients},
           {"intercept", m.intercept},
           {"r_squared", m.r_squared},
           {"n", m.n},
           {"dropped", m.dropped},
           {"diagnostics", m.diagnostics}};
}

void to_json(json& j, const RegressionGridRow& r) {
  json cells = json::object();
  for (std::size_t c = 0; c < r.cells.size(); ++c) {
    const auto& cell = r.cells[c];
    cells[kRingColumns[c]] = cell.model ? json(*cell.model) : json{{"model", nullptr}, {"note", cell.note}};
  }
  j = json{{"sample", r.sample}, {"group", to_string(r.group)}, {"cells", std::move(cells)}};
}

void to_json(json& j, const SynthConfig& c) {
  j = json{{"n_egos", c.n_egos},
           {"ring_sizes", c.ring_sizes},
           {"ring_base_freq", c.ring_base_freq},
           {"decay", c.decay},
           {"duration_months", c.duration_months},
           {"churn_window_months", c.churn_window_months},
           {"churn_per_ring", c.churn_per_ring},
           {"activation_prob", c.activation_prob},
           {"hashtag_repeat_prob", c.hashtag_repeat_prob},
           {"background_hashtag_prob", c.background_hashtag_prob},
           {"hashtag_vocab_size", c.hashtag_vocab_size},
           {"plain_per_day", c.plain_per_day},
           {"new_alters_per_month", c.new_alters_per_month},
           {"bursty", c.bursty},
           {"start", format_month(c.start)},
           {"seed", c.seed}};
}

void from_json(const json& j, SynthConfig& c) {
  // Missing keys keep their defaults, so partial config files work.
  auto take = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  take("n_egos", c.n_egos);
  take("ring_sizes", c.ring_sizes);
  take("ring_base_freq", c.ring_base_freq);
  take("decay", c.decay);
  take("duration_months", c.duration_months);
  take("churn_window_months", c.churn_window_months);
  take("churn_per_ring", c.churn_per_ring);
  take("activation_prob", c.activation_prob);
  take("hashtag_repeat_prob", c.hashtag_repeat_prob);
  take("background_hashtag_prob", c.background_hashtag_prob);
  take("hashtag_vocab_size", c.hashtag_vocab_size);
  take("plain_per_day", c.plain_per_day);
  take("new_alters_per_month", c.new_alters_per_month);
  take("bursty", c.bursty);
  take("seed", c.seed);
  if (j.contains("start")) c.start = parse_month(j.at("start").get<std::string>());
}

void to_json(json& j, const PlantedTie& t) {
  j = json{{"alter", t.alter_id},
           {"ring_per_window", t.ring_per_window},
           {"transient", t.transient},
           {"activated", t.activated},
           {"h_act", opt(t.h_act)},
           {"tweets", t.tweets},
           {"tweets_with_h_act", t.tweets_with_h_act}};
}

void to_json(json& j, const GroundTruth& g) {
  json egos = json::array();
  for (const auto& e : g.egos) egos.push_back(json{{"ego", e.ego_id}, {"ties", e.ties}});
  j = json{{"prng", g.prng}, {"config", g.config}, {"egos", std::move(egos)}};
}

json networks_to_json(std::span<const LayeredEgoNetwork> networks) {
  json arr = json::array();
  for (const auto& n : networks) arr.push_back(n);
  return json{{"networks", std::move(arr)}};
}

std::vector<LayeredEgoNetwork> networks_from_json(const json& j) {
  return j.at("networks").get<std::vector<LayeredEgoNetwork>>();
}

}  // namespace egonet
