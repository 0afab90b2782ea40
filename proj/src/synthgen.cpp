#include "egonet/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "egonet/ingestion.hpp"

namespace egonet {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }
  double exponential(double rate) { return -std::log1p(-uniform()) / rate; }
  std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)); }

  int poisson(double mean) {
    int k = 0;
    for (double t = exponential(1.0); t < mean; t += exponential(1.0)) ++k;
    return k;
  }

 private:
  std::mt19937_64 engine_;
};

struct RawEvent {
  std::int64_t offset = 0;  // seconds since config.start
  int tie = -1;             // -1 for plain tweets
  Channel channel = Channel::Plain;
};

std::string padded(const char* prefix, int value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%0*d", prefix, width, value);
  return buf;
}

struct EgoResult {
  std::vector<InteractionEvent> events;
  EgoGroundTruth truth;
};

EgoResult generate_ego(const SynthConfig& cfg, int ego_index) {
  Rng rng(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(ego_index) + 1)));
  EgoResult out;
  out.truth.ego_id = padded("ego", ego_index, 5);
  const std::string& ego = out.truth.ego_id;
  auto& ties = out.truth.ties;
  const Timestamp origin = month_start(cfg.start);

  const int n_windows = (cfg.duration_months + cfg.churn_window_months - 1) / cfg.churn_window_months;
  auto new_tie = [&](bool transient) {
    PlantedTie t;
    t.alter_id = ego + (transient ? "_n" : "_a") + padded("", static_cast<int>(ties.size()), 5);
    t.ring_per_window.assign(n_windows, 0);
    t.transient = transient;
    t.activated = rng.bernoulli(cfg.activation_prob);
    if (t.activated) t.h_act = "t" + std::to_string(rng.below(cfg.hashtag_vocab_size));
    ties.push_back(std::move(t));
    return static_cast<int>(ties.size()) - 1;
  };

  // slot occupants per churn window
  std::array<std::vector<int>, 5> slots;
  std::vector<std::vector<int>> members(n_windows);
  for (int w = 0; w < n_windows; ++w) {
    for (int r = 0; r < 5; ++r) {
      if (w == 0) {
        for (int s = 0; s < cfg.ring_sizes[r]; ++s) slots[r].push_back(new_tie(false));
      } else {
        for (auto& occupant : slots[r]) {
          if (rng.bernoulli(cfg.churn_per_ring[r])) occupant = new_tie(false);
        }
      }
      for (int tie : slots[r]) {
        ties[tie].ring_per_window[w] = r + 1;
        members[w].push_back(tie);
      }
    }
  }

  std::vector<double> month_factor(cfg.duration_months, 1.0);
  if (cfg.bursty) {
    // Bursts enter w.p. 0.1 and persist w.p. 0.5; stationary share 1/6, so
    // factors 4 and 0.4 keep the long-run rate unchanged.
    bool burst = false;
    for (auto& f : month_factor) {
      burst = rng.bernoulli(burst ? 0.5 : 0.1);
      f = burst ? 4.0 : 0.4;
    }
  }

  std::vector<RawEvent> raw;
  constexpr double kSecondsPerYear = kDaysPerYear * kSecondsPerDay;
  for (int m = 0; m < cfg.duration_months; ++m) {
    const Month month = cfg.start + std::chrono::months{m};
    const std::int64_t begin = (month_start(month) - origin).count();
    const double length = static_cast<double>((month_start(month + std::chrono::months{1}) - month_start(month)).count());
    const int w = m / cfg.churn_window_months;

    for (int tie : members[w]) {
      const int r = ties[tie].ring_per_window[w] - 1;
      const double rate = cfg.ring_base_freq / std::pow(cfg.decay, r) * month_factor[m] / kSecondsPerYear;
      for (double t = rng.exponential(rate); t < length; t += rng.exponential(rate)) {
        raw.push_back({begin + static_cast<std::int64_t>(t), tie, static_cast<Channel>(rng.below(3))});
      }
    }
    const int arrivals = cfg.new_alters_per_month > 0 ? rng.poisson(cfg.new_alters_per_month) : 0;
    for (int a = 0; a < arrivals; ++a) {
      const int tie = new_tie(true);
      raw.push_back({begin + static_cast<std::int64_t>(rng.uniform() * length), tie, static_cast<Channel>(rng.below(3))});
    }
    if (cfg.plain_per_day > 0) {
      const double rate = cfg.plain_per_day / kSecondsPerDay;
      for (double t = rng.exponential(rate); t < length; t += rng.exponential(rate)) {
        raw.push_back({begin + static_cast<std::int64_t>(t), -1, Channel::Plain});
      }
    }
  }

  std::stable_sort(raw.begin(), raw.end(), [](const RawEvent& a, const RawEvent& b) {
    return a.offset != b.offset ? a.offset < b.offset : a.tie < b.tie;
  });

  out.events.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& re = raw[i];
    InteractionEvent e;
    e.tweet_id = ego + "-" + padded("", static_cast<int>(i), 8);
    e.ego_id = ego;
    e.channel = re.channel;
    e.timestamp = origin + std::chrono::seconds{re.offset};
    if (re.tie >= 0) {
      auto& tie = ties[re.tie];
      e.alter_id = tie.alter_id;
      const bool first = tie.tweets == 0;
      ++tie.tweets;
      if (first) {
        if (tie.activated) e.hashtags.push_back(*tie.h_act);
      } else {
        if (tie.activated && rng.bernoulli(cfg.hashtag_repeat_prob)) e.hashtags.push_back(*tie.h_act);
        if (rng.bernoulli(cfg.background_hashtag_prob)) {
          e.hashtags.push_back("t" + std::to_string(rng.below(cfg.hashtag_vocab_size)));
        }
      }
      if (tie.h_act && std::find(e.hashtags.begin(), e.hashtags.end(), *tie.h_act) != e.hashtags.end()) {
        ++tie.tweets_with_h_act;
      }
    } else if (rng.bernoulli(cfg.background_hashtag_prob)) {
      e.hashtags.push_back("t" + std::to_string(rng.below(cfg.hashtag_vocab_size)));
    }
    out.events.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::optional<int> PlantedTie::stable_ring() const {
  if (ring_per_window.empty() || ring_per_window.front() == 0) return std::nullopt;
  for (int r : ring_per_window) {
    if (r != ring_per_window.front()) return std::nullopt;
  }
  return ring_per_window.front();
}

void SynthConfig::validate() const {
  auto fail = [](const std::string& field, const std::string& why) {
    throw Error(ErrorCode::InvalidConfig, field + ": " + why);
  };
  if (n_egos < 1) fail("n_egos", "must be >= 1");
  for (int s : ring_sizes) {
    if (s < 0) fail("ring_sizes", "must be non-negative");
  }
  if (!(ring_base_freq > 0)) fail("ring_base_freq", "must be positive");
  if (!(decay > 1)) fail("decay", "must exceed 1");
  if (ring_base_freq / std::pow(decay, 4) < 1.0) fail("ring_base_freq", "outermost ring would fall below 1 contact/year");
  if (duration_months < 1) fail("duration_months", "must be >= 1");
  if (churn_window_months < 1) fail("churn_window_months", "must be >= 1");
  auto probability = [&](double p, const char* field) {
    if (!(p >= 0.0 && p <= 1.0)) fail(field, "must be a probability in [0,1]");
  };
  for (double p : churn_per_ring) probability(p, "churn_per_ring");
  probability(activation_prob, "activation_prob");
  probability(hashtag_repeat_prob, "hashtag_repeat_prob");
  probability(background_hashtag_prob, "background_hashtag_prob");
  if (hashtag_vocab_size < 1) fail("hashtag_vocab_size", "must be >= 1");
  if (!(plain_per_day >= 0)) fail("plain_per_day", "must be non-negative");
  if (!(new_alters_per_month >= 0)) fail("new_alters_per_month", "must be non-negative");
  if (!start.ok()) fail("start", "not a valid month");
}

SynthOutput generate(const SynthConfig& config) {
  config.validate();
  SynthOutput out;
  out.truth.config = config;
  for (int i = 0; i < config.n_egos; ++i) {
    auto ego = generate_ego(config, i);
    std::move(ego.events.begin(), ego.events.end(), std::back_inserter(out.events));
    out.truth.egos.push_back(std::move(ego.truth));
  }
  sort_events(out.events);
  return out;
}

}  // namespace egonet
