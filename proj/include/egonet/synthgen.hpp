#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egonet/core_model.hpp"

namespace egonet {

// Planted population: each ego has ring_sizes[r] tie slots in ring r+1
// contacted at ring_base_freq / decay^r per year (homogeneous Poisson).
// Slot occupants are replaced with probability churn_per_ring[r] at every
// churn-window boundary.
struct SynthConfig {
  int n_egos = 20;
  std::array<int, 5> ring_sizes{1, 5, 15, 50, 150};
  double ring_base_freq = 81.0;  // contacts/year in R1
  double decay = 3.0;            // per-ring frequency divisor
  int duration_months = 120;
  int churn_window_months = 12;
  std::array<double, 5> churn_per_ring{};
  double activation_prob = 0.15;          // first tweet of a tie carries a hashtag
  double hashtag_repeat_prob = 0.3;       // later tweets of an activated tie reuse it
  double background_hashtag_prob = 0.1;   // any non-first tweet gets a random tag
  int hashtag_vocab_size = 1000;
  double plain_per_day = 1.0;
  double new_alters_per_month = 0.0;  // Poisson arrivals of one-off alters
  bool bursty = false;                // two-state month-level rate modulation
  Month start = std::chrono::year{2010} / std::chrono::January;
  std::uint64_t seed = 1;

  // Throws Error(InvalidConfig) naming the offending field.
  void validate() const;
};

inline constexpr const char* kSynthPrng = "mt19937_64/splitmix64";

struct PlantedTie {
  std::string alter_id;
  std::vector<int> ring_per_window;  // 1..5, 0 when not a member in that churn window
  bool transient = false;            // one-off arrival outside the ring structure
  bool activated = false;
  std::optional<std::string> h_act;
  int tweets = 0;
  int tweets_with_h_act = 0;

  // The ring if it never changed and the tie was always present, else nullopt.
  std::optional<int> stable_ring() const;
};

struct EgoGroundTruth {
  std::string ego_id;
  std::vector<PlantedTie> ties;
};

struct GroundTruth {
  std::string prng = kSynthPrng;
  SynthConfig config;
  std::vector<EgoGroundTruth> egos;
};

struct SynthOutput {
  std::vector<InteractionEvent> events;  // sorted by (ego, timestamp, tweet_id)
  GroundTruth truth;
};

// Deterministic for a fixed config; egos use independent sub-seeds.
SynthOutput generate(const SynthConfig& config);

}  // namespace egonet
