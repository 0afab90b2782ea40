#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "egonet/core_model.hpp"
#include "egonet/ingestion.hpp"

namespace egonet {

enum class WindowMode { Overlapping, Disjoint };

struct WindowSeries {
  std::vector<Window> windows;
  int step_months = 1;
};

// Month-aligned windows starting at the month of first_ts, advancing by
// step_months; windows ending after the month of last_ts are dropped.
// Throws Error(SpanTooShort) if not even one window fits.
WindowSeries make_windows(const EgoTimeline& timeline, int length_months, int step_months);

// Overlapping steps by one month; Disjoint steps by the window length.
WindowSeries make_windows(const EgoTimeline& timeline, int length_months, WindowMode mode);

// AllDirect networks for each window. A window without direct events yields
// an empty network (k_used == 0), so every tie counts as OUT there.
std::vector<LayeredEgoNetwork> window_networks(const EgoTimeline& timeline, const WindowSeries& series, int k = 5);

// |A ∩ B| / |A ∪ B| over the members of `ring`; nullopt when both are empty.
std::optional<double> ring_jaccard(const LayeredEgoNetwork& a, const LayeredEgoNetwork& b, RingId ring);

struct JumpSample {
  std::string alter_id;
  RingId from = RingId::out();
  RingId to = RingId::out();
  int jumps = 0;
  double normalized = 0.0;
};

// Largest ring distance reachable from `start` (OUT counts as position 6).
int max_jumps_from(RingId start);

// One sample per alter whose position changed between a and b, sorted by alter_id.
std::vector<JumpSample> jump_samples(const LayeredEgoNetwork& a, const LayeredEgoNetwork& b);

// Raw samples for one ego across its series of adjacent windows.
struct EgoTurnover {
  std::string ego_id;
  std::array<std::vector<double>, 5> jaccard;
  // Moves out of ring r (start ring), including moves to OUT.
  std::array<std::vector<JumpSample>, 5> exits;
  // Moves from OUT into ring r.
  std::array<std::vector<JumpSample>, 5> entries;
};

EgoTurnover turnover_samples(std::span<const LayeredEgoNetwork> series);

enum class Aggregation { Macro, Micro };

struct JumpStats {
  std::optional<double> mean_jumps;
  std::optional<double> mean_normalized;
  std::size_t samples = 0;
};

struct RingTurnover {
  std::optional<double> mean_jaccard;
  std::size_t jaccard_samples = 0;
  JumpStats exit;
  JumpStats entry;
  JumpStats pooled;  // exit ∪ entry
};

struct TurnoverReport {
  Aggregation aggregation = Aggregation::Macro;
  std::size_t n_egos = 0;
  std::array<RingTurnover, 5> rings{};
};

// Macro: per-ego means first, then the mean across egos that have samples.
// Micro: one pool of samples across all egos. Sample counts are raw totals either way.
TurnoverReport aggregate_turnover(std::span<const EgoTurnover> egos, Aggregation aggregation = Aggregation::Macro);

// Rows R1..R5 (static), columns R1..R5 + OUT (dynamic).
struct CorrespondenceMatrix {
  std::array<std::array<double, 6>, 5> entries{};
  std::array<bool, 5> empty_row{true, true, true, true, true};
  std::array<std::size_t, 5> row_ties{};
};

CorrespondenceMatrix correspondence(const LayeredEgoNetwork& static_net, std::span<const LayeredEgoNetwork> dynamic_nets);

// Row-wise mean over the egos whose row is populated.
CorrespondenceMatrix average_correspondence(std::span<const CorrespondenceMatrix> matrices);

}  // namespace egonet
