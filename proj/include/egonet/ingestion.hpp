#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egonet/core_model.hpp"

namespace egonet {

struct LineDiagnostic {
  std::size_t line = 0;  // 1-based
  std::string reason;
};

struct ParseResult {
  std::vector<InteractionEvent> events;  // sorted by (ego_id, timestamp, tweet_id)
  std::vector<LineDiagnostic> diagnostics;
};

// Newline-delimited JSON records:
//   {"tweet_id", "ego", "kind", "ts", "alters", "hashtags"}
// A record with k alters expands to k events. Malformed lines produce a
// diagnostic and are skipped. Throws Error(FatalFormat) if the input is not
// valid UTF-8.
ParseResult parse_events(std::string_view text);
ParseResult parse_events(std::istream& in);

// Inverse of parse_events: events sharing (ego, tweet_id) are folded back into
// one record. Input must already be sorted as parse_events emits it.
void write_events(std::ostream& out, std::span<const InteractionEvent> events);

void sort_events(std::vector<InteractionEvent>& events);

struct MonthBucket {
  Month month{};
  int direct_count = 0;
  int plain_count = 0;
  int days = 0;

  bool operator==(const MonthBucket&) const = default;
};

struct EgoTimeline {
  std::string ego_id;
  std::vector<InteractionEvent> events;  // chronological
  Timestamp first_ts{};
  Timestamp last_ts{};
  std::vector<MonthBucket> months;  // every calendar month first..last, zeros included
};

// Throws Error(EmptyInput) on no events, Error(InvalidArgument) on mixed egos.
EgoTimeline build_timeline(std::vector<InteractionEvent> events);

// Splits a mixed stream by ego; result sorted by ego_id.
std::vector<EgoTimeline> build_timelines(std::vector<InteractionEvent> events);

// Non-negative rational compared exactly by cross-multiplication.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// a/b >= r, with b > 0.
inline bool at_least(std::int64_t a, std::int64_t b, Rational r) { return a * r.den >= r.num * b; }

struct FilterPolicy {
  int min_span_days = 183;
  Rational min_daily_rate{1, 3};
  Rational min_qualifying_month_fraction{1, 2};

  void validate() const;
};

enum class RejectReason { SpanTooShort, TooSporadic };
std::string_view to_string(RejectReason r);

struct Rejection {
  std::string ego_id;
  RejectReason reason;
};

struct FilterResult {
  std::vector<EgoTimeline> kept;
  std::vector<Rejection> rejected;
};

// Keeps an ego iff its history spans >= min_span_days and at least
// min_qualifying_month_fraction of its calendar months reach
// direct_count / days_in_month >= min_daily_rate.
FilterResult filter_accounts(std::vector<EgoTimeline> timelines, const FilterPolicy& policy = {});

// Single-ego form of the rule above; nullopt means kept.
std::optional<RejectReason> check_account(const EgoTimeline& timeline, const FilterPolicy& policy);

}  // namespace egonet
