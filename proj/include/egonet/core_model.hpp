#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "egonet/error.hpp"
#include "egonet/time.hpp"

namespace egonet {

enum class Channel { Reply, Mention, Retweet, Plain };

// AllDirect unions the three direct channels; nothing selects Plain.
enum class ChannelSelector { Reply, Mention, Retweet, AllDirect };

inline constexpr bool is_direct(Channel c) { return c != Channel::Plain; }
bool matches(ChannelSelector selector, Channel channel);

std::string_view to_string(Channel c);
std::string_view to_string(ChannelSelector s);
Channel parse_channel(std::string_view text);
ChannelSelector parse_selector(std::string_view text);

struct InteractionEvent {
  std::string tweet_id;
  std::string ego_id;
  std::optional<std::string> alter_id;  // absent iff channel == Plain
  Channel channel = Channel::Plain;
  Timestamp timestamp{};
  std::vector<std::string> hashtags;  // normalized, duplicates preserved

  bool operator==(const InteractionEvent&) const = default;
};

// Throws Error(InvalidEvent) naming the violated invariant.
void validate(const InteractionEvent& event);

// Lowercases (Unicode-aware) and strips one leading '#'. Throws
// Error(InvalidEvent) if the result is empty or contains '#' or whitespace.
std::string normalize_hashtag(std::string_view raw);

// (timestamp, tweet_id) ordering used everywhere events are sequenced.
bool chronological(const InteractionEvent& a, const InteractionEvent& b);

// Time-ordered interaction history between one ego and one alter.
struct TieSeries {
  std::string ego_id;
  std::string alter_id;
  std::vector<InteractionEvent> events;

  const InteractionEvent& first_contact() const { return events.front(); }
};

// Groups an ego's events matching `selector` into ties, sorted by alter_id.
// Events inside each tie keep chronological order.
std::vector<TieSeries> collect_ties(std::span<const InteractionEvent> ego_events,
                                    ChannelSelector selector);

// Month-aligned half-open interval [start, start + length_months).
struct Window {
  Month start{};
  int length_months = 12;

  Timestamp begin() const { return month_start(start); }
  Timestamp end() const;
  double span_days() const { return days_between(begin(), end()); }
  bool contains(Timestamp ts) const { return ts >= begin() && ts < end(); }

  bool operator==(const Window&) const = default;
};

// Closed interval [first, last] covering an ego's whole history.
struct FullSpan {
  Timestamp first{};
  Timestamp last{};

  double span_days() const { return days_between(first, last); }
  bool contains(Timestamp ts) const { return ts >= first && ts <= last; }

  bool operator==(const FullSpan&) const = default;
};

using Period = std::variant<FullSpan, Window>;

bool period_contains(const Period& period, Timestamp ts);
double period_span_days(const Period& period);

// Ring 1..5 (1 innermost) or OUT, which sits at position 6 for jump arithmetic.
class RingId {
 public:
  static constexpr int kOutPosition = 6;

  static RingId ring(int index);
  static constexpr RingId out() { return RingId(kOutPosition); }

  constexpr int position() const { return position_; }
  constexpr bool is_out() const { return position_ == kOutPosition; }

  constexpr auto operator<=>(const RingId&) const = default;

 private:
  constexpr explicit RingId(int p) : position_(p) {}
  int position_ = kOutPosition;
};

std::string to_string(RingId r);

struct AlterFrequency {
  std::string alter_id;
  double frequency = 0.0;  // contacts per 365-day year

  bool operator==(const AlterFrequency&) const = default;
};

// An ego's ties clustered into frequency-ordered rings. rings[0] is R1.
// Within a ring, alters are sorted by descending frequency, then alter_id.
struct LayeredEgoNetwork {
  std::string ego_id;
  ChannelSelector channel = ChannelSelector::AllDirect;
  Period period;
  std::vector<std::vector<AlterFrequency>> rings;

  int k_used() const { return static_cast<int>(rings.size()); }
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  bool operator==(const LayeredEgoNetwork&) const = default;
};

// alter_id -> ring position (1..k_used).
using RingIndex = std::unordered_map<std::string, int>;
RingIndex ring_index(const LayeredEgoNetwork& net);

// OUT when the alter is not part of the network.
RingId position_of(const RingIndex& index, const std::string& alter_id);

// |C1|..|C5|. Throws Error(DegenerateNetwork) unless k_used == 5.
std::array<int, 5> circle_sizes(const LayeredEgoNetwork& net);

// Alter ids of circle C_i (rings 1..i), sorted.
std::vector<std::string> circle_members(const LayeredEgoNetwork& net, int i);

}  // namespace egonet
