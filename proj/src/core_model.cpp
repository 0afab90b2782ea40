#include "egonet/core_model.hpp"

#include <algorithm>
#include <map>

#include <unicode/uchar.h>
#include <unicode/locid.h>
#include <unicode/unistr.h>

namespace egonet {

bool matches(ChannelSelector selector, Channel channel) {
  switch (selector) {
    case ChannelSelector::Reply: return channel == Channel::Reply;
    case ChannelSelector::Mention: return channel == Channel::Mention;
    case ChannelSelector::Retweet: return channel == Channel::Retweet;
    case ChannelSelector::AllDirect: return is_direct(channel);
  }
  return false;
}

std::string_view to_string(Channel c) {
  switch (c) {
    case Channel::Reply: return "reply";
    case Channel::Mention: return "mention";
    case Channel::Retweet: return "retweet";
    case Channel::Plain: return "plain";
  }
  return "?";
}

std::string_view to_string(ChannelSelector s) {
  switch (s) {
    case ChannelSelector::Reply: return "reply";
    case ChannelSelector::Mention: return "mention";
    case ChannelSelector::Retweet: return "retweet";
    case ChannelSelector::AllDirect: return "all";
  }
  return "?";
}

Channel parse_channel(std::string_view text) {
  if (text == "reply") return Channel::Reply;
  if (text == "mention") return Channel::Mention;
  if (text == "retweet") return Channel::Retweet;
  if (text == "plain") return Channel::Plain;
  throw Error(ErrorCode::InvalidEvent, "unknown kind '" + std::string(text) + "'");
}

ChannelSelector parse_selector(std::string_view text) {
  if (text == "reply") return ChannelSelector::Reply;
  if (text == "mention") return ChannelSelector::Mention;
  if (text == "retweet") return ChannelSelector::Retweet;
  if (text == "all") return ChannelSelector::AllDirect;
  throw Error(ErrorCode::InvalidArgument, "unknown channel '" + std::string(text) + "'");
}

namespace {

bool is_valid_tag(const icu::UnicodeString& tag) {
  if (tag.isEmpty()) return false;
  for (int32_t i = 0; i < tag.length();) {
    const UChar32 c = tag.char32At(i);
    if (c == U'#' || u_isUWhiteSpace(c) || u_isWhitespace(c)) return false;
    i += U16_LENGTH(c);
  }
  return true;
}

}  // namespace

std::string normalize_hashtag(std::string_view raw) {
  if (!raw.empty() && raw.front() == '#') raw.remove_prefix(1);
  icu::UnicodeString tag = icu::UnicodeString::fromUTF8(icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  tag.toLower(icu::Locale::getRoot());
  if (!is_valid_tag(tag)) {
    throw Error(ErrorCode::InvalidEvent, "invalid hashtag '" + std::string(raw) + "'");
  }
  std::string out;
  tag.toUTF8String(out);
  return out;
}

void validate(const InteractionEvent& e) {
  if (e.tweet_id.empty()) throw Error(ErrorCode::InvalidEvent, "empty tweet_id");
  if (e.ego_id.empty()) throw Error(ErrorCode::InvalidEvent, "empty ego id");
  if (e.alter_id.has_value() != is_direct(e.channel)) {
    throw Error(ErrorCode::InvalidEvent, "alter must be present iff the tweet is direct (tweet " + e.tweet_id + ")");
  }
  if (e.alter_id && e.alter_id->empty()) throw Error(ErrorCode::InvalidEvent, "empty alter id");
  if (e.alter_id && *e.alter_id == e.ego_id) {
    throw Error(ErrorCode::InvalidEvent, "alter equals ego (tweet " + e.tweet_id + ")");
  }
  for (const auto& tag : e.hashtags) {
    if (tag.empty() || normalize_hashtag(tag) != tag) {
      throw Error(ErrorCode::InvalidEvent, "hashtag not normalized: '" + tag + "'");
    }
  }
}

bool chronological(const InteractionEvent& a, const InteractionEvent& b) {
  if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
  return a.tweet_id < b.tweet_id;
}

std::vector<TieSeries> collect_ties(std::span<const InteractionEvent> ego_events, ChannelSelector selector) {
  std::map<std::string, TieSeries> by_alter;
  for (const auto& e : ego_events) {
    if (!matches(selector, e.channel)) continue;
    auto& tie = by_alter[*e.alter_id];
    if (tie.events.empty()) {
      tie.ego_id = e.ego_id;
      tie.alter_id = *e.alter_id;
    }
    tie.events.push_back(e);
  }
  std::vector<TieSeries> ties;
  ties.reserve(by_alter.size());
  for (auto& [alter, tie] : by_alter) {
    std::stable_sort(tie.events.begin(), tie.events.end(), chronological);
    ties.push_back(std::move(tie));
  }
  return ties;
}

Timestamp Window::end() const { return month_start(start + std::chrono::months{length_months}); }

bool period_contains(const Period& period, Timestamp ts) {
  return std::visit([ts](const auto& p) { return p.contains(ts); }, period);
}

double period_span_days(const Period& period) {
  return std::visit([](const auto& p) { return p.span_days(); }, period);
}

RingId RingId::ring(int index) {
  if (index < 1 || index > 5) {
    throw Error(ErrorCode::InvalidArgument, "ring index must be in 1..5, got " + std::to_string(index));
  }
  return RingId(index);
}

std::string to_string(RingId r) { return r.is_out() ? "OUT" : "R" + std::to_string(r.position()); }

std::size_t LayeredEgoNetwork::size() const {
  std::size_t n = 0;
  for (const auto& ring : rings) n += ring.size();
  return n;
}

RingIndex ring_index(const LayeredEgoNetwork& net) {
  RingIndex index;
  index.reserve(net.size());
  for (std::size_t r = 0; r < net.rings.size(); ++r) {
    for (const auto& a : net.rings[r]) index.emplace(a.alter_id, static_cast<int>(r) + 1);
  }
  return index;
}

RingId position_of(const RingIndex& index, const std::string& alter_id) {
  auto it = index.find(alter_id);
  return it == index.end() ? RingId::out() : RingId::ring(it->second);
}

std::array<int, 5> circle_sizes(const LayeredEgoNetwork& net) {
  if (net.k_used() != 5) {
    throw Error(ErrorCode::DegenerateNetwork,
                "ego " + net.ego_id + " has " + std::to_string(net.k_used()) + " rings, circles need 5");
  }
  std::array<int, 5> sizes{};
  int total = 0;
  for (int i = 0; i < 5; ++i) {
    total += static_cast<int>(net.rings[i].size());
    sizes[i] = total;
  }
  return sizes;
}

std::vector<std::string> circle_members(const LayeredEgoNetwork& net, int i) {
  if (i < 1 || i > net.k_used()) {
    throw Error(ErrorCode::InvalidArgument, "circle index out of range: " + std::to_string(i));
  }
  std::vector<std::string> members;
  for (int r = 0; r < i; ++r) {
    for (const auto& a : net.rings[r]) members.push_back(a.alter_id);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace egonet
