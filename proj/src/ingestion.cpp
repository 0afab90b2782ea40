#include "egonet/ingestion.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>
#include <set>

#include <json.hpp>
#include <unicode/utf8.h>

namespace egonet {

namespace {

using json = nlohmann::json;

bool valid_utf8(std::string_view text) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) return false;
  }
  return true;
}

const json& require(const json& record, const char* field) {
  auto it = record.find(field);
  if (it == record.end()) throw Error(ErrorCode::InvalidEvent, std::string("missing field '") + field + "'");
  return *it;
}

std::string require_string(const json& record, const char* field) {
  const auto& v = require(record, field);
  if (!v.is_string()) throw Error(ErrorCode::InvalidEvent, std::string("field '") + field + "' must be a string");
  auto s = v.get<std::string>();
  if (s.empty()) throw Error(ErrorCode::InvalidEvent, std::string("field '") + field + "' is empty");
  return s;
}

std::vector<std::string> require_string_array(const json& record, const char* field) {
  const auto& v = require(record, field);
  if (!v.is_array()) throw Error(ErrorCode::InvalidEvent, std::string("field '") + field + "' must be an array");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) {
      throw Error(ErrorCode::InvalidEvent, std::string("field '") + field + "' must hold strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

void parse_record(std::string_view line, std::vector<InteractionEvent>& out) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidEvent, std::string("not valid JSON: ") + e.what());
  }
  if (!record.is_object()) throw Error(ErrorCode::InvalidEvent, "record is not a JSON object");

  InteractionEvent base;
  base.tweet_id = require_string(record, "tweet_id");
  base.ego_id = require_string(record, "ego");
  base.channel = parse_channel(require_string(record, "kind"));
  base.timestamp = parse_rfc3339(require_string(record, "ts"));
  auto alters = require_string_array(record, "alters");
  for (const auto& raw : require_string_array(record, "hashtags")) base.hashtags.push_back(normalize_hashtag(raw));

  if (base.channel == Channel::Plain) {
    if (!alters.empty()) throw Error(ErrorCode::InvalidEvent, "plain tweet must have no alters");
    out.push_back(std::move(base));
    return;
  }
  if (alters.empty()) throw Error(ErrorCode::InvalidEvent, "direct tweet needs at least one alter");

  // An alter repeated inside one record is one interaction.
  std::set<std::string> seen;
  std::vector<InteractionEvent> expanded;
  for (auto& alter : alters) {
    if (alter.empty()) throw Error(ErrorCode::InvalidEvent, "empty alter id");
    if (alter == base.ego_id) throw Error(ErrorCode::InvalidEvent, "alter equals ego");
    if (!seen.insert(alter).second) continue;
    InteractionEvent e = base;
    e.alter_id = std::move(alter);
    expanded.push_back(std::move(e));
  }
  std::move(expanded.begin(), expanded.end(), std::back_inserter(out));
}

bool event_order(const InteractionEvent& a, const InteractionEvent& b) {
  if (a.ego_id != b.ego_id) return a.ego_id < b.ego_id;
  if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
  if (a.tweet_id != b.tweet_id) return a.tweet_id < b.tweet_id;
  return a.alter_id < b.alter_id;
}

}  // namespace

void sort_events(std::vector<InteractionEvent>& events) {
  std::stable_sort(events.begin(), events.end(), event_order);
}

ParseResult parse_events(std::string_view text) {
  if (!valid_utf8(text)) throw Error(ErrorCode::FatalFormat, "input is not valid UTF-8");

  ParseResult result;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    try {
      parse_record(line, result.events);
    } catch (const Error& e) {
      result.diagnostics.push_back({line_no, e.what()});
    }
  }
  sort_events(result.events);
  return result;
}

ParseResult parse_events(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_events(text);
}

void write_events(std::ostream& out, std::span<const InteractionEvent> events) {
  for (std::size_t i = 0; i < events.size();) {
    const auto& head = events[i];
    nlohmann::ordered_json record;
    record["tweet_id"] = head.tweet_id;
    record["ego"] = head.ego_id;
    record["kind"] = std::string(to_string(head.channel));
    record["ts"] = format_rfc3339(head.timestamp);
    auto alters = nlohmann::ordered_json::array();
    std::size_t j = i;
    for (; j < events.size() && events[j].ego_id == head.ego_id && events[j].tweet_id == head.tweet_id; ++j) {
      if (events[j].alter_id) alters.push_back(*events[j].alter_id);
    }
    record["alters"] = std::move(alters);
    record["hashtags"] = head.hashtags;
    out << record.dump() << '\n';
    i = j;
  }
}

EgoTimeline build_timeline(std::vector<InteractionEvent> events) {
  if (events.empty()) throw Error(ErrorCode::EmptyInput, "no events for timeline");
  const std::string ego = events.front().ego_id;
  for (const auto& e : events) {
    if (e.ego_id != ego) throw Error(ErrorCode::InvalidArgument, "timeline mixes egos " + ego + " and " + e.ego_id);
  }
  std::stable_sort(events.begin(), events.end(), event_order);

  EgoTimeline t;
  t.ego_id = ego;
  t.first_ts = events.front().timestamp;
  t.last_ts = events.back().timestamp;
  const Month first = month_of(t.first_ts);
  const int n_months = months_between(first, month_of(t.last_ts)) + 1;
  t.months.resize(n_months);
  for (int m = 0; m < n_months; ++m) {
    t.months[m].month = first + std::chrono::months{m};
    t.months[m].days = days_in_month(t.months[m].month);
  }
  for (const auto& e : events) {
    auto& bucket = t.months[months_between(first, month_of(e.timestamp))];
    (is_direct(e.channel) ? bucket.direct_count : bucket.plain_count) += 1;
  }
  t.events = std::move(events);
  return t;
}

std::vector<EgoTimeline> build_timelines(std::vector<InteractionEvent> events) {
  sort_events(events);
  std::vector<EgoTimeline> out;
  auto it = events.begin();
  while (it != events.end()) {
    auto next = std::find_if(it, events.end(), [&](const InteractionEvent& e) { return e.ego_id != it->ego_id; });
    out.push_back(build_timeline(std::vector<InteractionEvent>(std::make_move_iterator(it), std::make_move_iterator(next))));
    it = next;
  }
  return out;
}

void FilterPolicy::validate() const {
  if (min_span_days <= 0) throw Error(ErrorCode::InvalidArgument, "min_span_days must be positive");
  if (min_daily_rate.num <= 0 || min_daily_rate.den <= 0) {
    throw Error(ErrorCode::InvalidArgument, "min_daily_rate must be positive");
  }
  const auto& f = min_qualifying_month_fraction;
  if (f.num <= 0 || f.den <= 0 || f.num > f.den) {
    throw Error(ErrorCode::InvalidArgument, "min_qualifying_month_fraction must be in (0,1]");
  }
}

std::string_view to_string(RejectReason r) {
  return r == RejectReason::SpanTooShort ? "SpanTooShort" : "TooSporadic";
}

std::optional<RejectReason> check_account(const EgoTimeline& t, const FilterPolicy& policy) {
  const auto span = t.last_ts - t.first_ts;
  if (span < std::chrono::days{policy.min_span_days}) return RejectReason::SpanTooShort;

  std::int64_t qualifying = 0;
  for (const auto& m : t.months) {
    if (at_least(m.direct_count, m.days, policy.min_daily_rate)) ++qualifying;
  }
  if (!at_least(qualifying, static_cast<std::int64_t>(t.months.size()), policy.min_qualifying_month_fraction)) {
    return RejectReason::TooSporadic;
  }
  return std::nullopt;
}

FilterResult filter_accounts(std::vector<EgoTimeline> timelines, const FilterPolicy& policy) {
  policy.validate();
  FilterResult result;
  for (auto& t : timelines) {
    if (auto reason = check_account(t, policy)) {
      result.rejected.push_back({t.ego_id, *reason});
    } else {
      result.kept.push_back(std::move(t));
    }
  }
  return result;
}

}  // namespace egonet
