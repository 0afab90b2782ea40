#pragma once

#include <random>
#include <string>
#include <vector>

#include "egonet/core_model.hpp"
#include "egonet/ingestion.hpp"
#include "egonet/time.hpp"

namespace fixture {

inline egonet::InteractionEvent direct(std::string tweet, std::string alter, egonet::Channel ch, std::string_view ts,
                                       std::vector<std::string> tags = {}, std::string ego = "ego") {
  egonet::InteractionEvent e;
  e.tweet_id = std::move(tweet);
  e.ego_id = std::move(ego);
  e.alter_id = std::move(alter);
  e.channel = ch;
  e.timestamp = egonet::parse_rfc3339(ts);
  e.hashtags = std::move(tags);
  return e;
}

inline egonet::InteractionEvent plain(std::string tweet, std::string_view ts, std::vector<std::string> tags = {},
                                      std::string ego = "ego") {
  egonet::InteractionEvent e;
  e.tweet_id = std::move(tweet);
  e.ego_id = std::move(ego);
  e.channel = egonet::Channel::Plain;
  e.timestamp = egonet::parse_rfc3339(ts);
  e.hashtags = std::move(tags);
  return e;
}

inline egonet::Timestamp at(egonet::Month m, int day, int hour = 12) {
  return egonet::month_start(m) + std::chrono::days{day - 1} + std::chrono::hours{hour};
}

inline egonet::Month month(int y, unsigned m) { return std::chrono::year{y} / std::chrono::month{m}; }

// Network with the given alter ids per ring; frequencies decrease with ring.
inline egonet::LayeredEgoNetwork network(const std::vector<std::vector<std::string>>& rings, std::string ego = "ego") {
  egonet::LayeredEgoNetwork net;
  net.ego_id = std::move(ego);
  net.period = egonet::Window{month(2015, 1), 12};
  double f = 1000.0;
  for (const auto& ring : rings) {
    net.rings.emplace_back();
    for (const auto& a : ring) net.rings.back().push_back({a, f});
    f /= 10.0;
  }
  return net;
}

// Random network over alters "a0".."a{pool-1}": each alter lands in a random
// ring or stays out. Empty rings are kept so positions stay fixed.
inline egonet::LayeredEgoNetwork random_network(std::mt19937_64& rng, int pool, std::string ego = "ego") {
  std::vector<std::vector<std::string>> rings(5);
  std::uniform_int_distribution<int> where(0, 6);
  for (int i = 0; i < pool; ++i) {
    const int r = where(rng);
    if (r < 5) rings[r].push_back("a" + std::to_string(i));
  }
  return network(rings, std::move(ego));
}

// Direct events spread over a month: `count` replies to alter "x".
inline void add_month(std::vector<egonet::InteractionEvent>& out, egonet::Month m, int count, const std::string& ego,
                      int& serial) {
  const int days = egonet::days_in_month(m);
  for (int i = 0; i < count; ++i) {
    egonet::InteractionEvent e;
    e.tweet_id = ego + "-" + std::to_string(serial++);
    e.ego_id = ego;
    e.alter_id = "x" + std::to_string(i % 7);
    e.channel = egonet::Channel::Reply;
    e.timestamp = at(m, 1 + (i * days) / std::max(count, 1));
    out.push_back(std::move(e));
  }
}

// Timeline with the given direct count per consecutive month.
inline egonet::EgoTimeline timeline_with_counts(const std::string& ego, egonet::Month first,
                                                const std::vector<int>& counts) {
  std::vector<egonet::InteractionEvent> ev;
  int serial = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    add_month(ev, first + std::chrono::months{static_cast<int>(i)}, counts[i], ego, serial);
  }
  return egonet::build_timeline(std::move(ev));
}

}  // namespace fixture
