#pragma once

// nlohmann::json conversions for the domain and report types.

#include <json.hpp>

#include "egonet/core_model.hpp"
#include "egonet/dynamic_analysis.hpp"
#include "egonet/hashtag_analysis.hpp"
#include "egonet/ingestion.hpp"
#include "egonet/regression.hpp"
#include "egonet/static_analysis.hpp"
#include "egonet/synthgen.hpp"

namespace egonet {

using json = nlohmann::ordered_json;

void to_json(json& j, const InteractionEvent& e);
void from_json(const json& j, InteractionEvent& e);

void to_json(json& j, const Window& w);
void from_json(const json& j, Window& w);
void to_json(json& j, const FullSpan& s);
void from_json(const json& j, FullSpan& s);

json period_to_json(const Period& p);
Period period_from_json(const json& j);

void to_json(json& j, const RingId& r);
void from_json(const json& j, RingId& r);

void to_json(json& j, const AlterFrequency& a);
void from_json(const json& j, AlterFrequency& a);

void to_json(json& j, const LayeredEgoNetwork& net);
void from_json(const json& j, LayeredEgoNetwork& net);

void to_json(json& j, const MonthBucket& m);

void to_json(json& j, const UsageStats& u);
void to_json(json& j, const UsageMeans& u);
void to_json(json& j, const StatSummary& s);
void to_json(json& j, const PopulationSummary& p);

void to_json(json& j, const JumpStats& s);
void to_json(json& j, const RingTurnover& r);
void to_json(json& j, const TurnoverReport& t);
void to_json(json& j, const CorrespondenceMatrix& m);

void to_json(json& j, const HashtagTieStats& s);
void to_json(json& j, const GroupMeans& g);
void to_json(json& j, const LayerHashtagRow& r);
void to_json(json& j, const LayerHashtagReport& r);
void to_json(json& j, const GrowthSummary& g);

void to_json(json& j, const RegressionModel& m);
void to_json(json& j, const RegressionGridRow& r);

void to_json(json& j, const SynthConfig& c);
void from_json(const json& j, SynthConfig& c);
void to_json(json& j, const PlantedTie& t);
void to_json(json& j, const GroundTruth& g);

// Networks file written by `build` and read by later stages.
json networks_to_json(std::span<const LayeredEgoNetwork> networks);
std::vector<LayeredEgoNetwork> networks_from_json(const json& j);

}  // namespace egonet
