#include "egonet/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "egonet/layering.hpp"
#include "egonet/parallel.hpp"
#include "egonet/report.hpp"
#include "egonet/serialize.hpp"

namespace egonet::cli {

namespace fs = std::filesystem;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputSpec {
  std::string label;
  fs::path path;
};

struct RunConfig {
  std::vector<std::string> inputs;
  std::string out = ".";
  std::string channel = "all";
  int window_months = 12;
  std::optional<int> step_months;  // default: disjoint for turnover, monthly for correspondence
  int k = 5;
  double confidence = 0.95;
  std::string agg = "macro";
  std::string format = "csv";
  unsigned jobs = 1;

  // synth
  std::uint64_t seed = 1;
  std::string config_path;
  std::optional<int> egos;
  std::optional<int> months;
  std::vector<double> churn;
  std::optional<double> activation_prob;
  std::optional<double> new_alters;
  bool bursty = false;

  ChannelSelector selector() const { return parse_selector(channel); }
  bool json_format() const { return format == "json"; }

  void validate() const {
    auto fail = [](const std::string& field, const std::string& why) {
      throw Error(ErrorCode::InvalidArgument, "--" + field + ": " + why);
    };
    if (window_months < 1) fail("window-months", "must be >= 1");
    if (step_months && *step_months < 1) fail("step-months", "must be >= 1");
    if (k < 1 || k > 5) fail("k", "must be in 1..5");
    if (!(confidence > 0.0 && confidence < 1.0)) fail("confidence", "must be in (0,1)");
    if (jobs < 1) fail("jobs", "must be >= 1");
  }
};

InputSpec parse_input(const std::string& text) {
  const auto eq = text.find('=');
  if (eq != std::string::npos && eq > 0 && text.substr(0, eq).find('/') == std::string::npos) {
    return {text.substr(0, eq), text.substr(eq + 1)};
  }
  fs::path p(text);
  return {p.stem().string(), p};
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << content;
  if (!out.flush()) throw IoError("write failed for '" + path.string() + "'");
}

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& err) : cfg_(cfg), err_(err) {
    for (const auto& s : cfg.inputs) inputs_.push_back(parse_input(s));
    if (inputs_.empty()) throw Error(ErrorCode::InvalidArgument, "--input: at least one input is required");
    std::map<std::string, int> seen;
    for (const auto& in : inputs_) {
      if (seen[in.label]++) throw Error(ErrorCode::InvalidArgument, "--input: duplicate label '" + in.label + "'");
    }
    fs::create_directories(cfg.out);
  }

  const std::vector<InputSpec>& inputs() const { return inputs_; }

  std::vector<EgoTimeline> timelines(const InputSpec& in) {
    const auto text = read_file(in.path);
    ParseResult parsed;
    try {
      parsed = parse_events(std::string_view(text));
    } catch (const Error& e) {
      throw Error(e.code(), in.path.string() + ": " + e.what());
    }
    for (const auto& d : parsed.diagnostics) err_ << in.path.string() << ":" << d.line << ": skipped: " << d.reason << "\n";
    if (parsed.events.empty()) throw Error(ErrorCode::EmptyInput, in.path.string() + ": no valid events");
    return build_timelines(std::move(parsed.events));
  }

  // Applies fn to every timeline in parallel. Egos whose analysis fails with a
  // domain error are reported and left out.
  template <typename Fn>
  auto per_ego(const std::vector<EgoTimeline>& tls, Fn fn) {
    using R = decltype(fn(tls.front()));
    auto results = parallel_map(tls.size(), cfg_.jobs, [&](std::size_t i) -> std::variant<R, std::string> {
      try {
        return fn(tls[i]);
      } catch (const Error& e) {
        return std::string(e.what());
      }
    });
    std::vector<R> ok;
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (auto* r = std::get_if<R>(&results[i])) {
        ok.push_back(std::move(*r));
      } else {
        err_ << "warning: ego " << tls[i].ego_id << ": " << std::get<std::string>(results[i]) << "\n";
      }
    }
    return ok;
  }

  fs::path out_path(const std::string& base, const std::string& ext, const std::string& label = {}) const {
    const bool multi = inputs_.size() > 1 && !label.empty();
    return fs::path(cfg_.out) / (base + (multi ? "." + label : "") + ext);
  }

  void emit(const std::string& base, const CsvTable& table, const json& j) const {
    if (cfg_.json_format()) {
      write_file(out_path(base, ".json"), j.dump(2) + "\n");
    } else {
      std::ostringstream ss;
      table.write(ss);
      write_file(out_path(base, ".csv"), ss.str());
    }
  }

  std::ostream& err() { return err_; }

 private:
  const RunConfig& cfg_;
  std::ostream& err_;
  std::vector<InputSpec> inputs_;
};

std::string events_text(const std::vector<InteractionEvent>& events) {
  std::ostringstream ss;
  write_events(ss, events);
  return ss.str();
}

void cmd_filter(const RunConfig& cfg, Session& s) {
  for (const auto& in : s.inputs()) {
    auto result = filter_accounts(s.timelines(in));
    std::vector<InteractionEvent> kept;
    for (const auto& t : result.kept) kept.insert(kept.end(), t.events.begin(), t.events.end());
    sort_events(kept);
    write_file(s.out_path("filtered_events", ".jsonl", in.label), events_text(kept));

    const auto table = filter_table(result);
    if (cfg.json_format()) {
      json j{{"kept", json::array()}, {"rejected", json::array()}};
      for (const auto& t : result.kept) j["kept"].push_back(t.ego_id);
      for (const auto& r : result.rejected) j["rejected"].push_back({{"ego", r.ego_id}, {"reason", to_string(r.reason)}});
      write_file(s.out_path("filter_report", ".json", in.label), j.dump(2) + "\n");
    } else {
      std::ostringstream ss;
      table.write(ss);
      write_file(s.out_path("filter_report", ".csv", in.label), ss.str());
    }
  }
}

std::vector<LayeredEgoNetwork> static_networks(const RunConfig& cfg, Session& s, const std::vector<EgoTimeline>& tls) {
  const auto selector = cfg.selector();
  return s.per_ego(tls, [&](const EgoTimeline& t) { return build_ego_network(t, selector, full_span(t), cfg.k); });
}

void cmd_build(const RunConfig& cfg, Session& s) {
  for (const auto& in : s.inputs()) {
    const auto nets = static_networks(cfg, s, s.timelines(in));
    write_file(s.out_path("networks", ".json", in.label), networks_to_json(nets).dump(2) + "\n");
  }
}

void cmd_static(const RunConfig& cfg, Session& s) {
  std::vector<Labeled<std::vector<UsageStats>>> usage;
  std::vector<Labeled<UsageMeans>> means;
  std::vector<Labeled<PopulationSummary>> population;
  json j{{"samples", json::array()}};

  for (const auto& in : s.inputs()) {
    json sample{{"sample", in.label}};
    std::vector<LayeredEgoNetwork> nets;
    if (in.path.extension() == ".json") {
      nets = networks_from_json(json::parse(read_file(in.path)));
    } else {
      const auto tls = s.timelines(in);
      auto rows = s.per_ego(tls, [](const EgoTimeline& t) { return usage_stats(t); });
      nets = static_networks(cfg, s, tls);
      means.push_back({in.label, mean_usage(rows)});
      sample["usage"] = rows;
      sample["usage_means"] = means.back().value;
      usage.push_back({in.label, std::move(rows)});
    }
    try {
      population.push_back({in.label, population_summary(nets, cfg.confidence)});
      sample["population"] = population.back().value;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientSample && e.code() != ErrorCode::UndefinedC) throw;
      s.err() << "warning: sample " << in.label << ": " << e.what() << "\n";
      sample["population"] = nullptr;
    }
    j["samples"].push_back(std::move(sample));
  }

  if (cfg.json_format()) {
    s.emit("static_report", CsvTable({}), j);
    return;
  }
  if (!usage.empty()) {
    s.emit("usage", usage_table(usage), j);
    s.emit("usage_means", usage_means_table(means), j);
  }
  s.emit("population", population_table(population), j);
}

WindowSeries windows_for(const RunConfig& cfg, const EgoTimeline& t, int default_step) {
  return make_windows(t, cfg.window_months, cfg.step_months.value_or(default_step));
}

void cmd_dynamics(const RunConfig& cfg, Session& s) {
  const auto agg = cfg.agg == "micro" ? Aggregation::Micro : Aggregation::Macro;
  std::vector<Labeled<TurnoverReport>> reports;
  const int step = cfg.step_months.value_or(cfg.window_months);
  json j{{"window_months", cfg.window_months}, {"step_months", step}, {"samples", json::array()}};
  for (const auto& in : s.inputs()) {
    const auto tls = s.timelines(in);
    const auto egos = s.per_ego(tls, [&](const EgoTimeline& t) {
      return turnover_samples(window_networks(t, windows_for(cfg, t, step), cfg.k));
    });
    if (egos.empty()) throw Error(ErrorCode::SpanTooShort, "sample " + in.label + ": no ego spans a full window");
    reports.push_back({in.label, aggregate_turnover(egos, agg)});
    j["samples"].push_back({{"sample", in.label}, {"turnover", reports.back().value}});
  }
  s.emit("turnover", turnover_table(reports), j);
}

void cmd_correspond(const RunConfig& cfg, Session& s) {
  std::vector<Labeled<CorrespondenceMatrix>> matrices;
  const int step = cfg.step_months.value_or(1);
  json j{{"window_months", cfg.window_months}, {"step_months", step}, {"samples", json::array()}};
  for (const auto& in : s.inputs()) {
    const auto tls = s.timelines(in);
    const auto per = s.per_ego(tls, [&](const EgoTimeline& t) {
      const auto stat = build_ego_network(t, ChannelSelector::AllDirect, full_span(t), cfg.k);
      return correspondence(stat, window_networks(t, windows_for(cfg, t, step), cfg.k));
    });
    if (per.empty()) throw Error(ErrorCode::SpanTooShort, "sample " + in.label + ": no ego spans a full window");
    matrices.push_back({in.label, average_correspondence(per)});
    j["samples"].push_back({{"sample", in.label}, {"matrix", matrices.back().value}});
  }
  s.emit("correspondence", correspondence_table(matrices), j);
}

std::vector<TieRecord> tie_records(const RunConfig& cfg, Session& s, const std::vector<EgoTimeline>& tls) {
  const auto selector = cfg.selector();
  auto per = s.per_ego(tls, [&](const EgoTimeline& t) {
    const auto net = build_ego_network(t, selector, full_span(t), cfg.k);
    const auto ties = collect_ties(t.events, selector);
    return join_ties(net, ties);
  });
  std::vector<TieRecord> all;
  for (auto& v : per) std::move(v.begin(), v.end(), std::back_inserter(all));
  return all;
}

void cmd_hashtags(const RunConfig& cfg, Session& s) {
  std::vector<LayerHashtagReport> layers;
  std::vector<Labeled<GrowthSummary>> growth;
  json j{{"samples", json::array()}};
  for (const auto& in : s.inputs()) {
    const auto tls = s.timelines(in);
    layers.push_back(layer_hashtag_report(in.label, tie_records(cfg, s, tls)));
    const auto series = s.per_ego(tls, [](const EgoTimeline& t) { return growth_series(t); });
    growth.push_back({in.label, summarize_growth(series)});
    j["samples"].push_back({{"sample", in.label}, {"layers", layers.back()}, {"growth", growth.back().value}});
  }
  if (cfg.json_format()) {
    s.emit("hashtags_report", CsvTable({}), j);
    return;
  }
  s.emit("hashtags", hashtag_table(layers), j);
  s.emit("growth", growth_table(growth), j);
}

void cmd_regress(const RunConfig& cfg, Session& s) {
  std::vector<RegressionGridRow> rows;
  for (const auto& in : s.inputs()) {
    const auto records = tie_records(cfg, s, s.timelines(in));
    for (auto& r : ring_regressions(in.label, records)) rows.push_back(std::move(r));
  }
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.cells.size(); ++c) {
      if (!r.cells[c].model) {
        s.err() << "note: " << r.sample << "/" << to_string(r.group) << "/" << kRingColumns[c] << ": "
                << r.cells[c].note << "\n";
      }
    }
  }
  const json j{{"rows", rows}};
  if (cfg.json_format()) {
    s.emit("regression", CsvTable({}), j);
    return;
  }
  s.emit("regression_r2", regression_r2_table(rows), j);
  s.emit("regression_signs", regression_sign_table(rows), j);
}

void cmd_synth(const RunConfig& cfg, std::ostream& err) {
  SynthConfig sc;
  if (!cfg.config_path.empty()) {
    try {
      json::parse(read_file(cfg.config_path)).get_to(sc);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::InvalidConfig, cfg.config_path + ": " + e.what());
    }
  }
  sc.seed = cfg.seed;
  if (cfg.egos) sc.n_egos = *cfg.egos;
  if (cfg.months) sc.duration_months = *cfg.months;
  if (cfg.activation_prob) sc.activation_prob = *cfg.activation_prob;
  if (cfg.new_alters) sc.new_alters_per_month = *cfg.new_alters;
  if (cfg.bursty) sc.bursty = true;
  if (cfg.churn.size() == 1) {
    sc.churn_per_ring.fill(cfg.churn.front());
  } else if (cfg.churn.size() == 5) {
    std::copy(cfg.churn.begin(), cfg.churn.end(), sc.churn_per_ring.begin());
  } else if (!cfg.churn.empty()) {
    throw Error(ErrorCode::InvalidConfig, "churn_per_ring: give one value or five");
  }
  const auto out = generate(sc);
  fs::create_directories(cfg.out);
  write_file(fs::path(cfg.out) / "events.jsonl", events_text(out.events));
  write_file(fs::path(cfg.out) / "ground_truth.json", json(out.truth).dump(2) + "\n");
  err << "synth: " << out.events.size() << " events for " << sc.n_egos << " egos\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& err) {
  CLI::App app{"Ego-network analysis of directed interaction logs", "egonet"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.inputs, "events JSONL (or networks.json for static-report); LABEL=PATH names a sample")
        ->required();
    sub->add_option("--out", cfg.out, "output directory");
    sub->add_option("--channel", cfg.channel)->check(CLI::IsMember({"reply", "mention", "retweet", "all"}));
    sub->add_option("--k", cfg.k, "maximum number of rings");
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads");
  };
  auto windowed = [&](CLI::App* sub) {
    sub->add_option("--window-months", cfg.window_months);
    sub->add_option("--step-months", cfg.step_months);
  };

  auto* filter = app.add_subcommand("filter", "drop sporadic and short-lived accounts");
  common(filter);
  auto* build = app.add_subcommand("build", "layered ego networks over each account's full span");
  common(build);
  auto* stat = app.add_subcommand("static-report", "usage statistics, circle sizes and scaling ratios");
  common(stat);
  stat->add_option("--confidence", cfg.confidence);
  auto* dyn = app.add_subcommand("dynamics-report", "ring turnover between consecutive windows");
  common(dyn);
  windowed(dyn);
  dyn->add_option("--agg", cfg.agg)->check(CLI::IsMember({"macro", "micro"}));
  auto* corr = app.add_subcommand("correspond", "static vs windowed ring correspondence");
  common(corr);
  windowed(corr);
  auto* tags = app.add_subcommand("hashtags-report", "hashtag activation per ring and monthly growth");
  common(tags);
  auto* reg = app.add_subcommand("regress", "per-ring regressions of frequency on hashtag predictors");
  common(reg);

  auto* synth = app.add_subcommand("synth", "generate a synthetic population with ground truth");
  synth->add_option("--out", cfg.out, "output directory");
  synth->add_option("--seed", cfg.seed);
  synth->add_option("--config", cfg.config_path, "JSON file with generator settings");
  synth->add_option("--egos", cfg.egos);
  synth->add_option("--months", cfg.months);
  synth->add_option("--churn", cfg.churn, "per-ring churn probability (one value or five)")->delimiter(',');
  synth->add_option("--activation-prob", cfg.activation_prob);
  synth->add_option("--new-alters", cfg.new_alters, "one-off alters per month");
  synth->add_flag("--bursty", cfg.bursty);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, err, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.validate();
    if (synth->parsed()) {
      cmd_synth(cfg, err);
      return kExitOk;
    }
    Session session(cfg, err);
    if (filter->parsed()) cmd_filter(cfg, session);
    if (build->parsed()) cmd_build(cfg, session);
    if (stat->parsed()) cmd_static(cfg, session);
    if (dyn->parsed()) cmd_dynamics(cfg, session);
    if (corr->parsed()) cmd_correspond(cfg, session);
    if (tags->parsed()) cmd_hashtags(cfg, session);
    if (reg->parsed()) cmd_regress(cfg, session);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::InvalidConfig;
    return usage ? kExitUsage : kExitData;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitData;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace egonet::cli
