#include "egonet/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace egonet {

std::string format_fixed(double value, int decimals) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  if (value == 0.0) value = 0.0;  // no "-0.000"
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  if (ec != std::errc()) return "nan";
  std::string s(buf, ptr);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::string format_fixed(const std::optional<double>& value, int decimals) {
  return value ? format_fixed(*value, decimals) : std::string();
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw Error(ErrorCode::InvalidArgument, "CSV row width differs from header");
  rows_.push_back(std::move(row));
}

namespace {

void write_field(std::ostream& out, const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) {
    out << field;
    return;
  }
  out << '"';
  for (char c : field) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

void write_line(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    write_field(out, fields[i]);
  }
  out << '\n';
}

constexpr int kPct = 2;
constexpr int kNum = 6;

std::string num(double v) { return format_fixed(v, kNum); }
std::string num(const std::optional<double>& v) { return format_fixed(v, kNum); }

}  // namespace

void CsvTable::write(std::ostream& out) const {
  write_line(out, header_);
  for (const auto& row : rows_) write_line(out, row);
}

CsvTable filter_table(const FilterResult& result) {
  CsvTable t({"ego", "status", "reason"});
  std::vector<std::vector<std::string>> rows;
  for (const auto& k : result.kept) rows.push_back({k.ego_id, "kept", ""});
  for (const auto& r : result.rejected) rows.push_back({r.ego_id, "rejected", std::string(to_string(r.reason))});
  std::sort(rows.begin(), rows.end());
  for (auto& r : rows) t.add_row(std::move(r));
  return t;
}

CsvTable usage_table(std::span<const Labeled<std::vector<UsageStats>>> samples) {
  CsvTable t({"sample", "ego", "pct_social", "pct_reply", "pct_mention", "pct_retweet", "fs_ratio", "tweet_freq"});
  for (const auto& s : samples) {
    for (const auto& u : s.value) {
      t.add_row({s.sample, u.ego_id, format_fixed(u.pct_social, kPct), format_fixed(u.pct_reply, kPct),
                 format_fixed(u.pct_mention, kPct), format_fixed(u.pct_retweet, kPct), format_fixed(u.fs_ratio, kPct),
                 format_fixed(u.tweet_freq, kPct)});
    }
  }
  return t;
}

CsvTable usage_means_table(std::span<const Labeled<UsageMeans>> samples) {
  CsvTable t({"sample", "n", "pct_social", "pct_reply", "pct_mention", "pct_retweet", "fs_ratio", "tweet_freq"});
  for (const auto& s : samples) {
    const auto& m = s.value;
    t.add_row({s.sample, std::to_string(m.n), format_fixed(m.pct_social, kPct), format_fixed(m.pct_reply, kPct),
               format_fixed(m.pct_mention, kPct), format_fixed(m.pct_retweet, kPct), format_fixed(m.fs_ratio, kPct),
               format_fixed(m.tweet_freq, kPct)});
  }
  return t;
}

CsvTable population_table(std::span<const Labeled<PopulationSummary>> samples) {
  CsvTable t({"sample", "statistic", "n", "mean", "sd", "ci_half_width", "c_index"});
  for (const auto& s : samples) {
    const auto n = std::to_string(s.value.n_egos);
    for (std::size_t i = 0; i < 5; ++i) {
      const auto& st = s.value.circle_sizes[i];
      t.add_row({s.sample, "size_C" + std::to_string(i + 1), n, num(st.mean), num(st.sd), num(st.half_width),
                 num(st.c_index)});
    }
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& st = s.value.scaling_ratios[i];
      t.add_row({s.sample, "ratio_C" + std::to_string(i + 2) + "_C" + std::to_string(i + 1), n, num(st.mean),
                 num(st.sd), num(st.half_width), num(st.c_index)});
    }
  }
  return t;
}

CsvTable turnover_table(std::span<const Labeled<TurnoverReport>> samples) {
  CsvTable t({"sample", "ring", "aggregation", "n_egos", "jaccard", "jaccard_n", "exit_jumps", "exit_normalized",
              "exit_n", "entry_jumps", "entry_normalized", "entry_n", "pooled_jumps", "pooled_normalized",
              "pooled_n"});
  for (const auto& s : samples) {
    const auto& rep = s.value;
    for (std::size_t r = 0; r < 5; ++r) {
      const auto& x = rep.rings[r];
      t.add_row({s.sample, "R" + std::to_string(r + 1), rep.aggregation == Aggregation::Macro ? "macro" : "micro",
                 std::to_string(rep.n_egos), num(x.mean_jaccard), std::to_string(x.jaccard_samples),
                 num(x.exit.mean_jumps), num(x.exit.mean_normalized), std::to_string(x.exit.samples),
                 num(x.entry.mean_jumps), num(x.entry.mean_normalized), std::to_string(x.entry.samples),
                 num(x.pooled.mean_jumps), num(x.pooled.mean_normalized), std::to_string(x.pooled.samples)});
    }
  }
  return t;
}

CsvTable correspondence_table(std::span<const Labeled<CorrespondenceMatrix>> samples) {
  CsvTable t({"sample", "static_ring", "R1", "R2", "R3", "R4", "R5", "OUT", "ties", "empty"});
  for (const auto& s : samples) {
    for (std::size_t r = 0; r < 5; ++r) {
      std::vector<std::string> row{s.sample, "R" + std::to_string(r + 1)};
      for (double v : s.value.entries[r]) row.push_back(num(v));
      row.push_back(std::to_string(s.value.row_ties[r]));
      row.push_back(s.value.empty_row[r] ? "true" : "false");
      t.add_row(std::move(row));
    }
  }
  return t;
}

CsvTable hashtag_table(std::span<const LayerHashtagReport> reports) {
  CsvTable t({"sample", "ring", "group", "n_ties", "pct_activated", "n", "mean_frequency", "mean_d_rel", "mean_u_rel"});
  for (const auto& rep : reports) {
    for (const auto& row : rep.rows) {
      for (const auto* group : {&row.activated, &row.non_activated}) {
        t.add_row({rep.sample, row.ring, group == &row.activated ? "activated" : "non_activated",
                   std::to_string(row.n_ties), format_fixed(row.pct_activated, kPct), std::to_string(group->n),
                   num(group->mean_frequency), num(group->mean_d_rel), num(group->mean_u_rel)});
      }
    }
  }
  return t;
}

CsvTable growth_table(std::span<const Labeled<GrowthSummary>> samples) {
  CsvTable t({"sample", "n_egos", "mean_new_alters", "mean_new_hashtags"});
  for (const auto& s : samples) {
    t.add_row({s.sample, std::to_string(s.value.n_egos), num(s.value.mean_new_alters), num(s.value.mean_new_hashtags)});
  }
  return t;
}

CsvTable regression_r2_table(std::span<const RegressionGridRow> rows) {
  std::vector<std::string> header{"sample", "group"};
  for (const auto* c : kRingColumns) header.push_back(c);
  CsvTable t(std::move(header));
  for (const auto& r : rows) {
    std::vector<std::string> line{r.sample, std::string(to_string(r.group))};
    for (const auto& cell : r.cells) line.push_back(cell.model ? format_fixed(cell.model->r_squared, 4) : "");
    t.add_row(std::move(line));
  }
  return t;
}

CsvTable regression_sign_table(std::span<const RegressionGridRow> rows) {
  CsvTable t({"sample", "group", "ring", "predictor", "sign"});
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.cells.size(); ++c) {
      if (!r.cells[c].model) continue;
      const auto& m = *r.cells[c].model;
      for (std::size_t p = 0; p < m.predictor_names.size(); ++p) {
        const double b = m.coefficients[p];
        const bool dropped = std::find(m.dropped.begin(), m.dropped.end(), m.predictor_names[p]) != m.dropped.end();
        t.add_row({r.sample, std::string(to_string(r.group)), kRingColumns[c], m.predictor_names[p],
                   dropped ? "dropped" : (b > 0 ? "+" : (b < 0 ? "-" : "0"))});
      }
    }
  }
  return t;
}

}  // namespace egonet
