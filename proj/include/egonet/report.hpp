#pragma once

// Locale-independent CSV tables for the report types.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "egonet/dynamic_analysis.hpp"
#include "egonet/hashtag_analysis.hpp"
#include "egonet/ingestion.hpp"
#include "egonet/regression.hpp"
#include "egonet/static_analysis.hpp"

namespace egonet {

// Fixed notation with '.' as decimal separator.
std::string format_fixed(double value, int decimals);
std::string format_fixed(const std::optional<double>& value, int decimals);  // empty when null

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row);
  void write(std::ostream& out) const;  // LF line endings, RFC 4180 quoting
  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

template <typename T>
struct Labeled {
  std::string sample;
  T value;
};

CsvTable filter_table(const FilterResult& result);
CsvTable usage_table(std::span<const Labeled<std::vector<UsageStats>>> samples);
CsvTable usage_means_table(std::span<const Labeled<UsageMeans>> samples);
CsvTable population_table(std::span<const Labeled<PopulationSummary>> samples);
CsvTable turnover_table(std::span<const Labeled<TurnoverReport>> samples);
CsvTable correspondence_table(std::span<const Labeled<CorrespondenceMatrix>> samples);
CsvTable hashtag_table(std::span<const LayerHashtagReport> reports);
CsvTable growth_table(std::span<const Labeled<GrowthSummary>> samples);
CsvTable regression_r2_table(std::span<const RegressionGridRow> rows);
CsvTable regression_sign_table(std::span<const RegressionGridRow> rows);

}  // namespace egonet
