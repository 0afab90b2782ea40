#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "egonet/hashtag_analysis.hpp"

namespace egonet {

struct RegressionModel {
  std::vector<std::string> predictor_names;
  std::vector<double> coefficients;  // aligned with predictor_names; 0 for dropped columns
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t n = 0;
  std::vector<std::string> dropped;      // constant predictor columns
  std::vector<std::string> diagnostics;  // e.g. ZeroVariance
};

// Least squares with intercept via column-pivoting Householder QR.
// Throws Error(Underdetermined) when n <= p + 1 and Error(DegenerateDesign)
// when the design stays rank-deficient after constant columns are dropped.
RegressionModel ols_fit(const Eigen::MatrixXd& predictors, const Eigen::VectorXd& response,
                        std::vector<std::string> names = {});

struct RegressionRow {
  std::vector<double> predictors;
  double response = 0.0;
};

RegressionModel ols_fit(std::span<const RegressionRow> rows, std::vector<std::string> names = {});

enum class LinkGroup { Activated, NonActivated };
std::string_view to_string(LinkGroup g);

// Predictor columns for each link group.
std::vector<std::string> predictor_names(LinkGroup g);
std::vector<double> predictor_values(LinkGroup g, const HashtagTieStats& s);

struct RegressionCell {
  std::optional<RegressionModel> model;
  std::string note;  // why the cell is empty, when it is
};

inline constexpr std::array<const char*, 6> kRingColumns{"ALL", "R1", "R2", "R3", "R4", "R5"};

struct RegressionGridRow {
  std::string sample;
  LinkGroup group = LinkGroup::Activated;
  std::array<RegressionCell, 6> cells;  // ALL, R1..R5
};

// Two rows (activated, non-activated) of contact frequency regressed on the
// hashtag indices, over all ties and per static ring.
std::array<RegressionGridRow, 2> ring_regressions(const std::string& sample, std::span<const TieRecord> records);

}  // namespace egonet
