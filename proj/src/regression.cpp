#include "egonet/regression.hpp"

#include <algorithm>

namespace egonet {

RegressionModel ols_fit(const Eigen::MatrixXd& predictors, const Eigen::VectorXd& response,
                        std::vector<std::string> names) {
  const Eigen::Index n = predictors.rows();
  const Eigen::Index p = predictors.cols();
  if (response.size() != n) throw Error(ErrorCode::InvalidArgument, "response length differs from design rows");
  if (names.empty()) {
    for (Eigen::Index j = 0; j < p; ++j) names.push_back("x" + std::to_string(j + 1));
  }
  if (static_cast<Eigen::Index>(names.size()) != p) {
    throw Error(ErrorCode::InvalidArgument, "predictor names do not match design columns");
  }
  if (n <= p + 1) {
    throw Error(ErrorCode::Underdetermined,
                std::to_string(n) + " samples for " + std::to_string(p) + " predictors plus intercept");
  }

  RegressionModel m;
  m.n = static_cast<std::size_t>(n);
  m.predictor_names = names;
  m.coefficients.assign(p, 0.0);

  std::vector<Eigen::Index> kept;
  for (Eigen::Index j = 0; j < p; ++j) {
    const auto col = predictors.col(j);
    if ((col.array() == col(0)).all()) {
      m.dropped.push_back(names[j]);
      m.diagnostics.push_back("ConstantPredictor: " + names[j]);
    } else {
      kept.push_back(j);
    }
  }

  Eigen::MatrixXd design(n, static_cast<Eigen::Index>(kept.size()) + 1);
  design.col(0).setOnes();
  for (std::size_t c = 0; c < kept.size(); ++c) design.col(static_cast<Eigen::Index>(c) + 1) = predictors.col(kept[c]);

  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < design.cols()) {
    throw Error(ErrorCode::DegenerateDesign, "design has rank " + std::to_string(qr.rank()) + " of " +
                                                 std::to_string(design.cols()) + " columns");
  }
  const Eigen::VectorXd beta = qr.solve(response);
  m.intercept = beta(0);
  for (std::size_t c = 0; c < kept.size(); ++c) m.coefficients[kept[c]] = beta(static_cast<Eigen::Index>(c) + 1);

  const double rss = (response - design * beta).squaredNorm();
  const double tss = (response.array() - response.mean()).matrix().squaredNorm();
  if (tss == 0.0) {
    m.r_squared = 0.0;
    m.diagnostics.push_back("ZeroVariance: response is constant");
  } else {
    m.r_squared = std::clamp(1.0 - rss / tss, 0.0, 1.0);
  }
  return m;
}

RegressionModel ols_fit(std::span<const RegressionRow> rows, std::vector<std::string> names) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto p = static_cast<Eigen::Index>(rows.empty() ? names.size() : rows.front().predictors.size());
  Eigen::MatrixXd x(n, p);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.predictors.size()) != p) {
      throw Error(ErrorCode::InvalidArgument, "design rows have different widths");
    }
    x.row(i) = Eigen::Map<const Eigen::RowVectorXd>(row.predictors.data(), p);
    y(i) = row.response;
  }
  return ols_fit(x, y, std::move(names));
}

std::string_view to_string(LinkGroup g) { return g == LinkGroup::Activated ? "activated" : "non_activated"; }

std::vector<std::string> predictor_names(LinkGroup g) {
  if (g == LinkGroup::Activated) return {"n_r_hact", "n_e_hact", "n_r_hmax", "n_e_hmax", "d_rel", "u_rel"};
  return {"n_r_hmax", "n_e_hmax", "d_rel", "u_rel"};
}

std::vector<double> predictor_values(LinkGroup g, const HashtagTieStats& s) {
  if (g == LinkGroup::Activated) {
    return {double(s.n_r_hact), double(s.n_e_hact), double(s.n_r_hmax), double(s.n_e_hmax), double(s.d_rel),
            double(s.u_rel)};
  }
  return {double(s.n_r_hmax), double(s.n_e_hmax), double(s.d_rel), double(s.u_rel)};
}

namespace {

RegressionCell fit_cell(LinkGroup g, const std::vector<const TieRecord*>& records) {
  std::vector<RegressionRow> rows;
  rows.reserve(records.size());
  for (const auto* r : records) rows.push_back({predictor_values(g, r->stats), r->frequency});
  RegressionCell cell;
  try {
    cell.model = ols_fit(rows, predictor_names(g));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Underdetermined && e.code() != ErrorCode::DegenerateDesign) throw;
    cell.note = e.what();
  }
  return cell;
}

}  // namespace

std::array<RegressionGridRow, 2> ring_regressions(const std::string& sample, std::span<const TieRecord> records) {
  std::array<RegressionGridRow, 2> rows;
  for (auto g : {LinkGroup::Activated, LinkGroup::NonActivated}) {
    auto& row = rows[g == LinkGroup::Activated ? 0 : 1];
    row.sample = sample;
    row.group = g;
    std::array<std::vector<const TieRecord*>, 6> cells;
    for (const auto& r : records) {
      if (r.stats.activated != (g == LinkGroup::Activated)) continue;
      cells[0].push_back(&r);
      if (r.ring) cells[r.ring->position()].push_back(&r);
    }
    for (std::size_t c = 0; c < 6; ++c) row.cells[c] = fit_cell(g, cells[c]);
  }
  return rows;
}

}  // namespace egonet
