#pragma once

// Independent reference implementations used by the tests. Deliberately naive.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "egonet/core_model.hpp"

namespace oracle {

// Two-pass SSE of v[b, e), summed left to right.
inline double sse(const std::vector<double>& v, std::size_t b, std::size_t e) {
  double sum = 0.0;
  for (std::size_t i = b; i < e; ++i) sum += v[i];
  const double mean = sum / static_cast<double>(e - b);
  double out = 0.0;
  for (std::size_t i = b; i < e; ++i) out += (v[i] - mean) * (v[i] - mean);
  return out;
}

struct Partition {
  std::vector<std::size_t> cuts;  // k-1 interior boundaries on the sorted array
  double cost = std::numeric_limits<double>::infinity();
};

// Enumerates every contiguous k-partition of sorted v. Near-ties (1e-10
// relative) go to the lexicographically smallest cut vector.
inline Partition best_partition(const std::vector<double>& sorted, int k) {
  const std::size_t n = sorted.size();
  std::vector<Partition> all;
  std::vector<std::size_t> cuts;
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      Partition p{cuts, 0.0};
      std::size_t b = 0;
      for (auto c : cuts) {
        p.cost += sse(sorted, b, c);
        b = c;
      }
      p.cost += sse(sorted, b, n);
      all.push_back(std::move(p));
      return;
    }
    for (std::size_t c = from + 1; c + static_cast<std::size_t>(left) <= n; ++c) {
      cuts.push_back(c);
      self(self, c, left - 1);
      cuts.pop_back();
    }
  };
  rec(rec, 0, k - 1);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : all) best = std::min(best, p.cost);
  Partition chosen;
  for (const auto& p : all) {  // enumeration order is lexicographic
    if (p.cost <= best + 1e-10 * std::abs(best)) {
      chosen = p;
      break;
    }
  }
  return chosen;
}

// Labels for the original (unsorted) values: 1 = cluster with highest values.
inline std::vector<int> labels_for(const std::vector<double>& values, const Partition& p) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
  const int k = static_cast<int>(p.cuts.size()) + 1;
  std::vector<int> labels(values.size());
  int seg = 0;
  for (std::size_t r = 0; r < order.size(); ++r) {
    while (seg < k - 1 && r >= p.cuts[seg]) ++seg;
    labels[order[r]] = k - seg;
  }
  return labels;
}

inline std::size_t distinct(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

// AIC over k = 1..min(k_max, distinct) using exhaustive partitions.
inline int aic_choice(std::vector<double> values, int k_max) {
  std::sort(values.begin(), values.end());
  const int top = std::min<int>(k_max, static_cast<int>(distinct(values)));
  const double n = static_cast<double>(values.size());
  int best_k = 1;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= top; ++k) {
    const double rss = best_partition(values, k).cost;
    if (rss <= 0.0) return k;  // -inf beats every finite score
    const double aic = n * std::log(rss / n) + 2.0 * k;
    if (aic < best) {
      best = aic;
      best_k = k;
    }
  }
  return best_k;
}

// Set-based ring membership.
using RingSets = std::vector<std::set<std::string>>;

inline RingSets ring_sets(const egonet::LayeredEgoNetwork& net) {
  RingSets out(5);
  for (std::size_t r = 0; r < net.rings.size(); ++r) {
    for (const auto& a : net.rings[r]) out[r].insert(a.alter_id);
  }
  return out;
}

// nullopt encoded as -1.
inline double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> inter, uni;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(inter, inter.end()));
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(uni, uni.end()));
  if (uni.empty()) return -1.0;
  return static_cast<double>(inter.size()) / static_cast<double>(uni.size());
}

struct Jump {
  std::string alter;
  int from = 6;
  int to = 6;
  int jumps = 0;
  double normalized = 0.0;
  bool operator<(const Jump& o) const { return alter < o.alter; }
};

inline std::vector<Jump> jumps(const RingSets& a, const RingSets& b) {
  auto pos = [](const RingSets& s, const std::string& x) {
    for (int r = 0; r < 5; ++r) {
      if (s[r].count(x)) return r + 1;
    }
    return 6;
  };
  std::set<std::string> everyone;
  for (const auto& s : a) everyone.insert(s.begin(), s.end());
  for (const auto& s : b) everyone.insert(s.begin(), s.end());
  std::vector<Jump> out;
  for (const auto& x : everyone) {
    const int p = pos(a, x), q = pos(b, x);
    if (p == q) continue;
    const int j = std::abs(p - q);
    const int max_from = std::max(p - 1, 6 - p);
    out.push_back({x, p, q, j, static_cast<double>(j) / max_from});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// OLS through the normal equations (X'X) b = X'y with an intercept column,
// solved by Gaussian elimination with partial pivoting in long double.
struct NormalFit {
  std::vector<double> coefficients;
  double intercept = 0.0;
  double r_squared = 0.0;
};

inline NormalFit normal_equations(const std::vector<std::vector<double>>& x, const std::vector<double>& y) {
  const std::size_t n = x.size(), p = x.front().size() + 1;
  std::vector<std::vector<long double>> a(p, std::vector<long double>(p + 1, 0.0L));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long double> row{1.0L};
    for (double v : x[i]) row.push_back(v);
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t c = 0; c < p; ++c) a[r][c] += row[r] * row[c];
      a[r][p] += row[r] * y[i];
    }
  }
  for (std::size_t col = 0; col < p; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < p; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    for (std::size_t r = 0; r < p; ++r) {
      if (r == col) continue;
      const long double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= p; ++c) a[r][c] -= f * a[col][c];
    }
  }
  NormalFit fit;
  fit.intercept = static_cast<double>(a[0][p] / a[0][0]);
  for (std::size_t j = 1; j < p; ++j) fit.coefficients.push_back(static_cast<double>(a[j][p] / a[j][j]));

  long double mean = 0.0L;
  for (double v : y) mean += v;
  mean /= static_cast<long double>(n);
  long double rss = 0.0L, tss = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    long double pred = fit.intercept;
    for (std::size_t j = 0; j + 1 < p; ++j) pred += fit.coefficients[j] * static_cast<long double>(x[i][j]);
    rss += (y[i] - pred) * (y[i] - pred);
    tss += (y[i] - mean) * (y[i] - mean);
  }
  fit.r_squared = tss > 0 ? static_cast<double>(std::clamp(1.0L - rss / tss, 0.0L, 1.0L)) : 0.0;
  return fit;
}

}  // namespace oracle
