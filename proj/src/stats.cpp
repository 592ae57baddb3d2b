/* Copyright 2026 The ASC Analyzer Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "ascan/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "ascan/error.hpp"

namespace ascan::stats {

namespace {

// 1 - R^2 of a standardized column on the current subset below which the
// subset is treated as collinear.
constexpr double kSingularPivot = 1e-10;
// RSS is floored at this fraction of the total sum of squares so that exact
// fits get a finite AIC and ties resolve by model size.
constexpr double kRssFloor = 1e-12;

// Centered, unit-norm cross products. Column j with zero variance is flagged
// and never admitted to a subset.
struct CrossProducts {
  Eigen::MatrixXd sxx;
  Eigen::VectorXd sxy;
  double syy = 0.0;
  std::vector<bool> usable;
};

CrossProducts cross_products(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
  const Eigen::Index p = x.cols();
  Eigen::MatrixXd xc = x.rowwise() - x.colwise().mean();
  Eigen::VectorXd yc = y.array() - y.mean();
  CrossProducts cp;
  cp.usable.assign(static_cast<std::size_t>(p), true);
  for (Eigen::Index j = 0; j < p; ++j) {
    double norm = xc.col(j).norm();
    if (norm <= 0.0 || !std::isfinite(norm)) {
      cp.usable[static_cast<std::size_t>(j)] = false;
      xc.col(j).setZero();
    } else {
      xc.col(j) /= norm;
    }
  }
  cp.sxx = xc.transpose() * xc;
  cp.sxy = xc.transpose() * yc;
  cp.syy = yc.squaredNorm();
  return cp;
}

class SubsetWalker {
 public:
  SubsetWalker(const CrossProducts& cp,
               const std::function<void(std::span<const std::size_t>, double)>& visit)
      : cp_(cp), visit_(visit), p_(static_cast<std::size_t>(cp.sxx.cols())) {
    chol_.assign(p_ * p_, 0.0);
    z_.assign(p_, 0.0);
  }

  void run() {
    visit_(std::span<const std::size_t>(), cp_.syy);
    descend(0, 0, 0.0);
  }

 private:
  // chol_ holds the lower-triangular factor row by row for the columns in
  // members_; z_ = L^{-1} X_S' y, so RSS = syy - |z|^2.
  void descend(std::size_t first, std::size_t depth, double explained) {
    for (std::size_t j = first; j < p_; ++j) {
      if (!cp_.usable[j]) continue;
      double* row = &chol_[depth * p_];
      double norm2 = 0.0;
      for (std::size_t i = 0; i < depth; ++i) {
        double s = cp_.sxx(static_cast<Eigen::Index>(members_[i]), static_cast<Eigen::Index>(j));
        const double* li = &chol_[i * p_];
        for (std::size_t m = 0; m < i; ++m) s -= li[m] * row[m];
        row[i] = s / li[i];
        norm2 += row[i] * row[i];
      }
      double pivot2 = 1.0 - norm2;
      if (pivot2 <= kSingularPivot) continue;
      row[depth] = std::sqrt(pivot2);
      double zj = cp_.sxy(static_cast<Eigen::Index>(j));
      for (std::size_t i = 0; i < depth; ++i) zj -= row[i] * z_[i];
      zj /= row[depth];
      z_[depth] = zj;
      members_.push_back(j);
      double now = explained + zj * zj;
      visit_(members_, cp_.syy - now);
      descend(j + 1, depth + 1, now);
      members_.pop_back();
    }
  }

  const CrossProducts& cp_;
  const std::function<void(std::span<const std::size_t>, double)>& visit_;
  std::size_t p_;
  std::vector<double> chol_;
  std::vector<double> z_;
  std::vector<std::size_t> members_;
};

// RSS of a single subset, or nullopt if it is collinear.
std::optional<double> subset_rss(const CrossProducts& cp, const std::vector<std::size_t>& cols) {
  const auto k = static_cast<Eigen::Index>(cols.size());
  if (k == 0) return cp.syy;
  Eigen::MatrixXd a(k, k);
  Eigen::VectorXd b(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!cp.usable[cols[static_cast<std::size_t>(i)]]) return std::nullopt;
    b(i) = cp.sxy(static_cast<Eigen::Index>(cols[static_cast<std::size_t>(i)]));
    for (Eigen::Index j = 0; j < k; ++j) {
      a(i, j) = cp.sxx(static_cast<Eigen::Index>(cols[static_cast<std::size_t>(i)]),
                       static_cast<Eigen::Index>(cols[static_cast<std::size_t>(j)]));
    }
  }
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) return std::nullopt;
  Eigen::MatrixXd l = llt.matrixL();
  for (Eigen::Index i = 0; i < k; ++i) {
    if (l(i, i) * l(i, i) <= kSingularPivot) return std::nullopt;
  }
  Eigen::VectorXd z = llt.matrixL().solve(b);
  return cp.syy - z.squaredNorm();
}

ModelCandidate make_candidate(std::vector<std::size_t> cols, double rss, double syy,
                              std::size_t n) {
  double floored = std::max(rss, kRssFloor * syy);
  ModelCandidate c;
  c.aic = gaussian_aic(floored, n, cols.size());
  c.rss = rss;
  c.predictors = std::move(cols);
  return c;
}

void keep_competitive(std::vector<ModelCandidate>& pool, const ModelCandidate& best,
                      double delta) {
  std::erase_if(pool, [&](const ModelCandidate& m) { return !(m.aic - best.aic < delta); });
}

double two_sided_t_p(double t, double df) {
  if (!std::isfinite(t)) return 0.0;
  boost::math::students_t dist(df);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::kInvalidArgument, "pearson: vectors differ in length");
  }
  if (x.size() < 3) throw Error(ErrorKind::kInvalidArgument, "pearson: need at least 3 points");
  // Equal values can still leave rounding residue around their mean.
  auto constant = [](std::span<const double> v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
  };
  if (constant(x) || constant(y)) throw Error(ErrorKind::kStats, "constant vector");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - mx;
    double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) throw Error(ErrorKind::kStats, "constant vector");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::size_t FeatureMatrix::column_index(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(ErrorKind::kInvalidArgument, "unknown feature '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

std::vector<Correlation> correlate_all(const FeatureMatrix& m) {
  std::vector<Correlation> out;
  for (std::size_t j = 0; j < m.names.size(); ++j) {
    std::vector<double> xs, ys;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m.columns[j][r]) {
        xs.push_back(*m.columns[j][r]);
        ys.push_back(m.target[r]);
      }
    }
    Correlation c{m.names[j], std::nullopt, xs.size()};
    if (xs.size() >= 3) {
      try {
        c.r = pearson(xs, ys);
      } catch (const Error&) {
        // constant over its complete rows
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string soa_family(const std::string& name) {
  static const std::vector<std::string> kSuffixes = {"_AvMI", "_AvT", "_AvDeltaPLemma",
                                                     "_AvDeltaPStructure"};
  static const std::set<std::string> kAggregate = {"ascAvMI", "ascAvT", "ascAvDeltaPLemma",
                                                   "ascAvDeltaPStructure"};
  if (kAggregate.contains(name)) return "asc";
  for (const auto& suffix : kSuffixes) {
    if (name.size() > suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
      return name.substr(0, name.size() - suffix.size());
    }
  }
  return {};
}

FilterResult bivariate_filter(const FeatureMatrix& m, double threshold) {
  FilterResult out;
  out.correlations = correlate_all(m);
  std::map<std::string, std::size_t> family_best;  // family -> index into correlations
  std::vector<std::size_t> passed;
  for (std::size_t j = 0; j < out.correlations.size(); ++j) {
    const auto& c = out.correlations[j];
    if (!c.r || std::fabs(*c.r) < threshold) continue;
    passed.push_back(j);
    out.passed.push_back(c.name);
    std::string family = soa_family(c.name);
    if (family.empty()) continue;
    auto [it, inserted] = family_best.emplace(family, j);
    if (!inserted && std::fabs(*c.r) > std::fabs(*out.correlations[it->second].r)) it->second = j;
  }
  for (std::size_t j : passed) {
    const auto& name = out.correlations[j].name;
    std::string family = soa_family(name);
    if (family.empty() || family_best.at(family) == j) out.selected.push_back(name);
  }
  return out;
}

CompleteCases complete_cases(const FeatureMatrix& m, const std::vector<std::string>& names) {
  std::vector<std::size_t> cols;
  for (const auto& n : names) cols.push_back(m.column_index(n));
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool ok = std::all_of(cols.begin(), cols.end(),
                          [&](std::size_t j) { return m.columns[j][r].has_value(); });
    if (ok) keep.push_back(r);
  }
  CompleteCases cc;
  cc.names = names;
  cc.dropped = m.rows() - keep.size();
  cc.x.resize(static_cast<Eigen::Index>(keep.size()), static_cast<Eigen::Index>(cols.size()));
  cc.y.resize(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    cc.y(static_cast<Eigen::Index>(i)) = m.target[keep[i]];
    for (std::size_t j = 0; j < cols.size(); ++j) {
      cc.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = *m.columns[cols[j]][keep[i]];
    }
  }
  return cc;
}

std::vector<double> variance_inflation(const Eigen::MatrixXd& x) {
  const auto p = static_cast<std::size_t>(x.cols());
  std::vector<double> out(p, 1.0);
  if (p < 2) return out;
  for (std::size_t j = 0; j < p; ++j) {
    Eigen::MatrixXd others(x.rows(), x.cols() - 1);
    Eigen::Index c = 0;
    for (Eigen::Index k = 0; k < x.cols(); ++k) {
      if (static_cast<std::size_t>(k) != j) others.col(c++) = x.col(k);
    }
    Eigen::VectorXd target = x.col(static_cast<Eigen::Index>(j));
    CrossProducts cp = cross_products(others, target);
    if (cp.syy <= 0.0) {
      out[j] = std::numeric_limits<double>::infinity();
      continue;
    }
    // Regress on a maximal non-singular subset of the other columns.
    std::vector<std::size_t> basis;
    for (std::size_t k = 0; k + 1 < p; ++k) {
      basis.push_back(k);
      if (!subset_rss(cp, basis)) basis.pop_back();
    }
    double rss = *subset_rss(cp, basis);
    double one_minus_r2 = rss / cp.syy;
    out[j] = one_minus_r2 <= kSingularPivot ? std::numeric_limits<double>::infinity()
                                            : 1.0 / one_minus_r2;
  }
  return out;
}

std::vector<std::size_t> vif_prune(const Eigen::MatrixXd& x, double limit) {
  std::vector<std::size_t> alive(static_cast<std::size_t>(x.cols()));
  for (std::size_t j = 0; j < alive.size(); ++j) alive[j] = j;
  while (alive.size() >= 2) {
    Eigen::MatrixXd sub(x.rows(), static_cast<Eigen::Index>(alive.size()));
    for (std::size_t j = 0; j < alive.size(); ++j) {
      sub.col(static_cast<Eigen::Index>(j)) = x.col(static_cast<Eigen::Index>(alive[j]));
    }
    auto vifs = variance_inflation(sub);
    std::size_t worst = 0;
    for (std::size_t j = 1; j < vifs.size(); ++j) {
      if (vifs[j] >= vifs[worst]) worst = j;
    }
    if (vifs[worst] < limit) break;
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(worst));
  }
  return alive;
}

double gaussian_aic(double rss, std::size_t n, std::size_t k) {
  const double dn = static_cast<double>(n);
  return dn * std::log(rss / dn) + 2.0 * static_cast<double>(k + 2);
}

bool better_model(const ModelCandidate& lhs, const ModelCandidate& rhs) {
  double tol = 1e-9 * std::max(1.0, std::max(std::fabs(lhs.aic), std::fabs(rhs.aic)));
  if (std::fabs(lhs.aic - rhs.aic) > tol) return lhs.aic < rhs.aic;
  if (lhs.predictors.size() != rhs.predictors.size()) {
    return lhs.predictors.size() < rhs.predictors.size();
  }
  return lhs.predictors < rhs.predictors;
}

void for_each_subset_rss(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                         const std::function<void(std::span<const std::size_t>, double)>& visit) {
  CrossProducts cp = cross_products(x, y);
  SubsetWalker(cp, visit).run();
}

AicSelection aic_select(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double delta) {
  const auto n = static_cast<std::size_t>(y.size());
  const auto p = static_cast<std::size_t>(x.cols());
  CrossProducts cp = cross_products(x, y);
  AicSelection sel;
  std::vector<ModelCandidate> pool;
  bool have_best = false;

  auto consider = [&](std::vector<std::size_t> cols, double rss) {
    ++sel.models_evaluated;
    ModelCandidate c = make_candidate(std::move(cols), rss, cp.syy, n);
    if (!have_best || better_model(c, sel.best)) {
      sel.best = c;
      have_best = true;
      keep_competitive(pool, sel.best, delta);
    }
    if (c.aic - sel.best.aic < delta) pool.push_back(std::move(c));
  };

  if (p <= kExhaustiveSubsetLimit) {
    SubsetWalker(cp, [&](std::span<const std::size_t> cols, double rss) {
      consider(std::vector<std::size_t>(cols.begin(), cols.end()), rss);
    }).run();
  } else {
    sel.exhaustive = false;
    std::set<std::vector<std::size_t>> seen;
    auto try_subset = [&](std::vector<std::size_t> cols) -> std::optional<ModelCandidate> {
      std::sort(cols.begin(), cols.end());
      auto rss = subset_rss(cp, cols);
      if (!rss) return std::nullopt;
      if (seen.insert(cols).second) consider(cols, *rss);
      return make_candidate(cols, *rss, cp.syy, n);
    };
    // Forward from the empty model.
    std::vector<std::size_t> current;
    auto cur = *try_subset(current);
    while (true) {
      std::optional<ModelCandidate> step;
      for (std::size_t j = 0; j < p; ++j) {
        if (std::find(current.begin(), current.end(), j) != current.end()) continue;
        auto next = current;
        next.push_back(j);
        auto c = try_subset(next);
        if (c && (!step || better_model(*c, *step))) step = c;
      }
      if (!step || !better_model(*step, cur)) break;
      cur = *step;
      current = cur.predictors;
    }
    // Backward from a maximal non-singular set.
    current.clear();
    for (std::size_t j = 0; j < p; ++j) {
      current.push_back(j);
      if (!subset_rss(cp, current)) current.pop_back();
    }
    cur = *try_subset(current);
    while (!current.empty()) {
      std::optional<ModelCandidate> step;
      for (std::size_t i = 0; i < current.size(); ++i) {
        auto next = current;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        auto c = try_subset(next);
        if (c && (!step || better_model(*c, *step))) step = c;
      }
      if (!step || !better_model(*step, cur)) break;
      cur = *step;
      current = cur.predictors;
    }
  }

  keep_competitive(pool, sel.best, delta);
  std::sort(pool.begin(), pool.end(), better_model);
  sel.competitive = std::move(pool);
  return sel;
}

std::vector<double> lmg(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
  const auto p = static_cast<std::size_t>(x.cols());
  if (p == 0) return {};
  if (p > 24) throw Error(ErrorKind::kInvalidArgument, "lmg: too many predictors");
  std::vector<double> r2(std::size_t{1} << p, std::numeric_limits<double>::quiet_NaN());
  double syy = 0.0;
  for_each_subset_rss(x, y, [&](std::span<const std::size_t> cols, double rss) {
    std::size_t mask = 0;
    for (std::size_t c : cols) mask |= std::size_t{1} << c;
    if (cols.empty()) syy = rss;
    r2[mask] = syy > 0.0 ? 1.0 - rss / syy : 0.0;
  });
  for (double v : r2) {
    if (std::isnan(v)) throw Error(ErrorKind::kStats, "lmg: design is rank deficient");
  }
  // Weight of a subset of size s not containing j: s! (p-1-s)! / p!.
  std::vector<double> weight(p);
  for (std::size_t s = 0; s < p; ++s) {
    double lw = std::lgamma(static_cast<double>(s) + 1.0) +
                std::lgamma(static_cast<double>(p - 1 - s) + 1.0) -
                std::lgamma(static_cast<double>(p) + 1.0);
    weight[s] = std::exp(lw);
  }
  std::vector<double> out(p, 0.0);
  for (std::size_t mask = 0; mask < r2.size(); ++mask) {
    std::size_t s = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t j = 0; j < p; ++j) {
      std::size_t bit = std::size_t{1} << j;
      if (mask & bit) continue;
      out[j] += weight[s] * (r2[mask | bit] - r2[mask]);
    }
  }
  return out;
}

RegressionSummary ols_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                          const std::vector<std::string>& names) {
  const Eigen::Index n = y.size();
  const Eigen::Index k = x.cols();
  if (static_cast<Eigen::Index>(names.size()) != k) {
    throw Error(ErrorKind::kInvalidArgument, "ols_fit: names/columns mismatch");
  }
  if (x.rows() != n) throw Error(ErrorKind::kInvalidArgument, "ols_fit: rows mismatch");
  if (n <= k + 1) {
    throw Error(ErrorKind::kStats, "ols_fit: need more rows (" + std::to_string(n) +
                                       ") than parameters plus one (" + std::to_string(k + 2) + ")");
  }

  Eigen::MatrixXd design(n, k + 1);
  design.col(0).setOnes();
  design.rightCols(k) = x;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  if (qr.rank() < k + 1) {
    std::string cols;
    const auto& perm = qr.colsPermutation().indices();
    for (Eigen::Index i = qr.rank(); i < k + 1; ++i) {
      Eigen::Index c = perm(i);
      if (!cols.empty()) cols += ", ";
      cols += c == 0 ? std::string("(Intercept)") : names[static_cast<std::size_t>(c - 1)];
    }
    throw Error(ErrorKind::kStats, "rank-deficient design; collinear columns: " + cols);
  }

  Eigen::VectorXd beta = qr.solve(y);
  Eigen::VectorXd resid = y - design * beta;
  const double rss = resid.squaredNorm();
  const double tss = (y.array() - y.mean()).matrix().squaredNorm();
  const double df_res = static_cast<double>(n - k - 1);
  const double sigma2 = rss / df_res;

  Eigen::MatrixXd r = qr.matrixR().topLeftCorner(k + 1, k + 1).triangularView<Eigen::Upper>();
  Eigen::MatrixXd rinv = r.triangularView<Eigen::Upper>().solve(
      Eigen::MatrixXd::Identity(k + 1, k + 1));
  Eigen::MatrixXd unscaled = rinv * rinv.transpose();
  Eigen::MatrixXd cov = qr.colsPermutation() * unscaled * qr.colsPermutation().transpose();

  RegressionSummary s;
  s.n = static_cast<std::size_t>(n);
  s.df_model = static_cast<int>(k);
  s.df_residual = static_cast<int>(df_res);
  s.r_squared = tss > 0.0 ? 1.0 - rss / tss : 0.0;
  s.adj_r_squared = 1.0 - (1.0 - s.r_squared) * static_cast<double>(n - 1) / df_res;
  s.residual_std_error = std::sqrt(sigma2);
  s.residuals.assign(resid.data(), resid.data() + resid.size());
  if (k > 0) {
    double f = (s.r_squared / static_cast<double>(k)) / ((1.0 - s.r_squared) / df_res);
    s.f_statistic = f;
    if (std::isfinite(f)) {
      boost::math::fisher_f dist(static_cast<double>(k), df_res);
      s.f_p_value = boost::math::cdf(boost::math::complement(dist, f));
    } else {
      s.f_p_value = 0.0;
    }
  }

  std::optional<std::vector<double>> shares;
  if (k > 0 && static_cast<std::size_t>(k) <= kLmgPredictorLimit) {
    shares = lmg(x, y);
    s.has_relative_importance = true;
  }
  for (Eigen::Index i = 0; i <= k; ++i) {
    Coefficient c;
    c.name = i == 0 ? "(Intercept)" : names[static_cast<std::size_t>(i - 1)];
    c.estimate = beta(i);
    c.std_error = std::sqrt(std::max(0.0, sigma2 * cov(i, i)));
    c.t = c.std_error > 0.0 ? c.estimate / c.std_error
                            : std::copysign(std::numeric_limits<double>::infinity(), c.estimate);
    c.p = two_sided_t_p(c.t, df_res);
    if (i > 0 && shares) c.lmg = (*shares)[static_cast<std::size_t>(i - 1)];
    s.coefficients.push_back(std::move(c));
  }
  return s;
}

}  // namespace ascan::stats
