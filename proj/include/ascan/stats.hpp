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

#ifndef ASCAN_STATS_HPP_
#define ASCAN_STATS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ascan::stats {

using MaybeValue = std::optional<double>;

// Pearson product-moment correlation. Throws Error(kStats, "constant vector")
// if either input has zero variance, and kInvalidArgument on length < 3 or
// mismatched lengths.
double pearson(std::span<const double> x, std::span<const double> y);

// One row per text, one column per named feature, plus the response.
struct FeatureMatrix {
  std::vector<std::string> row_ids;
  std::vector<std::string> names;
  std::vector<std::vector<MaybeValue>> columns;  // columns[j][row]
  std::vector<double> target;

  std::size_t rows() const { return target.size(); }
  std::size_t column_index(const std::string& name) const;
};

struct Correlation {
  std::string name;
  MaybeValue r;        // missing when fewer than 3 complete pairs or constant
  std::size_t n = 0;   // pairwise-complete rows
};

// Pearson r of every feature against the target over pairwise-complete rows.
std::vector<Correlation> correlate_all(const FeatureMatrix& m);

// SOA family key for an index name: "asc" for the four aggregate SOA means,
// the tag for per-type SOA means, empty for non-SOA indices.
std::string soa_family(const std::string& name);

struct FilterResult {
  std::vector<Correlation> correlations;  // all features, input order
  std::vector<std::string> passed;        // |r| >= threshold
  std::vector<std::string> selected;      // passed, then one per SOA family
};

// Keeps features with |r| >= threshold, then within each SOA family keeps
// only the member with the largest |r| (earliest column on ties).
FilterResult bivariate_filter(const FeatureMatrix& m, double threshold = 0.10);

// Rows of `m` with every listed column present.
struct CompleteCases {
  Eigen::MatrixXd x;  // rows x names.size()
  Eigen::VectorXd y;
  std::vector<std::string> names;
  std::size_t dropped = 0;
};
CompleteCases complete_cases(const FeatureMatrix& m, const std::vector<std::string>& names);

// Variance inflation factor of each column: 1 / (1 - R^2) of that column
// regressed (with intercept) on the others. +inf for exact collinearity.
std::vector<double> variance_inflation(const Eigen::MatrixXd& x);

// Repeatedly drops the column with the largest VIF (last one on ties) until
// every VIF is < limit. Returns the indices of the surviving columns.
std::vector<std::size_t> vif_prune(const Eigen::MatrixXd& x, double limit = 5.0);

// Gaussian AIC for an OLS model with an intercept and k slopes:
// n * ln(RSS / n) + 2 * (k + 2).
double gaussian_aic(double rss, std::size_t n, std::size_t k);

struct ModelCandidate {
  std::vector<std::size_t> predictors;  // column indices, ascending
  double rss = 0.0;
  double aic = 0.0;
};

// Strict ordering for "best": lower AIC; AICs within 1e-9 tie and go to the
// smaller model, then to the lexicographically smaller index list.
bool better_model(const ModelCandidate& lhs, const ModelCandidate& rhs);

struct AicSelection {
  ModelCandidate best;
  std::vector<ModelCandidate> competitive;  // AIC - best.aic < delta, best first
  bool exhaustive = true;
  std::size_t models_evaluated = 0;
};

inline constexpr std::size_t kExhaustiveSubsetLimit = 25;

// Exhaustive best subsets (intercept always included) for up to 25
// candidates. Beyond that, the union of forward and backward stepwise paths
// is searched instead and `exhaustive` is false. Subsets with collinear
// columns are skipped.
AicSelection aic_select(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                        double delta = 4.0);

struct Coefficient {
  std::string name;
  double estimate = 0.0;
  double std_error = 0.0;
  double t = 0.0;
  double p = 0.0;
  MaybeValue lmg;  // share of R^2; missing for the intercept
};

struct RegressionSummary {
  std::vector<Coefficient> coefficients;  // intercept first
  std::size_t n = 0;
  double r_squared = 0.0;
  double adj_r_squared = 0.0;
  double residual_std_error = 0.0;
  MaybeValue f_statistic;  // missing for the intercept-only model
  MaybeValue f_p_value;
  int df_model = 0;
  int df_residual = 0;
  std::vector<double> residuals;
  bool has_relative_importance = false;
};

inline constexpr std::size_t kLmgPredictorLimit = 15;

// Ordinary least squares with intercept. Requires n > k + 1 and a full-rank
// design; otherwise throws Error(kStats) naming the collinear columns.
// Relative importance (LMG) is filled in for up to 15 predictors.
RegressionSummary ols_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                          const std::vector<std::string>& names);

// LMG decomposition of R^2: each predictor's increase in R^2 averaged over
// all orders of entry. Entries sum to the full-model R^2.
std::vector<double> lmg(const Eigen::MatrixXd& x, const Eigen::VectorXd& y);

// Depth-first walk over every non-singular subset of the columns of x,
// reporting the residual sum of squares of y regressed on the subset plus
// an intercept. The empty subset is reported first. A subset whose columns
// are collinear is skipped together with all its supersets on that branch.
void for_each_subset_rss(
    const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
    const std::function<void(std::span<const std::size_t>, double)>& visit);

}  // namespace ascan::stats

#endif  // ASCAN_STATS_HPP_
