#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "itsforge/series.hpp"

namespace itsforge::stats {

// Interval average relative variance: squared bound errors normalized by
// squared deviations from the sample-average bounds. 0 is a perfect
// forecast; predicting the mean interval everywhere scores exactly 1.
// A constant actual series forecast perfectly scores 0 (0/0 convention);
// missing a constant series scores +infinity.
double arv_interval(std::span<const Interval> actuals, std::span<const Interval> predictions);

// Same measure over generic fixed-width target vectors (width 1 gives the
// per-bound univariate value).
double arv_vectors(const std::vector<std::vector<double>>& actuals,
                   const std::vector<std::vector<double>>& predictions);

struct ReplicateResults {
    std::string method;
    int horizon = 0;
    std::vector<double> arv_values; // one per replication, finite and >= 0
};

struct AnovaResult {
    double f_statistic = 0.0;
    double p_value = 1.0;
    std::size_t df_between = 0;
    std::size_t df_within = 0;
    bool degenerate = false; // zero within-group variance with nonzero between
};

AnovaResult one_way_anova(const std::vector<ReplicateResults>& groups);

struct TukeyPair {
    std::size_t group_a = 0;
    std::size_t group_b = 0;
    double mean_difference = 0.0;
    double q_statistic = 0.0;
    double p_value = 1.0;
    bool significant = false;
};

struct TukeyResult {
    double alpha = 0.05;
    std::vector<TukeyPair> pairs;                // all unordered pairs, a < b
    std::vector<std::size_t> ranking;            // group indices, best mean first
    std::vector<bool> adjacent_significant;      // between rank r and r+1
    bool anova_significant = true;               // post-hoc precondition advisory
};

// All-pairs mean comparison via the studentized range, Tukey-Kramer standard
// error for unequal group sizes. Runs even when the ANOVA is not significant
// but flags it, since it is meant as a post-hoc test.
TukeyResult tukey_hsd(const std::vector<ReplicateResults>& groups, double alpha = 0.05);

// One ranked line per call, e.g. "fa_msvr <* persistence < univariate_svr":
// "<*" marks a significant difference between adjacent ranks.
std::string render_ranking(const std::vector<ReplicateResults>& groups,
                           const TukeyResult& tukey);

} // namespace itsforge::stats
