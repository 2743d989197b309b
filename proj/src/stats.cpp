#include "itsforge/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "itsforge/dist.hpp"

namespace itsforge::stats {

double arv_vectors(const std::vector<std::vector<double>>& actuals,
                   const std::vector<std::vector<double>>& predictions) {
    if (actuals.size() != predictions.size())
        throw std::invalid_argument("arv: length mismatch");
    if (actuals.empty())
        throw std::invalid_argument("arv: empty input");
    const std::size_t m = actuals.front().size();

    std::vector<double> means(m, 0.0);
    for (const auto& y : actuals) {
        if (y.size() != m)
            throw std::invalid_argument("arv: ragged actuals");
        for (std::size_t j = 0; j < m; ++j)
            means[j] += y[j];
    }
    for (double& v : means)
        v /= static_cast<double>(actuals.size());

    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t i = 0; i < actuals.size(); ++i) {
        if (predictions[i].size() != m)
            throw std::invalid_argument("arv: ragged predictions");
        for (std::size_t j = 0; j < m; ++j) {
            const double e = actuals[i][j] - predictions[i][j];
            const double d = actuals[i][j] - means[j];
            numerator += e * e;
            denominator += d * d;
        }
    }
    if (denominator == 0.0)
        return numerator == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return numerator / denominator;
}

double arv_interval(std::span<const Interval> actuals, std::span<const Interval> predictions) {
    if (actuals.size() != predictions.size())
        throw std::invalid_argument("arv: length mismatch");
    std::vector<std::vector<double>> a, p;
    a.reserve(actuals.size());
    p.reserve(predictions.size());
    for (const auto& iv : actuals)
        a.push_back({iv.lower, iv.upper});
    for (const auto& iv : predictions)
        p.push_back({iv.lower, iv.upper});
    return arv_vectors(a, p);
}

namespace {

void validate_groups(const std::vector<ReplicateResults>& groups) {
    if (groups.size() < 2)
        throw std::invalid_argument("need at least 2 groups");
    for (const auto& g : groups) {
        if (g.arv_values.size() < 2)
            throw std::invalid_argument("group '" + g.method + "' needs at least 2 values");
        for (double v : g.arv_values)
            if (!std::isfinite(v))
                throw std::invalid_argument("group '" + g.method + "' has a non-finite value");
    }
}

double group_mean(const ReplicateResults& g) {
    return std::accumulate(g.arv_values.begin(), g.arv_values.end(), 0.0) /
           static_cast<double>(g.arv_values.size());
}

} // namespace

AnovaResult one_way_anova(const std::vector<ReplicateResults>& groups) {
    validate_groups(groups);
    const std::size_t k = groups.size();
    std::size_t n_total = 0;
    double grand_sum = 0.0;
    for (const auto& g : groups) {
        n_total += g.arv_values.size();
        grand_sum = std::accumulate(g.arv_values.begin(), g.arv_values.end(), grand_sum);
    }
    const double grand_mean = grand_sum / static_cast<double>(n_total);

    double ss_between = 0.0;
    double ss_within = 0.0;
    for (const auto& g : groups) {
        const double mean = group_mean(g);
        const double dm = mean - grand_mean;
        ss_between += static_cast<double>(g.arv_values.size()) * dm * dm;
        for (double v : g.arv_values) {
            const double d = v - mean;
            ss_within += d * d;
        }
    }

    AnovaResult result;
    result.df_between = k - 1;
    result.df_within = n_total - k;
    if (ss_within == 0.0 && ss_between > 0.0) {
        result.f_statistic = std::numeric_limits<double>::infinity();
        result.p_value = 0.0;
        result.degenerate = true;
        return result;
    }
    if (ss_between == 0.0) {
        result.f_statistic = 0.0;
        result.p_value = 1.0;
        return result;
    }
    const double ms_between = ss_between / static_cast<double>(result.df_between);
    const double ms_within = ss_within / static_cast<double>(result.df_within);
    result.f_statistic = ms_between / ms_within;
    result.p_value = f_sf(result.f_statistic, static_cast<double>(result.df_between),
                          static_cast<double>(result.df_within));
    return result;
}

TukeyResult tukey_hsd(const std::vector<ReplicateResults>& groups, double alpha) {
    validate_groups(groups);
    const std::size_t k = groups.size();

    std::size_t n_total = 0;
    double ss_within = 0.0;
    std::vector<double> means(k);
    for (std::size_t g = 0; g < k; ++g) {
        means[g] = group_mean(groups[g]);
        n_total += groups[g].arv_values.size();
        for (double v : groups[g].arv_values) {
            const double d = v - means[g];
            ss_within += d * d;
        }
    }
    const std::size_t df_within = n_total - k;
    const double ms_within = ss_within / static_cast<double>(df_within);

    TukeyResult result;
    result.alpha = alpha;
    result.anova_significant = one_way_anova(groups).p_value < alpha;

    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            TukeyPair pair;
            pair.group_a = a;
            pair.group_b = b;
            pair.mean_difference = means[a] - means[b];
            const double na = static_cast<double>(groups[a].arv_values.size());
            const double nb = static_cast<double>(groups[b].arv_values.size());
            // Tukey-Kramer standard error, exact Tukey when na == nb
            const double se = std::sqrt(0.5 * ms_within * (1.0 / na + 1.0 / nb));
            if (se == 0.0) {
                pair.q_statistic = pair.mean_difference == 0.0
                                       ? 0.0
                                       : std::numeric_limits<double>::infinity();
            } else {
                pair.q_statistic = std::fabs(pair.mean_difference) / se;
            }
            pair.p_value = studentized_range_sf(pair.q_statistic, static_cast<int>(k),
                                                static_cast<double>(df_within));
            pair.significant = pair.p_value < alpha;
            result.pairs.push_back(pair);
        }
    }

    result.ranking.resize(k);
    std::iota(result.ranking.begin(), result.ranking.end(), std::size_t{0});
    std::stable_sort(result.ranking.begin(), result.ranking.end(),
                     [&](std::size_t a, std::size_t b) { return means[a] < means[b]; });

    result.adjacent_significant.resize(k >= 1 ? k - 1 : 0);
    for (std::size_t r = 0; r + 1 < k; ++r) {
        const std::size_t a = std::min(result.ranking[r], result.ranking[r + 1]);
        const std::size_t b = std::max(result.ranking[r], result.ranking[r + 1]);
        for (const auto& pair : result.pairs)
            if (pair.group_a == a && pair.group_b == b)
                result.adjacent_significant[r] = pair.significant;
    }
    return result;
}

std::string render_ranking(const std::vector<ReplicateResults>& groups,
                           const TukeyResult& tukey) {
    std::string out;
    for (std::size_t r = 0; r < tukey.ranking.size(); ++r) {
        if (r > 0)
            out += tukey.adjacent_significant[r - 1] ? " <* " : " < ";
        out += groups[tukey.ranking[r]].method;
    }
    return out;
}

} // namespace itsforge::stats
