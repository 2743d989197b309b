#include "itsforge/forecast.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "itsforge/stats.hpp"

namespace itsforge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SupervisedDataset subset_pairs(const SupervisedDataset& data, std::size_t skip_begin,
                               std::size_t skip_end) {
    SupervisedDataset out;
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (i >= skip_begin && i < skip_end)
            continue;
        out.inputs.push_back(data.inputs[i]);
        out.targets.push_back(data.targets[i]);
        out.origin_indices.push_back(data.origin_indices[i]);
    }
    return out;
}

} // namespace

double cv_fitness(const SupervisedDataset& estimation, const MsvrHyper& hyper,
                  const TrainOptions& options) {
    const std::size_t n = estimation.size();
    if (n < 10)
        throw std::invalid_argument("cv_fitness: need at least 10 pairs, got " +
                                    std::to_string(n));
    constexpr std::size_t folds = 5;
    double total = 0.0;
    for (std::size_t f = 0; f < folds; ++f) {
        const std::size_t begin = f * n / folds;
        const std::size_t end = (f + 1) * n / folds;
        try {
            const auto [model, report] = train(subset_pairs(estimation, begin, end), hyper,
                                               options);
            std::vector<std::vector<double>> actuals, predictions;
            actuals.reserve(end - begin);
            predictions.reserve(end - begin);
            for (std::size_t i = begin; i < end; ++i) {
                actuals.push_back(estimation.targets[i]);
                predictions.push_back(model.predict(estimation.inputs[i]));
            }
            const double fold_arv = stats::arv_vectors(actuals, predictions);
            if (!std::isfinite(fold_arv))
                return kInf;
            total += fold_arv;
        } catch (const std::exception&) {
            return kInf;
        }
    }
    return total / static_cast<double>(folds);
}

MsvrHyper hyper_from_position(const std::vector<double>& position) {
    if (position.size() != 3)
        throw std::invalid_argument("hyper position must be 3-dimensional");
    MsvrHyper hyper;
    hyper.c = std::exp2(position[0]);
    hyper.kernel.sigma = std::exp2(position[1]);
    hyper.epsilon = std::exp2(position[2]);
    return hyper;
}

TuneResult tune_detailed(const SupervisedDataset& estimation, FaConfig config,
                         const TrainOptions& options) {
    if (config.bounds.empty())
        config.bounds = {{-6.0, 6.0}, {-6.0, 6.0}, {-6.0, 6.0}};
    if (config.bounds.size() != 3)
        throw std::invalid_argument("tune: expected a 3-dimensional search box");

    TuneResult result;
    result.fa = optimize(
        [&](const std::vector<double>& pos) {
            return cv_fitness(estimation, hyper_from_position(pos), options);
        },
        config);
    result.hyper = hyper_from_position(result.fa.best_position);
    result.fitness = result.fa.best_fitness;
    return result;
}

MsvrHyper tune(const SupervisedDataset& estimation, const FaConfig& config) {
    return tune_detailed(estimation, config).hyper;
}

std::vector<Interval> iterate_steps(const StepPredictor& predict,
                                    std::span<const Interval> history_tail,
                                    std::size_t lag_order, std::size_t horizon) {
    if (horizon < 1)
        throw std::invalid_argument("iterate_steps: horizon must be >= 1");
    if (history_tail.size() < lag_order)
        throw std::invalid_argument("iterate_steps: need at least " +
                                    std::to_string(lag_order) + " observations, got " +
                                    std::to_string(history_tail.size()));

    std::vector<Interval> buffer(history_tail.end() - lag_order, history_tail.end());
    std::vector<Interval> out;
    out.reserve(horizon);
    for (std::size_t step = 0; step < horizon; ++step) {
        const Interval next = predict(buffer);
        out.push_back(next);
        buffer.erase(buffer.begin());
        buffer.push_back(next);
    }
    return out;
}

StepPredictor msvr_step_predictor(const MsvrModel& model, const VariableSet& v,
                                  std::size_t lag_order) {
    if (v.empty())
        throw std::invalid_argument("msvr_step_predictor: empty variable set");
    if (model.output_dim() != 2)
        throw std::invalid_argument("msvr_step_predictor: model must have 2 outputs");
    return [&model, v, lag_order](std::span<const Interval> buffer) {
        std::vector<double> x;
        x.reserve(v.size());
        for (std::size_t idx : v.indices) {
            const std::size_t lag = idx / 2;
            if (lag >= lag_order || lag >= buffer.size())
                throw std::invalid_argument("msvr_step_predictor: lag outside buffer");
            const Interval& iv = buffer[buffer.size() - 1 - lag];
            x.push_back(idx % 2 == 0 ? iv.lower : iv.upper);
        }
        const auto y = model.predict(x);
        return Interval{y[0], y[1]};
    };
}

std::vector<Interval> iterated_forecast(const MsvrModel& model,
                                        std::span<const Interval> history_tail,
                                        const VariableSet& v, std::size_t lag_order,
                                        std::size_t horizon) {
    return iterate_steps(msvr_step_predictor(model, v, lag_order), history_tail, lag_order,
                         horizon);
}

ForecastRun rolling_origin_forecast(const IntervalSeries& series, std::size_t estimation_size,
                                    const StepPredictor& predict, std::size_t lag_order,
                                    std::size_t horizon) {
    const std::size_t n = series.size();
    if (estimation_size < lag_order || estimation_size >= n)
        throw std::invalid_argument("rolling_origin_forecast: bad estimation size");
    if (horizon < 1)
        throw std::invalid_argument("rolling_origin_forecast: horizon must be >= 1");

    ForecastRun run;
    run.horizon = horizon;
    run.scale = series.scale;
    for (std::size_t t = estimation_size; t + horizon < n; ++t) {
        const std::span<const Interval> history(series.intervals.data(), t + 1);
        const auto predictions = iterate_steps(predict, history, lag_order, horizon);
        OriginForecast origin;
        origin.origin_index = t;
        origin.origin_date = series.dates[t];
        origin.steps.reserve(horizon);
        for (std::size_t s = 0; s < horizon; ++s) {
            ForecastStep step;
            step.predicted = predictions[s];
            step.actual = series.intervals[t + 1 + s];
            step.violation = predictions[s].lower > predictions[s].upper;
            if (step.violation)
                ++run.violation_count;
            origin.steps.push_back(step);
        }
        run.origins.push_back(std::move(origin));
    }
    return run;
}

double forecast_run_arv(const ForecastRun& run) {
    std::vector<Interval> actuals, predictions;
    actuals.reserve(run.origins.size());
    predictions.reserve(run.origins.size());
    for (const auto& origin : run.origins) {
        actuals.push_back(origin.steps.back().actual);
        predictions.push_back(origin.steps.back().predicted);
    }
    return stats::arv_interval(actuals, predictions);
}

PipelineResult holdout_evaluate(const IntervalSeries& series, std::size_t horizon,
                                const FaConfig& fa, const PipelineOptions& options) {
    const auto [estimation, holdout] = split_estimation_holdout(series);

    PipelineResult result;
    const SupervisedDataset est_data = embed(estimation, options.lag_order);
    result.selected = forward_backward_select(est_data);
    const SupervisedDataset est_restricted = restrict_to(est_data, result.selected);

    TuneResult tuned = tune_detailed(est_restricted, fa, options.train);
    result.hyper = tuned.hyper;
    result.tuned_fitness = tuned.fitness;

    auto [model, report] = train(est_restricted, result.hyper, options.train);
    result.model = std::move(model);
    result.report = std::move(report);

    result.run = rolling_origin_forecast(
        series, estimation.size(),
        msvr_step_predictor(result.model, result.selected, options.lag_order),
        options.lag_order, horizon);
    result.run.model_fingerprint = result.model.fingerprint();
    result.arv = forecast_run_arv(result.run);
    return result;
}

} // namespace itsforge
