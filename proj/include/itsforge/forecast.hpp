#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "itsforge/feature_select.hpp"
#include "itsforge/firefly.hpp"
#include "itsforge/msvr.hpp"
#include "itsforge/series.hpp"

namespace itsforge {

// Mean ARV over 5 contiguous folds of one-step predictions: each fold is
// held out once while a model is trained on the other four. Any training
// failure maps to +infinity so a swarm optimizer treats it as worst.
// Requires at least 10 pairs.
double cv_fitness(const SupervisedDataset& estimation, const MsvrHyper& hyper,
                  const TrainOptions& options = {});

// Position in the search cube is (log2 C, log2 sigma, log2 epsilon).
MsvrHyper hyper_from_position(const std::vector<double>& position);

struct TuneResult {
    MsvrHyper hyper;
    double fitness = 0.0;
    FaResult fa;
};

// Firefly search over the log2 hyperparameter box with cv_fitness as the
// objective. config.bounds defaults to [-6, 6]^3 when left empty.
TuneResult tune_detailed(const SupervisedDataset& estimation, FaConfig config,
                         const TrainOptions& options = {});
MsvrHyper tune(const SupervisedDataset& estimation, const FaConfig& config);

// One interval prediction from the most recent lag_order intervals,
// most recent last.
using StepPredictor = std::function<Interval(std::span<const Interval>)>;

// Multi-step forecasting by feeding each prediction back into the lag
// buffer: returns h predictions in step order. Predicted bound violations
// are propagated as-is.
std::vector<Interval> iterate_steps(const StepPredictor& predict,
                                    std::span<const Interval> history_tail,
                                    std::size_t lag_order, std::size_t horizon);

// Builds the step predictor for a trained model: assembles the full lag
// vector from the buffer, restricts it to v, and predicts both bounds.
StepPredictor msvr_step_predictor(const MsvrModel& model, const VariableSet& v,
                                  std::size_t lag_order);

std::vector<Interval> iterated_forecast(const MsvrModel& model,
                                        std::span<const Interval> history_tail,
                                        const VariableSet& v, std::size_t lag_order,
                                        std::size_t horizon);

struct ForecastStep {
    Interval predicted;
    Interval actual;
    bool violation = false; // predicted lower > upper
};

struct OriginForecast {
    std::size_t origin_index = 0; // index into the full series
    Date origin_date;
    std::vector<ForecastStep> steps; // steps 1..h
};

struct ForecastRun {
    std::size_t horizon = 1;
    Scale scale = Scale::Raw;
    std::vector<OriginForecast> origins;
    std::size_t violation_count = 0;
    std::string model_fingerprint;
};

// Rolling-origin forecasts over the hold-out sample: every origin t in the
// hold-out with t+h still inside it gets an h-step forecast anchored on
// observed intervals up to t. The step-h pairs feed the ARV.
ForecastRun rolling_origin_forecast(const IntervalSeries& series, std::size_t estimation_size,
                                    const StepPredictor& predict, std::size_t lag_order,
                                    std::size_t horizon);

double forecast_run_arv(const ForecastRun& run);

struct PipelineOptions {
    std::size_t lag_order = 12;
    TrainOptions train;
};

struct PipelineResult {
    VariableSet selected;
    MsvrHyper hyper;
    double tuned_fitness = 0.0;
    MsvrModel model;
    TrainReport report;
    ForecastRun run;
    double arv = 0.0;
};

// Full pipeline on one series: split, select inputs, tune, train (all on the
// estimation sample only), then evaluate rolling-origin forecasts on the
// hold-out sample at horizon h.
PipelineResult holdout_evaluate(const IntervalSeries& series, std::size_t horizon,
                                const FaConfig& fa, const PipelineOptions& options = {});

} // namespace itsforge
