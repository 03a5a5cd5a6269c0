#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "trendfit/regression.hpp"
#include "trendfit/timeseries.hpp"

namespace trendfit {

struct ForecastRequest {
    std::vector<int> years; // non-empty, strictly ascending
};

// Throws InputError on an empty or non-ascending year list.
void validate_request(const ForecastRequest& req);

struct ForecastRow {
    int parameter_id = 0;
    std::string parameter_name;
    std::map<int, double> predictions; // year -> value, original units
};

// Predictions for each requested year. Every year must lie strictly beyond
// the model's training range (x_scale.max); violations are InputError.
// Non-finite predictions (e.g. exponential overflow) are NumericError.
std::map<int, double> forecast(const TrainedModel& m, const ForecastRequest& req);

struct SeriesModel {
    TimeSeries series;
    TrainedModel model;
};

// One row per series, ordered by series id.
std::vector<ForecastRow> forecast_table(std::span<const SeriesModel> selected,
                                        const ForecastRequest& req);

} // namespace trendfit
