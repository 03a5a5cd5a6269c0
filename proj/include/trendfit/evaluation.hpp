#pragma once

#include <span>
#include <string>
#include <vector>

#include "trendfit/regression.hpp"
#include "trendfit/timeseries.hpp"

namespace trendfit {

// Goodness of fit in original units.
struct FitMetrics {
    ModelKind kind;
    double r_squared = 0.0; // 1 - RSS/TSS, <= 1, unbounded below
    double rmse = 0.0;      // sqrt(mean squared residual), >= 0
};

struct SkippedModel {
    ModelKind kind;
    std::string reason;
};

struct ModelChoice {
    std::vector<FitMetrics> candidates; // at least one
    ModelKind selected;
    std::vector<SkippedModel> skipped;
};

// Throws std::invalid_argument on length mismatch or empty input, and
// NumericError when actual is constant (TSS = 0 leaves R^2 undefined).
double r_squared(std::span<const double> actual, std::span<const double> predicted);

double rmse(std::span<const double> actual, std::span<const double> predicted);

// Metrics of the model over the series it was trained on, computed on
// denormalized predictions against the raw values.
FitMetrics evaluate(const TrainedModel& m, const TimeSeries& s);

// Highest R^2 wins; R^2 ties within 1e-9 break toward lower RMSE, then
// toward the simpler kind (linear < quadratic < exponential). The eligible
// set is measured from the maximum R^2, so candidate order never matters.
ModelChoice select_model(std::vector<FitMetrics> candidates,
                         std::vector<SkippedModel> skipped = {});

} // namespace trendfit
