#include "trendfit/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trendfit/error.hpp"

namespace trendfit {

namespace {

void check_pair(std::span<const double> actual, std::span<const double> predicted) {
    if (actual.empty())
        throw std::invalid_argument("metrics need at least one sample");
    if (actual.size() != predicted.size())
        throw std::invalid_argument("actual/predicted length mismatch");
}

} // namespace

double r_squared(std::span<const double> actual, std::span<const double> predicted) {
    check_pair(actual, predicted);
    double mean = 0.0;
    for (double a : actual)
        mean += a;
    mean /= static_cast<double>(actual.size());

    double rss = 0.0;
    double tss = 0.0;
    for (size_t i = 0; i < actual.size(); ++i) {
        double r = actual[i] - predicted[i];
        double d = actual[i] - mean;
        rss += r * r;
        tss += d * d;
    }
    if (tss == 0.0)
        throw NumericError("r_squared undefined: actual values are constant (TSS = 0)");
    return 1.0 - rss / tss;
}

double rmse(std::span<const double> actual, std::span<const double> predicted) {
    check_pair(actual, predicted);
    double acc = 0.0;
    for (size_t i = 0; i < actual.size(); ++i) {
        double r = predicted[i] - actual[i];
        acc += r * r;
    }
    return std::sqrt(acc / static_cast<double>(actual.size()));
}

FitMetrics evaluate(const TrainedModel& m, const TimeSeries& s) {
    validate_series(s);
    std::vector<double> actual = values_of(s);
    std::vector<double> predicted;
    predicted.reserve(s.points.size());
    for (const auto& p : s.points)
        predicted.push_back(predict(m, p.year));
    return {m.kind, r_squared(actual, predicted), rmse(actual, predicted)};
}

ModelChoice select_model(std::vector<FitMetrics> candidates, std::vector<SkippedModel> skipped) {
    if (candidates.empty())
        throw std::invalid_argument("select_model: no candidates");

    // Eligibility is measured from the global maximum so that candidate
    // order cannot change the outcome (pairwise near-ties are not
    // transitive).
    constexpr double r2_tie = 1e-9;
    double best_r2 = candidates[0].r_squared;
    for (const auto& c : candidates)
        best_r2 = std::max(best_r2, c.r_squared);

    const FitMetrics* best = nullptr;
    for (const auto& c : candidates) {
        if (c.r_squared < best_r2 - r2_tie)
            continue;
        if (!best || c.rmse < best->rmse ||
            (c.rmse == best->rmse && static_cast<int>(c.kind) < static_cast<int>(best->kind)))
            best = &c;
    }

    return {std::move(candidates), best->kind, std::move(skipped)};
}

} // namespace trendfit
