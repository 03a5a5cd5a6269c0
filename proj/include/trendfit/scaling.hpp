#pragma once

#include <span>

namespace trendfit {

// Min-max scaling parameters. Construction rejects min >= max, so a valid
// instance always has a positive range.
class ScalingParams {
public:
    ScalingParams(double min, double max);

    double min() const noexcept { return min_; }
    double max() const noexcept { return max_; }
    double range() const noexcept { return max_ - min_; }

private:
    double min_;
    double max_;
};

// Scaling parameters spanning [min(values), max(values)].
// Throws NumericError if all values are equal (degenerate scaling).
ScalingParams fit_minmax(std::span<const double> values);

// Maps p.min -> 0 and p.max -> 1. Values outside [min, max] map outside
// [0, 1]; there is no clamping, which is what lets forecasts extrapolate.
double normalize(double x, const ScalingParams& p) noexcept;

// Inverse of normalize.
double denormalize(double x_prime, const ScalingParams& p) noexcept;

} // namespace trendfit
