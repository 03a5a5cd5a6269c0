#include "trendfit/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trendfit/error.hpp"

namespace trendfit {

ScalingParams::ScalingParams(double min, double max) : min_(min), max_(max) {
    if (!std::isfinite(min) || !std::isfinite(max))
        throw NumericError("scaling bounds must be finite");
    if (!(max > min))
        throw NumericError("degenerate scaling: min " + std::to_string(min) +
                           " is not below max " + std::to_string(max));
}

ScalingParams fit_minmax(std::span<const double> values) {
    if (values.empty())
        throw std::invalid_argument("fit_minmax: no values");
    for (double v : values) {
        if (!std::isfinite(v))
            throw NumericError("fit_minmax: non-finite value");
    }
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*lo == *hi)
        throw NumericError("degenerate scaling: all " + std::to_string(values.size()) +
                           " values equal " + std::to_string(*lo));
    return {*lo, *hi};
}

double normalize(double x, const ScalingParams& p) noexcept {
    return (x - p.min()) / p.range();
}

double denormalize(double x_prime, const ScalingParams& p) noexcept {
    return x_prime * p.range() + p.min();
}

} // namespace trendfit
