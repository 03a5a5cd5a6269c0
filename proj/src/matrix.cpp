#include "trendfit/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trendfit {

DesignMatrix::DesignMatrix(std::vector<double> features, std::vector<double> targets, int cols)
    : features_(std::move(features)), targets_(std::move(targets)), cols_(cols) {
    if (cols_ < 1)
        throw std::invalid_argument("DesignMatrix: cols must be >= 1");
    if (features_.size() != targets_.size() * static_cast<size_t>(cols_))
        throw std::invalid_argument("DesignMatrix: feature count " +
                                    std::to_string(features_.size()) + " != rows*cols");
    if (targets_.size() < static_cast<size_t>(cols_))
        throw std::invalid_argument("DesignMatrix: " + std::to_string(targets_.size()) +
                                    " rows underdetermine " + std::to_string(cols_) + " columns");
    for (double v : features_) {
        if (!std::isfinite(v))
            throw std::invalid_argument("DesignMatrix: non-finite feature");
    }
    for (double v : targets_) {
        if (!std::isfinite(v))
            throw std::invalid_argument("DesignMatrix: non-finite target");
    }
}

} // namespace trendfit
