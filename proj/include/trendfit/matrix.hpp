#pragma once

#include <span>
#include <vector>

namespace trendfit {

// Row-major feature matrix paired with its target vector. Construction
// rejects size mismatches, non-finite entries, and underdetermined shapes
// (rows < cols), so downstream code can assume a well-posed problem.
class DesignMatrix {
public:
    DesignMatrix(std::vector<double> features, std::vector<double> targets, int cols);

    int rows() const noexcept { return static_cast<int>(targets_.size()); }
    int cols() const noexcept { return cols_; }

    std::span<const double> row(int i) const noexcept {
        return {features_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)};
    }
    std::span<const double> targets() const noexcept { return targets_; }
    std::span<const double> features_flat() const noexcept { return features_; }

private:
    std::vector<double> features_;
    std::vector<double> targets_;
    int cols_;
};

} // namespace trendfit
