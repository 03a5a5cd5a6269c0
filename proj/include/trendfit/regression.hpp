#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trendfit/kernels.hpp"
#include "trendfit/matrix.hpp"
#include "trendfit/scaling.hpp"
#include "trendfit/timeseries.hpp"

namespace trendfit {

enum class ModelKind { linear, quadratic, exponential };

inline constexpr ModelKind all_model_kinds[] = {
    ModelKind::linear, ModelKind::quadratic, ModelKind::exponential};

// Number of trainable weights: linear 2, quadratic 3, exponential 2.
int weight_count(ModelKind kind) noexcept;

std::string_view kind_name(ModelKind kind) noexcept; // "Linear" etc.
std::optional<ModelKind> kind_from_name(std::string_view name) noexcept;

using Weights = std::vector<double>;

struct TrainingConfig {
    double learning_rate = 0.1;
    long max_iterations = 200000;
    // |J_t - J_{t-1}| <= convergence_tol stops training early. 0 disables
    // the early stop: near the optimum the loss only jitters at ulp scale,
    // and stopping on that jitter leaves the weights measurably short of
    // the least-squares solution. Running the full iteration budget gets
    // within ~1e-12 of it on normalized data.
    double convergence_tol = 0.0;
};

void validate_config(const TrainingConfig& cfg);

// Feature row for a normalized x: linear [1, x], quadratic [1, x, x^2],
// exponential [1, x] (the curvature lives in the log-space target).
std::vector<double> features(ModelKind kind, double x_norm);

// Dot product of weights and features.
double hypothesis(std::span<const double> weights, std::span<const double> feats);

DesignMatrix build_design_matrix(ModelKind kind, std::span<const double> x_norm,
                                 std::span<const double> y_norm);

struct GdResult {
    Weights weights;
    double final_loss = 0.0;
    long iterations = 0;          // update steps actually taken
    std::vector<double> loss_history; // J before any step, then after each
};

// Batch gradient descent from zero-initialized weights. Throws
// NumericError if the loss goes non-finite or rises materially for five
// consecutive steps (divergence).
GdResult gradient_descent(const DesignMatrix& m, const TrainingConfig& cfg,
                          ExecMode mode = ExecMode::serial);

struct TrainedModel {
    ModelKind kind;
    Weights weights;        // in normalized space
    ScalingParams x_scale;  // fit over training years
    ScalingParams y_scale;  // fit over raw values, or ln(values) for exponential
    double training_loss = 0.0;
};

// The normalized problem fit() trains on, exposed so tests and oracles can
// solve the exact same system.
struct PreparedProblem {
    DesignMatrix matrix;
    ScalingParams x_scale;
    ScalingParams y_scale;
};

// Throws NumericError for an exponential fit of non-positive values or for
// degenerate scaling (constant targets, single distinct year).
PreparedProblem prepare_problem(const TimeSeries& s, ModelKind kind);

TrainedModel fit(const TimeSeries& s, ModelKind kind, const TrainingConfig& cfg,
                 ExecMode mode = ExecMode::serial);

// Model output in original units at the given year. Extrapolates freely.
double predict(const TrainedModel& m, int year);

} // namespace trendfit
