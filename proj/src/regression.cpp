#include "trendfit/regression.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "trendfit/error.hpp"

namespace trendfit {

int weight_count(ModelKind kind) noexcept {
    return kind == ModelKind::quadratic ? 3 : 2;
}

std::string_view kind_name(ModelKind kind) noexcept {
    switch (kind) {
    case ModelKind::linear: return "Linear";
    case ModelKind::quadratic: return "Quadratic";
    case ModelKind::exponential: return "Exponential";
    }
    return "?";
}

std::optional<ModelKind> kind_from_name(std::string_view name) noexcept {
    for (ModelKind k : all_model_kinds) {
        if (name == kind_name(k))
            return k;
    }
    return std::nullopt;
}

void validate_config(const TrainingConfig& cfg) {
    if (!(cfg.learning_rate > 0) || !std::isfinite(cfg.learning_rate))
        throw InputError("learning_rate must be positive and finite");
    if (cfg.max_iterations < 1)
        throw InputError("max_iterations must be >= 1");
    if (cfg.convergence_tol < 0 || !std::isfinite(cfg.convergence_tol))
        throw InputError("convergence_tol must be >= 0");
}

std::vector<double> features(ModelKind kind, double x_norm) {
    if (kind == ModelKind::quadratic)
        return {1.0, x_norm, x_norm * x_norm};
    return {1.0, x_norm};
}

double hypothesis(std::span<const double> weights, std::span<const double> feats) {
    if (weights.size() != feats.size())
        throw std::invalid_argument("hypothesis: weight/feature length mismatch");
    double acc = 0.0;
    for (size_t j = 0; j < weights.size(); ++j)
        acc += weights[j] * feats[j];
    return acc;
}

DesignMatrix build_design_matrix(ModelKind kind, std::span<const double> x_norm,
                                 std::span<const double> y_norm) {
    const int k = weight_count(kind);
    std::vector<double> flat;
    flat.reserve(x_norm.size() * static_cast<size_t>(k));
    for (double x : x_norm) {
        auto row = features(kind, x);
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return DesignMatrix(std::move(flat), {y_norm.begin(), y_norm.end()}, k);
}

GdResult gradient_descent(const DesignMatrix& m, const TrainingConfig& cfg, ExecMode mode) {
    validate_config(cfg);

    const int k = m.cols();
    GdResult res;
    res.weights.assign(static_cast<size_t>(k), 0.0);
    res.loss_history.reserve(static_cast<size_t>(cfg.max_iterations) + 1);

    std::vector<double> grad(static_cast<size_t>(k), 0.0);

    // The loss jitters by an ulp once the weights reach the FP fixed point,
    // so divergence counts only material increases.
    constexpr double rise_factor = 1.0 + 1e-9;
    int rising = 0;
    double prev = 0.0;
    double cur = 0.0;
    // Exactly fittable data drives the loss to its rounding floor, where it
    // is pure noise and relative rises mean nothing. Real divergence climbs
    // back toward the initial loss, so rises only count above this floor.
    double noise_floor = 0.0;

    while (true) {
        cur = loss_and_gradient(res.weights, m, grad, mode);
        res.loss_history.push_back(cur);

        if (!std::isfinite(cur))
            throw NumericError("gradient descent produced a non-finite loss at iteration " +
                               std::to_string(res.iterations) + "; lower the learning rate");
        if (res.iterations == 0)
            noise_floor = cur * 1e-15;
        if (res.iterations > 0) {
            if (cur > prev * rise_factor && cur > noise_floor) {
                if (++rising >= 5) {
                    char loss_str[32];
                    std::snprintf(loss_str, sizeof loss_str, "%g", cur);
                    throw NumericError("gradient descent diverged: loss rose for 5 consecutive "
                                       "iterations, reaching " + std::string(loss_str) +
                                       " at iteration " + std::to_string(res.iterations) +
                                       "; lower the learning rate");
                }
            } else {
                rising = 0;
            }
            if (cfg.convergence_tol > 0 && std::abs(cur - prev) <= cfg.convergence_tol)
                break;
        }
        if (res.iterations == cfg.max_iterations)
            break;

        for (int j = 0; j < k; ++j)
            res.weights[static_cast<size_t>(j)] -= cfg.learning_rate * grad[static_cast<size_t>(j)];
        ++res.iterations;
        prev = cur;
    }

    res.final_loss = cur;
    return res;
}

PreparedProblem prepare_problem(const TimeSeries& s, ModelKind kind) {
    validate_series(s);

    auto xs = years_of(s);
    auto ys = values_of(s);
    if (kind == ModelKind::exponential) {
        for (size_t i = 0; i < ys.size(); ++i) {
            if (!(ys[i] > 0))
                throw NumericError("exponential fit of '" + s.name + "': value " +
                                   std::to_string(ys[i]) + " at year " +
                                   std::to_string(s.points[i].year) +
                                   " is not strictly positive (log undefined)");
            ys[i] = std::log(ys[i]);
        }
    }

    ScalingParams x_scale = fit_minmax(xs);
    ScalingParams y_scale = fit_minmax(ys);
    for (auto& x : xs)
        x = normalize(x, x_scale);
    for (auto& y : ys)
        y = normalize(y, y_scale);

    return {build_design_matrix(kind, xs, ys), x_scale, y_scale};
}

TrainedModel fit(const TimeSeries& s, ModelKind kind, const TrainingConfig& cfg, ExecMode mode) {
    PreparedProblem prob = prepare_problem(s, kind);
    GdResult gd = gradient_descent(prob.matrix, cfg, mode);
    return {kind, std::move(gd.weights), prob.x_scale, prob.y_scale, gd.final_loss};
}

double predict(const TrainedModel& m, int year) {
    double x = normalize(static_cast<double>(year), m.x_scale);
    double v = hypothesis(m.weights, features(m.kind, x));
    double y = denormalize(v, m.y_scale);
    return m.kind == ModelKind::exponential ? std::exp(y) : y;
}

} // namespace trendfit
