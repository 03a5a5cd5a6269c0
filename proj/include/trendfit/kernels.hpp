#pragma once

#include <span>
#include <vector>

#include "trendfit/matrix.hpp"

namespace trendfit {

// serial is the reference implementation; parallel uses OpenMP when the
// build has it and falls back to serial otherwise. Both accumulate
// per-thread partials that are combined in thread order, so results are
// reproducible run to run at a fixed thread count.
enum class ExecMode { serial, parallel };

// Mean squared error halved: J(w) = 1/(2N) * sum((x_i.w - y_i)^2).
double loss(std::span<const double> weights, const DesignMatrix& m,
            ExecMode mode = ExecMode::serial);

// dJ/dw_j = 1/N * sum((x_i.w - y_i) * x_ij).
std::vector<double> loss_gradient(std::span<const double> weights, const DesignMatrix& m,
                                  ExecMode mode = ExecMode::serial);

// One pass over the data computing both; writes into grad (size cols).
double loss_and_gradient(std::span<const double> weights, const DesignMatrix& m,
                         std::span<double> grad, ExecMode mode = ExecMode::serial);

} // namespace trendfit
