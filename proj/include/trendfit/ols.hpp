#pragma once

#include "trendfit/matrix.hpp"
#include "trendfit/regression.hpp"

namespace trendfit {

// Closed-form least squares via the normal equations X'Xw = X'y, solved by
// Gaussian elimination with partial pivoting. Serves as the independent
// oracle the gradient-descent fits are checked against. Throws
// NumericError on a singular (or numerically singular) system.
Weights ols_fit(const DesignMatrix& m);

} // namespace trendfit
