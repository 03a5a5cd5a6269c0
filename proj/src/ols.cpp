#include "trendfit/ols.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "trendfit/error.hpp"

namespace trendfit {

Weights ols_fit(const DesignMatrix& m) {
    const int n = m.rows();
    const int k = m.cols();
    const double* feats = m.features_flat().data();
    const double* y = m.targets().data();

    // Normal equations: a = X'X (k x k), b = X'y.
    std::vector<double> a(static_cast<size_t>(k) * k, 0.0);
    std::vector<double> b(static_cast<size_t>(k), 0.0);
    for (int i = 0; i < n; ++i) {
        const double* row = feats + static_cast<size_t>(i) * k;
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < k; ++c)
                a[static_cast<size_t>(r) * k + c] += row[r] * row[c];
            b[static_cast<size_t>(r)] += row[r] * y[i];
        }
    }

    double scale = 0.0;
    for (double v : a)
        scale = std::max(scale, std::abs(v));
    const double pivot_floor = scale * 1e-13;

    // Gaussian elimination with partial pivoting on [a | b].
    for (int col = 0; col < k; ++col) {
        int pivot = col;
        double best = std::abs(a[static_cast<size_t>(col) * k + col]);
        for (int r = col + 1; r < k; ++r) {
            double cand = std::abs(a[static_cast<size_t>(r) * k + col]);
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (!(best > pivot_floor))
            throw NumericError("singular normal equations: columns of the design matrix are "
                               "linearly dependent (fewer distinct x values than weights?)");
        if (pivot != col) {
            for (int c = 0; c < k; ++c)
                std::swap(a[static_cast<size_t>(pivot) * k + c], a[static_cast<size_t>(col) * k + c]);
            std::swap(b[static_cast<size_t>(pivot)], b[static_cast<size_t>(col)]);
        }
        for (int r = col + 1; r < k; ++r) {
            double f = a[static_cast<size_t>(r) * k + col] / a[static_cast<size_t>(col) * k + col];
            if (f == 0.0)
                continue;
            for (int c = col; c < k; ++c)
                a[static_cast<size_t>(r) * k + c] -= f * a[static_cast<size_t>(col) * k + c];
            b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(col)];
        }
    }

    Weights w(static_cast<size_t>(k), 0.0);
    for (int r = k - 1; r >= 0; --r) {
        double acc = b[static_cast<size_t>(r)];
        for (int c = r + 1; c < k; ++c)
            acc -= a[static_cast<size_t>(r) * k + c] * w[static_cast<size_t>(c)];
        w[static_cast<size_t>(r)] = acc / a[static_cast<size_t>(r) * k + r];
    }

    for (double v : w) {
        if (!std::isfinite(v))
            throw NumericError("singular normal equations: non-finite solution");
    }
    return w;
}

} // namespace trendfit
