#include "trendfit/kernels.hpp"

#include <cassert>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trendfit {

namespace {

void check_sizes(std::span<const double> weights, const DesignMatrix& m) {
    if (static_cast<int>(weights.size()) != m.cols())
        throw std::invalid_argument("weight count does not match design-matrix columns");
}

double residual_at(std::span<const double> w, const double* row, int k) {
    double pred = 0.0;
    for (int j = 0; j < k; ++j)
        pred += w[j] * row[j];
    return pred;
}

double loss_serial(std::span<const double> w, const DesignMatrix& m) {
    const double* feats = m.features_flat().data();
    const double* y = m.targets().data();
    const int n = m.rows();
    const int k = m.cols();
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = residual_at(w, feats + static_cast<size_t>(i) * k, k) - y[i];
        acc += r * r;
    }
    return acc / (2.0 * n);
}

double fused_serial(std::span<const double> w, const DesignMatrix& m, std::span<double> grad) {
    const double* feats = m.features_flat().data();
    const double* y = m.targets().data();
    const int n = m.rows();
    const int k = m.cols();
    double acc = 0.0;
    for (int j = 0; j < k; ++j)
        grad[j] = 0.0;
    for (int i = 0; i < n; ++i) {
        const double* row = feats + static_cast<size_t>(i) * k;
        double r = residual_at(w, row, k) - y[i];
        acc += r * r;
        for (int j = 0; j < k; ++j)
            grad[j] += r * row[j];
    }
    for (int j = 0; j < k; ++j)
        grad[j] /= n;
    return acc / (2.0 * n);
}

#ifdef _OPENMP

// Each thread accumulates privately and deposits one partial; partials are
// combined in thread-index order so the result never depends on scheduling.
double loss_omp(std::span<const double> w, const DesignMatrix& m) {
    const double* feats = m.features_flat().data();
    const double* y = m.targets().data();
    const int n = m.rows();
    const int k = m.cols();
    const int nthreads = omp_get_max_threads();
    std::vector<double> partial(static_cast<size_t>(nthreads), 0.0);
#pragma omp parallel num_threads(nthreads)
    {
        double local = 0.0;
#pragma omp for schedule(static) nowait
        for (int i = 0; i < n; ++i) {
            double r = residual_at(w, feats + static_cast<size_t>(i) * k, k) - y[i];
            local += r * r;
        }
        partial[static_cast<size_t>(omp_get_thread_num())] = local;
    }
    double acc = 0.0;
    for (double p : partial)
        acc += p;
    return acc / (2.0 * n);
}

double fused_omp(std::span<const double> w, const DesignMatrix& m, std::span<double> grad) {
    const double* feats = m.features_flat().data();
    const double* y = m.targets().data();
    const int n = m.rows();
    const int k = m.cols();
    const int nthreads = omp_get_max_threads();
    // Row p holds thread p's [loss, grad...] partial.
    std::vector<double> partial(static_cast<size_t>(nthreads) * (k + 1), 0.0);
#pragma omp parallel num_threads(nthreads)
    {
        std::vector<double> local(static_cast<size_t>(k) + 1, 0.0);
#pragma omp for schedule(static) nowait
        for (int i = 0; i < n; ++i) {
            const double* row = feats + static_cast<size_t>(i) * k;
            double r = residual_at(w, row, k) - y[i];
            local[0] += r * r;
            for (int j = 0; j < k; ++j)
                local[static_cast<size_t>(j) + 1] += r * row[j];
        }
        double* slot = partial.data() + static_cast<size_t>(omp_get_thread_num()) * (k + 1);
        for (int j = 0; j <= k; ++j)
            slot[j] = local[static_cast<size_t>(j)];
    }
    double acc = 0.0;
    for (int j = 0; j < k; ++j)
        grad[j] = 0.0;
    for (int p = 0; p < nthreads; ++p) {
        const double* slot = partial.data() + static_cast<size_t>(p) * (k + 1);
        acc += slot[0];
        for (int j = 0; j < k; ++j)
            grad[j] += slot[j + 1];
    }
    for (int j = 0; j < k; ++j)
        grad[j] /= n;
    return acc / (2.0 * n);
}

#endif // _OPENMP

} // namespace

double loss(std::span<const double> weights, const DesignMatrix& m, ExecMode mode) {
    check_sizes(weights, m);
#ifdef _OPENMP
    if (mode == ExecMode::parallel)
        return loss_omp(weights, m);
#else
    (void)mode;
#endif
    return loss_serial(weights, m);
}

double loss_and_gradient(std::span<const double> weights, const DesignMatrix& m,
                         std::span<double> grad, ExecMode mode) {
    check_sizes(weights, m);
    assert(grad.size() == weights.size());
#ifdef _OPENMP
    if (mode == ExecMode::parallel)
        return fused_omp(weights, m, grad);
#else
    (void)mode;
#endif
    return fused_serial(weights, m, grad);
}

std::vector<double> loss_gradient(std::span<const double> weights, const DesignMatrix& m,
                                  ExecMode mode) {
    std::vector<double> grad(weights.size(), 0.0);
    loss_and_gradient(weights, m, grad, mode);
    return grad;
}

} // namespace trendfit
