#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "trendfit/kernels.hpp"
#include "trendfit/matrix.hpp"
#include "trendfit/regression.hpp"

namespace {

using namespace trendfit;
using clock_type = std::chrono::steady_clock;

DesignMatrix random_matrix(int rows, int cols, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> feats(static_cast<size_t>(rows) * cols);
    std::vector<double> targets(static_cast<size_t>(rows));
    for (auto& v : feats)
        v = dist(rng);
    for (auto& v : targets)
        v = dist(rng);
    return {std::move(feats), std::move(targets), cols};
}

template <typename F>
double time_best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = clock_type::now();
        body();
        auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

// The checksum defeats dead-code elimination.
double sink = 0.0;

void bench_kernels(int rows, int cols, int reps, std::mt19937& rng) {
    DesignMatrix m = random_matrix(rows, cols, rng);
    std::vector<double> w(static_cast<size_t>(cols), 0.25);
    std::vector<double> grad(static_cast<size_t>(cols), 0.0);

    double t_loss_s = time_best_of(reps, [&] { sink += loss(w, m, ExecMode::serial); });
    double t_loss_p = time_best_of(reps, [&] { sink += loss(w, m, ExecMode::parallel); });
    double t_fused_s = time_best_of(
        reps, [&] { sink += loss_and_gradient(w, m, grad, ExecMode::serial); });
    double t_fused_p = time_best_of(
        reps, [&] { sink += loss_and_gradient(w, m, grad, ExecMode::parallel); });

    std::printf("%9d %4d | %10.3f %10.3f %7.2fx | %10.3f %10.3f %7.2fx\n", rows, cols,
                t_loss_s * 1e3, t_loss_p * 1e3, t_loss_s / t_loss_p, t_fused_s * 1e3,
                t_fused_p * 1e3, t_fused_s / t_fused_p);
}

void bench_batch_fit(int series_count, int points, long iters, std::mt19937& rng) {
    std::vector<TimeSeries> series(static_cast<size_t>(series_count));
    std::uniform_real_distribution<double> noise(-0.05, 0.05);
    for (int s = 0; s < series_count; ++s) {
        series[static_cast<size_t>(s)].id = s + 1;
        series[static_cast<size_t>(s)].name = "bench " + std::to_string(s + 1);
        for (int i = 0; i < points; ++i) {
            double value = 10.0 + 0.8 * i + 0.01 * i * i + noise(rng);
            series[static_cast<size_t>(s)].points.push_back({1990 + i, value});
        }
    }

    TrainingConfig cfg;
    cfg.max_iterations = iters;

    auto fit_all_serial = [&] {
        for (const auto& s : series)
            sink += fit(s, ModelKind::quadratic, cfg).training_loss;
    };
    auto fit_all_parallel = [&] {
        const int n = series_count;
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i)
            sink += fit(series[static_cast<size_t>(i)], ModelKind::quadratic, cfg).training_loss;
    };

    double t_serial = time_best_of(1, fit_all_serial);
    double t_parallel = time_best_of(1, fit_all_parallel);
    std::printf("\nbatch quadratic fit: %d series x %d points x %ld iters\n", series_count,
                points, iters);
    std::printf("  serial loop   %8.3f ms\n", t_serial * 1e3);
    std::printf("  parallel loop %8.3f ms  (%.2fx)\n", t_parallel * 1e3, t_serial / t_parallel);
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> row_counts = {10000, 100000, 1000000};
    int cols = 3;
    int reps = 5;
    int series_count = 16;
    long iters = 20000;
    unsigned seed = 42;

    CLI::App app{"Timing comparison of the serial and OpenMP kernels"};
    app.add_option("--rows", row_counts, "Design-matrix row counts")->delimiter(',');
    app.add_option("--cols", cols, "Feature columns")->check(CLI::Range(1, 8));
    app.add_option("--reps", reps, "Repetitions (best-of)")->check(CLI::PositiveNumber);
    app.add_option("--series", series_count, "Series in the batch-fit comparison");
    app.add_option("--iters", iters, "Iterations per batch fit");
    app.add_option("--seed", seed, "RNG seed");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP: %d thread(s)\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not compiled in (parallel mode falls back to serial)\n\n");
#endif

    std::mt19937 rng(seed);
    std::printf("%9s %4s | %10s %10s %8s | %10s %10s %8s\n", "rows", "cols", "loss-s(ms)",
                "loss-p(ms)", "speedup", "fused-s(ms)", "fused-p(ms)", "speedup");
    for (int rows : row_counts)
        bench_kernels(rows, cols, reps, rng);

    bench_batch_fit(series_count, 32, iters, rng);

    std::printf("\nchecksum %g\n", sink);
    return 0;
}
