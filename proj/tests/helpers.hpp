#pragma once

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "trendfit/ingest.hpp"
#include "trendfit/kernels.hpp"
#include "trendfit/matrix.hpp"
#include "trendfit/regression.hpp"

namespace testutil {

inline trendfit::TimeSeries make_series(std::string name, const std::vector<int>& years,
                                        const std::vector<double>& values, int id = 1) {
    trendfit::TimeSeries s;
    s.id = id;
    s.name = std::move(name);
    s.unit = trendfit::unit_from_name(s.name);
    for (size_t i = 0; i < years.size(); ++i)
        s.points.push_back({years[i], values[i]});
    return s;
}

// y = f(x) over years base..base+n-1 with x = year - base.
template <typename F>
trendfit::TimeSeries series_from(F&& f, int n, int base = 2000, std::string name = "synthetic") {
    std::vector<int> years;
    std::vector<double> values;
    for (int x = 0; x < n; ++x) {
        years.push_back(base + x);
        values.push_back(f(static_cast<double>(x)));
    }
    return make_series(std::move(name), years, values);
}

inline std::vector<trendfit::TimeSeries> load_fixture_series() {
    std::ifstream in(TRENDFIT_FIXTURE_CSV, std::ios::binary);
    REQUIRE(in.good());
    auto ds = trendfit::parse_wide_csv(in);
    return trendfit::select_series(ds, trendfit::SelectionRules{});
}

inline trendfit::DesignMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> feats(static_cast<size_t>(rows) * cols);
    std::vector<double> targets(static_cast<size_t>(rows));
    for (auto& v : feats)
        v = dist(rng);
    for (auto& v : targets)
        v = dist(rng);
    return {std::move(feats), std::move(targets), cols};
}

// Central finite difference of the loss in each weight direction.
inline std::vector<double> fd_gradient(const std::vector<double>& w,
                                       const trendfit::DesignMatrix& m, double h = 1e-6) {
    std::vector<double> g(w.size(), 0.0);
    for (size_t j = 0; j < w.size(); ++j) {
        std::vector<double> lo = w;
        std::vector<double> hi = w;
        lo[j] -= h;
        hi[j] += h;
        g[j] = (trendfit::loss(hi, m) - trendfit::loss(lo, m)) / (2.0 * h);
    }
    return g;
}

inline double max_component_gap(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

} // namespace testutil
