#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "trendfit/ingest.hpp"
#include "trendfit/pipeline.hpp"

namespace trendfit {

// Shortest decimal string that parses back to exactly v (std::to_chars).
std::string format_double(double v);

// Fixed-point with half-away-from-zero rounding at decimal_places.
std::string format_fixed(double v, int decimal_places);

// Like format_fixed, but |v| >= 1e8 switches to scientific notation with a
// three-decimal mantissa ("1.509e+09") so table columns stay readable.
std::string format_forecast_value(double v, int decimal_places);

// Columns: parameter, r_squared, rmse, model_type. One row per series with
// the selected kind's metrics, rounded to decimal_places.
std::string render_metrics_table(std::span<const SeriesReport> reports,
                                 TableFormat format, int decimal_places);

// Columns: parameter, then one per forecast year. Reports lacking a
// forecast must not reach this; that is a caller bug.
std::string render_forecast_table(std::span<const SeriesReport> reports,
                                  TableFormat format, int decimal_places);

// Inverse of parse_long_csv: header plus one row per record, absent values
// as empty cells, full-precision values.
std::string render_long_csv(const RawDataset& ds);

// Writes plot_<id>.csv (header year,actual,fitted): one row per training
// point with the selected model's fitted value, then one row per forecast
// year with an empty actual column. Returns the written path.
std::filesystem::path emit_plot_series(const SeriesReport& report, const TimeSeries& series,
                                       const std::filesystem::path& dir);

} // namespace trendfit
