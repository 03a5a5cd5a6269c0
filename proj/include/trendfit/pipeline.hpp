#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "trendfit/evaluation.hpp"
#include "trendfit/forecast.hpp"
#include "trendfit/ingest.hpp"
#include "trendfit/regression.hpp"

namespace trendfit {

enum class CsvLayout { long_rows, wide_rows };

enum class TableFormat { markdown, csv, json };

std::optional<CsvLayout> layout_from_name(std::string_view name) noexcept;
std::optional<TableFormat> table_format_from_name(std::string_view name) noexcept;
std::string_view table_format_extension(TableFormat f) noexcept; // "md" etc.

struct PipelineConfig {
    std::string input_path;
    CsvLayout layout = CsvLayout::long_rows;
    SelectionRules selection;
    TrainingConfig training;
    std::vector<int> forecast_years = {2025, 2030, 2035};
    std::string output_dir;
    TableFormat table_format = TableFormat::markdown;
    int decimal_places = 3;
};

// Everything known about one fitted series. forecast is empty until the
// forecast stage has run.
struct SeriesReport {
    int id = 0;
    std::string name;
    std::string unit;
    ModelChoice choice;
    std::optional<ForecastRow> forecast;
    TrainedModel model; // the selected kind's model
};

struct PipelineResult {
    std::vector<TimeSeries> series;   // id order, parallel to reports
    std::vector<SeriesReport> reports;
    std::vector<std::string> warnings;
};

// Fits every eligible kind to every series and selects per series.
// Inapplicable kinds (too few points for the weight count, non-positive
// values for exponential) are recorded as skipped, not errors. Series are
// fitted in parallel when OpenMP is available; reports come back in id
// order with identical bytes at any thread count.
std::vector<SeriesReport> fit_series_reports(const std::vector<TimeSeries>& series,
                                             const TrainingConfig& cfg);

// Fills report.forecast for every report.
void add_forecasts(std::vector<SeriesReport>& reports, const ForecastRequest& req);

// parse -> select -> fit, no forecasts yet. Throws InputError when
// selection leaves nothing.
PipelineResult load_and_fit(const PipelineConfig& cfg);

// load_and_fit plus forecasts for cfg.forecast_years.
PipelineResult run_pipeline(const PipelineConfig& cfg);

// The machine-readable workspace: report.json, dataset.json and one
// model_<id>.json per series. Staged commands re-read these instead of the
// raw input.
void write_workspace(const PipelineResult& result, const std::filesystem::path& dir);

// The rendered artifacts: metrics.<ext>, plot_<id>.csv, and (once
// forecasts exist) forecast.<ext>, all under cfg.output_dir.
void write_rendered(const PipelineResult& result, const PipelineConfig& cfg);

// Both of the above. Creates cfg.output_dir if needed.
void write_outputs(const PipelineResult& result, const PipelineConfig& cfg);

} // namespace trendfit
