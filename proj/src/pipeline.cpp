#include "trendfit/pipeline.hpp"

#include <exception>
#include <fstream>
#include <optional>

#include "trendfit/error.hpp"
#include "trendfit/render.hpp"
#include "trendfit/serialize.hpp"

namespace trendfit {

std::optional<CsvLayout> layout_from_name(std::string_view name) noexcept {
    if (name == "long")
        return CsvLayout::long_rows;
    if (name == "wide")
        return CsvLayout::wide_rows;
    return std::nullopt;
}

std::optional<TableFormat> table_format_from_name(std::string_view name) noexcept {
    if (name == "markdown")
        return TableFormat::markdown;
    if (name == "csv")
        return TableFormat::csv;
    if (name == "json")
        return TableFormat::json;
    return std::nullopt;
}

std::string_view table_format_extension(TableFormat f) noexcept {
    switch (f) {
    case TableFormat::markdown: return "md";
    case TableFormat::csv: return "csv";
    case TableFormat::json: return "json";
    }
    return "txt";
}

namespace {

SeriesReport make_report(const TimeSeries& s, const TrainingConfig& cfg) {
    std::vector<FitMetrics> candidates;
    std::vector<SkippedModel> skipped;
    std::vector<TrainedModel> fitted;

    for (ModelKind kind : all_model_kinds) {
        const int needed = weight_count(kind);
        if (static_cast<int>(s.points.size()) < needed) {
            skipped.push_back({kind, std::to_string(s.points.size()) +
                                         " points underdetermine the " +
                                         std::to_string(needed) + " weights of a " +
                                         std::string(kind_name(kind)) + " fit"});
            continue;
        }
        if (kind == ModelKind::exponential) {
            const TimeSeriesPoint* offender = nullptr;
            for (const auto& p : s.points) {
                if (!(p.value > 0)) {
                    offender = &p;
                    break;
                }
            }
            if (offender) {
                skipped.push_back({kind, "non-positive value at year " +
                                             std::to_string(offender->year) +
                                             " (logarithm undefined)"});
                continue;
            }
        }
        TrainedModel model = fit(s, kind, cfg);
        candidates.push_back(evaluate(model, s));
        fitted.push_back(std::move(model));
    }

    ModelChoice choice = select_model(std::move(candidates), std::move(skipped));
    std::optional<TrainedModel> selected;
    for (auto& m : fitted) {
        if (m.kind == choice.selected)
            selected = std::move(m);
    }

    return {s.id, s.name, s.unit, std::move(choice), std::nullopt, std::move(*selected)};
}

} // namespace

std::vector<SeriesReport> fit_series_reports(const std::vector<TimeSeries>& series,
                                             const TrainingConfig& cfg) {
    validate_config(cfg);
    const int n = static_cast<int>(series.size());
    std::vector<std::optional<SeriesReport>> slots(series.size());
    std::vector<std::exception_ptr> errors(series.size());

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        try {
            slots[static_cast<size_t>(i)] = make_report(series[static_cast<size_t>(i)], cfg);
        } catch (...) {
            errors[static_cast<size_t>(i)] = std::current_exception();
        }
    }

    for (const auto& err : errors) {
        if (err)
            std::rethrow_exception(err);
    }

    std::vector<SeriesReport> reports;
    reports.reserve(series.size());
    for (auto& slot : slots)
        reports.push_back(std::move(*slot));
    return reports;
}

void add_forecasts(std::vector<SeriesReport>& reports, const ForecastRequest& req) {
    validate_request(req);
    for (auto& rep : reports)
        rep.forecast = ForecastRow{rep.id, rep.name, forecast(rep.model, req)};
}

PipelineResult load_and_fit(const PipelineConfig& cfg) {
    std::ifstream in(cfg.input_path, std::ios::binary);
    if (!in)
        throw InputError("cannot open input file " + cfg.input_path);
    RawDataset ds =
        cfg.layout == CsvLayout::long_rows ? parse_long_csv(in) : parse_wide_csv(in);

    PipelineResult result;
    result.series = select_series(ds, cfg.selection, &result.warnings);
    if (result.series.empty())
        throw InputError("no series survive the selection rules (min_points=" +
                         std::to_string(cfg.selection.min_points) + ")");

    result.reports = fit_series_reports(result.series, cfg.training);
    return result;
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
    ForecastRequest request{cfg.forecast_years};
    validate_request(request); // fail before fitting, not after

    PipelineResult result = load_and_fit(cfg);
    add_forecasts(result.reports, request);
    return result;
}

void write_workspace(const PipelineResult& result, const std::filesystem::path& dir) {
    write_text_file(dir / "report.json", reports_to_json(result.reports).dump(2) + "\n");
    write_text_file(dir / "dataset.json", dataset_to_json(result.series).dump(2) + "\n");
    for (const auto& rep : result.reports) {
        write_text_file(dir / ("model_" + std::to_string(rep.id) + ".json"),
                        model_to_json(rep.model).dump(2) + "\n");
    }
}

void write_rendered(const PipelineResult& result, const PipelineConfig& cfg) {
    const std::filesystem::path dir = cfg.output_dir;
    const std::string ext(table_format_extension(cfg.table_format));

    write_text_file(dir / ("metrics." + ext),
                    render_metrics_table(result.reports, cfg.table_format, cfg.decimal_places));

    bool have_forecasts = !result.reports.empty();
    for (const auto& rep : result.reports)
        have_forecasts = have_forecasts && rep.forecast.has_value();
    if (have_forecasts) {
        write_text_file(dir / ("forecast." + ext),
                        render_forecast_table(result.reports, cfg.table_format,
                                              cfg.decimal_places));
    }

    for (const auto& rep : result.reports) {
        const TimeSeries* series = nullptr;
        for (const auto& s : result.series) {
            if (s.id == rep.id)
                series = &s;
        }
        if (!series)
            throw InputError("workspace dataset lacks series " + std::to_string(rep.id));
        emit_plot_series(rep, *series, dir);
    }
}

void write_outputs(const PipelineResult& result, const PipelineConfig& cfg) {
    write_workspace(result, cfg.output_dir);
    write_rendered(result, cfg);
}

} // namespace trendfit
