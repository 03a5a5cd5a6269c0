#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trendfit/error.hpp"
#include "trendfit/pipeline.hpp"
#include "trendfit/render.hpp"
#include "trendfit/serialize.hpp"

namespace {

using namespace trendfit;

struct FitOptions {
    std::string input;
    std::string layout;
    int min_points = 5;
    bool reject_constant = true;
    std::vector<std::string> include;
    double learning_rate = 0.1;
    long iterations = 200000;
    double tolerance = 0.0;
};

struct RenderOptions {
    std::string format = "markdown";
    int decimal_places = 3;
};

void add_fit_options(CLI::App* cmd, FitOptions& o) {
    cmd->add_option("--input", o.input, "Input CSV path")->required();
    cmd->add_option("--layout", o.layout, "CSV layout: long (indicator,year,value rows) or wide "
                                          "(one row per indicator, one column per year)")
        ->required()
        ->check(CLI::IsMember({"long", "wide"}));
    cmd->add_option("--min-points", o.min_points, "Drop series with fewer observations")
        ->capture_default_str()
        ->check(CLI::Range(2, 1000000));
    cmd->add_option("--reject-constant", o.reject_constant,
                    "Drop series whose values are all equal")
        ->capture_default_str();
    // The v1 CSV dialect forbids commas inside indicator names, so a comma
    // list is unambiguous here.
    cmd->add_option("--include", o.include,
                    "Keep only these indicator names (exact, or prefix with trailing '*'); "
                    "repeatable or comma-separated")
        ->delimiter(',');
    cmd->add_option("--lr", o.learning_rate, "Gradient-descent learning rate")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--iters", o.iterations, "Gradient-descent iteration budget")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", o.tolerance,
                    "Stop early when |loss change| <= tol; 0 runs the full budget")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
}

void add_render_options(CLI::App* cmd, RenderOptions& o) {
    cmd->add_option("--format", o.format, "Table format for metrics/forecast files")
        ->capture_default_str()
        ->check(CLI::IsMember({"markdown", "csv", "json"}));
    cmd->add_option("--decimal-places", o.decimal_places, "Rounding for rendered tables")
        ->capture_default_str()
        ->check(CLI::Range(0, 17));
}

PipelineConfig to_config(const FitOptions& o) {
    PipelineConfig cfg;
    cfg.input_path = o.input;
    cfg.layout = *layout_from_name(o.layout);
    cfg.selection.min_points = o.min_points;
    cfg.selection.reject_constant = o.reject_constant;
    if (!o.include.empty())
        cfg.selection.include_names = o.include;
    cfg.training.learning_rate = o.learning_rate;
    cfg.training.max_iterations = o.iterations;
    cfg.training.convergence_tol = o.tolerance;
    return cfg;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings)
        std::cerr << "warning: " << w << "\n";
}

PipelineResult load_workspace(const std::filesystem::path& dir) {
    auto reports = reports_from_json(parse_json_file(dir / "report.json"));
    auto series = dataset_from_json(parse_json_file(dir / "dataset.json"));
    return {std::move(series), std::move(reports), {}};
}

void print_tables(const PipelineResult& result, const RenderOptions& render) {
    TableFormat format = *table_format_from_name(render.format);
    std::cout << render_metrics_table(result.reports, format, render.decimal_places);
    bool have_forecasts = !result.reports.empty();
    for (const auto& rep : result.reports)
        have_forecasts = have_forecasts && rep.forecast.has_value();
    if (have_forecasts) {
        std::cout << "\n"
                  << render_forecast_table(result.reports, format, render.decimal_places);
    } else {
        std::cerr << "note: workspace has no forecasts yet; run the forecast stage\n";
    }
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Fit linear/quadratic/exponential trends to indicator time series and "
                 "forecast future years"};
    app.require_subcommand(1);
    // Config handling lives on the root app (CLI11 only reads config files
    // there); keys sit in a section per subcommand, e.g. [run] min-points=8.
    // fallthrough() lets "--config" appear after the subcommand name.
    app.set_config("--config", "",
                   "INI file with option defaults, keys under a [fit]/[forecast]/[report]/[run] "
                   "section; explicit flags win");

    FitOptions fit_opts;
    std::string fit_out;
    auto* fit_cmd = app.add_subcommand("fit", "Fit models and write a workspace");
    fit_cmd->fallthrough();
    add_fit_options(fit_cmd, fit_opts);
    fit_cmd->add_option("--out", fit_out, "Workspace directory")->required();
    fit_cmd->callback([&] {
        PipelineResult result = load_and_fit(to_config(fit_opts));
        write_workspace(result, fit_out);
        print_warnings(result.warnings);
        std::cout << "fitted " << result.reports.size() << " series; workspace in " << fit_out
                  << "\n";
    });

    std::string forecast_models;
    std::string forecast_out;
    std::vector<int> forecast_years = {2025, 2030, 2035};
    auto* forecast_cmd =
        app.add_subcommand("forecast", "Add forecasts to a fitted workspace");
    forecast_cmd->fallthrough();
    forecast_cmd->add_option("--models", forecast_models, "Workspace directory written by fit")
        ->required();
    forecast_cmd->add_option("--years", forecast_years, "Forecast years (strictly ascending)")
        ->delimiter(',')
        ->capture_default_str();
    forecast_cmd->add_option("--out", forecast_out, "Output workspace directory")->required();
    forecast_cmd->callback([&] {
        PipelineResult result = load_workspace(forecast_models);
        add_forecasts(result.reports, ForecastRequest{forecast_years});
        write_workspace(result, forecast_out);
        std::cout << "forecast " << forecast_years.size() << " years for "
                  << result.reports.size() << " series; workspace in " << forecast_out << "\n";
    });

    std::string report_out;
    RenderOptions report_render;
    auto* report_cmd =
        app.add_subcommand("report", "Render tables and plot data from a workspace");
    report_cmd->fallthrough();
    report_cmd->add_option("--out", report_out, "Workspace directory to render into")
        ->required();
    add_render_options(report_cmd, report_render);
    report_cmd->callback([&] {
        PipelineResult result = load_workspace(report_out);
        PipelineConfig cfg;
        cfg.output_dir = report_out;
        cfg.table_format = *table_format_from_name(report_render.format);
        cfg.decimal_places = report_render.decimal_places;
        write_rendered(result, cfg);
        print_tables(result, report_render);
    });

    FitOptions run_opts;
    std::string run_out;
    std::vector<int> run_years = {2025, 2030, 2035};
    RenderOptions run_render;
    auto* run_cmd = app.add_subcommand("run", "fit + forecast + report in one step");
    run_cmd->fallthrough();
    add_fit_options(run_cmd, run_opts);
    run_cmd->add_option("--years", run_years, "Forecast years (strictly ascending)")
        ->delimiter(',')
        ->capture_default_str();
    add_render_options(run_cmd, run_render);
    run_cmd->add_option("--out", run_out, "Output directory")->required();
    run_cmd->callback([&] {
        PipelineConfig cfg = to_config(run_opts);
        cfg.forecast_years = run_years;
        cfg.output_dir = run_out;
        cfg.table_format = *table_format_from_name(run_render.format);
        cfg.decimal_places = run_render.decimal_places;
        PipelineResult result = run_pipeline(cfg);
        write_outputs(result, cfg);
        print_warnings(result.warnings);
        print_tables(result, run_render);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // bad flags are input errors
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const trendfit::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
