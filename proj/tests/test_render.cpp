#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>

#include "helpers.hpp"
#include "trendfit/render.hpp"
#include "trendfit/serialize.hpp"

using namespace trendfit;

namespace {

SeriesReport simple_report(int id, double r2, double rm, ModelKind kind,
                           std::optional<ForecastRow> fc = std::nullopt) {
    ModelChoice choice;
    choice.candidates = {{kind, r2, rm}};
    choice.selected = kind;
    TrainedModel model{kind, {0, 1}, ScalingParams(2000, 2020), ScalingParams(0, 200), 0.0};
    return SeriesReport{id,           "series " + std::to_string(id), "", std::move(choice),
                        std::move(fc), std::move(model)};
}

} // namespace

TEST_CASE("format_double is the shortest round-trip form") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(2.5) == "2.5");
    CHECK(format_double(42.0) == "42");
    CHECK(format_double(-0.0) == "-0");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");

    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> d(-1e12, 1e12);
    for (int i = 0; i < 200; ++i) {
        double v = d(rng);
        std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("format_fixed rounds halves away from zero") {
    // 0.0625 is exact in binary, so the half case is genuine: round-to-even
    // would print 0.062
    CHECK(format_fixed(0.0625, 3) == "0.063");
    CHECK(format_fixed(-0.0625, 3) == "-0.063");
    CHECK(format_fixed(2.5, 0) == "3");
    CHECK(format_fixed(-2.5, 0) == "-3");
    CHECK(format_fixed(0.5, 0) == "1");
    CHECK(format_fixed(3.375, 2) == "3.38");
}

TEST_CASE("format_fixed basics") {
    CHECK(format_fixed(42.0, 0) == "42");
    CHECK(format_fixed(-7.0, 0) == "-7");
    CHECK(format_fixed(1.5, 3) == "1.500");
    CHECK(format_fixed(0.9971, 3) == "0.997");
    CHECK(format_fixed(48049.0061, 3) == "48049.006");
    CHECK_THROWS_AS(format_fixed(1.0, -1), std::invalid_argument);
}

TEST_CASE("format_forecast_value switches to scientific at 1e8") {
    CHECK(format_forecast_value(1.509e9, 3) == "1.509e+09");
    CHECK(format_forecast_value(1e8, 3) == "1.000e+08");
    CHECK(format_forecast_value(-2.5e9, 3) == "-2.500e+09");
    CHECK(format_forecast_value(99999999.0, 3) == "99999999.000");
    CHECK(format_forecast_value(123.4567, 3) == "123.457");
    CHECK(format_forecast_value(-123.4567, 3) == "-123.457");
}

TEST_CASE("metrics table in markdown") {
    std::vector<SeriesReport> reports;
    reports.push_back(simple_report(7, 0.9971, 48049.0061, ModelKind::exponential));
    auto out = render_metrics_table(reports, TableFormat::markdown, 3);
    CHECK(out == "| parameter | r_squared | rmse | model_type |\n"
                 "| --- | --- | --- | --- |\n"
                 "| 7 | 0.997 | 48049.006 | Exponential |\n");
}

TEST_CASE("metrics table in csv") {
    std::vector<SeriesReport> reports;
    reports.push_back(simple_report(1, 0.25, 2.0, ModelKind::linear));
    reports.push_back(simple_report(2, 0.5, 1.25, ModelKind::quadratic));
    auto out = render_metrics_table(reports, TableFormat::csv, 2);
    CHECK(out == "parameter,r_squared,rmse,model_type\n"
                 "1,0.25,2.00,Linear\n"
                 "2,0.50,1.25,Quadratic\n");
}

TEST_CASE("metrics table in json carries numeric cells") {
    std::vector<SeriesReport> reports;
    reports.push_back(simple_report(3, 0.875, 12.5, ModelKind::linear));
    auto out = render_metrics_table(reports, TableFormat::json, 3);
    auto arr = Json::parse(out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["parameter"].is_number_integer());
    CHECK(arr[0]["parameter"] == 3);
    CHECK(arr[0]["r_squared"].is_number());
    CHECK(arr[0]["r_squared"] == doctest::Approx(0.875));
    CHECK(arr[0]["rmse"] == doctest::Approx(12.5));
    CHECK(arr[0]["model_type"] == "Linear");
}

TEST_CASE("metrics table demands that the selected kind was evaluated") {
    auto rep = simple_report(1, 0.9, 1.0, ModelKind::linear);
    rep.choice.selected = ModelKind::quadratic; // not among the candidates
    std::vector<SeriesReport> reports;
    reports.push_back(std::move(rep));
    CHECK_THROWS_AS(render_metrics_table(reports, TableFormat::markdown, 3),
                    std::invalid_argument);
}

TEST_CASE("forecast table in markdown") {
    ForecastRow fc{16, "Population", {{2025, 1.509e9}, {2030, 1.6e9}}};
    std::vector<SeriesReport> reports;
    reports.push_back(simple_report(16, 0.99, 1.0, ModelKind::quadratic, fc));
    auto out = render_forecast_table(reports, TableFormat::markdown, 3);
    CHECK(out == "| parameter | 2025 | 2030 |\n"
                 "| --- | --- | --- |\n"
                 "| 16 | 1.509e+09 | 1.600e+09 |\n");
}

TEST_CASE("forecast table in csv keeps small values fixed-point") {
    ForecastRow fc{2, "x", {{2025, 41.25}, {2030, 43.5}, {2035, 45.75}}};
    std::vector<SeriesReport> reports;
    reports.push_back(simple_report(2, 0.9, 1.0, ModelKind::linear, fc));
    auto out = render_forecast_table(reports, TableFormat::csv, 3);
    CHECK(out == "parameter,2025,2030,2035\n2,41.250,43.500,45.750\n");
}

TEST_CASE("forecast table refuses reports without forecasts") {
    std::vector<SeriesReport> reports;
    reports.push_back(simple_report(1, 0.9, 1.0, ModelKind::linear));
    CHECK_THROWS_AS(render_forecast_table(reports, TableFormat::markdown, 3),
                    std::invalid_argument);
}

TEST_CASE("render_long_csv writes absent values as empty cells") {
    RawDataset ds;
    ds.records.push_back({"A", 2000, std::nullopt});
    ds.records.push_back({"B", 2001, 2.5});
    CHECK(render_long_csv(ds) == "indicator,year,value\nA,2000,\nB,2001,2.5\n");
}

TEST_CASE("plot files interleave training and forecast rows") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "trendfit_test_render_plot";
    fs::remove_all(dir);

    ForecastRow fc{4, "s", {{2025, 250.0}, {2030, 300.0}}};
    auto rep = simple_report(4, 1.0, 0.0, ModelKind::linear, fc);
    auto series = testutil::make_series("s", {2000, 2010, 2020}, {0, 95, 200}, 4);

    auto path = emit_plot_series(rep, series, dir);
    CHECK(path.filename() == "plot_4.csv");
    CHECK(read_text_file(path) == "year,actual,fitted\n"
                                  "2000,0,0\n"
                                  "2010,95,100\n"
                                  "2020,200,200\n"
                                  "2025,,250\n"
                                  "2030,,300\n");
    fs::remove_all(dir);
}
