#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "trendfit/error.hpp"
#include "trendfit/forecast.hpp"

using namespace trendfit;

namespace {

TrainedModel line_model() {
    // y = 10 * (year - 2000) over the 2000..2020 training window
    return TrainedModel{ModelKind::linear, {0, 1}, ScalingParams(2000, 2020),
                        ScalingParams(0, 200), 0.0};
}

} // namespace

TEST_CASE("request validation") {
    CHECK_THROWS_AS(validate_request(ForecastRequest{{}}), InputError);
    CHECK_THROWS_AS(validate_request(ForecastRequest{{2030, 2025}}), InputError);
    CHECK_THROWS_AS(validate_request(ForecastRequest{{2025, 2025}}), InputError);
    CHECK_NOTHROW(validate_request(ForecastRequest{{2025, 2030, 2035}}));
    CHECK_NOTHROW(validate_request(ForecastRequest{{2025}}));
}

TEST_CASE("a linear model extends its trend line") {
    auto m = line_model();
    auto out = forecast(m, ForecastRequest{{2030}});
    REQUIRE(out.size() == 1);
    CHECK(out.at(2030) == doctest::Approx(300).epsilon(1e-12));
}

TEST_CASE("every requested year must lie beyond the training range") {
    auto m = line_model();
    CHECK_THROWS_AS(forecast(m, ForecastRequest{{2020, 2025}}), InputError);
    CHECK_THROWS_AS(forecast(m, ForecastRequest{{2010}}), InputError);
    CHECK_NOTHROW(forecast(m, ForecastRequest{{2021}}));
}

TEST_CASE("the default horizon produces one entry per year") {
    auto m = line_model();
    auto out = forecast(m, ForecastRequest{{2025, 2030, 2035}});
    REQUIRE(out.size() == 3);
    CHECK(out.at(2025) == doctest::Approx(250).epsilon(1e-12));
    CHECK(out.at(2035) == doctest::Approx(350).epsilon(1e-12));
}

TEST_CASE("an exponential fit keeps doubling past the data") {
    auto s = testutil::series_from([](double x) { return 3 * std::pow(2.0, x); }, 5);
    auto m = fit(s, ModelKind::exponential, TrainingConfig{});
    auto out = forecast(m, ForecastRequest{{2007}});
    CHECK(out.at(2007) == doctest::Approx(3 * 128).epsilon(1e-6));
}

TEST_CASE("exponential forecasts stay positive far out") {
    // decaying series: predictions shrink toward zero but never cross it
    auto s = testutil::series_from([](double x) { return 100 * std::pow(0.5, x); }, 6);
    auto m = fit(s, ModelKind::exponential, TrainingConfig{});
    for (int year : {2010, 2040, 2090}) {
        auto out = forecast(m, ForecastRequest{{year}});
        CHECK(out.at(year) > 0);
    }
}

TEST_CASE("a rising linear trend rises by equal increments") {
    auto s = testutil::series_from([](double x) { return 40 + 7 * x; }, 8);
    auto m = fit(s, ModelKind::linear, TrainingConfig{});
    auto out = forecast(m, ForecastRequest{{2025, 2030, 2035}});
    double d1 = out.at(2030) - out.at(2025);
    double d2 = out.at(2035) - out.at(2030);
    CHECK(d1 > 0);
    CHECK(d2 == doctest::Approx(d1).epsilon(1e-9));
    CHECK(d1 == doctest::Approx(5 * 7).epsilon(1e-6));
}

TEST_CASE("overflowing exponential forecasts raise a numeric error") {
    // growth rate ~e^2 per year: by year 2400 the prediction exceeds 1e308
    auto s = testutil::series_from([](double x) { return std::exp(2 * x); }, 5);
    auto m = fit(s, ModelKind::exponential, TrainingConfig{});
    CHECK_THROWS_AS(forecast(m, ForecastRequest{{2400}}), NumericError);
}

TEST_CASE("forecast_table orders rows by series id") {
    auto cfg = TrainingConfig{};
    cfg.max_iterations = 20000;
    auto s1 = testutil::series_from([](double x) { return 5 + x; }, 6, 2000, "first");
    s1.id = 1;
    auto s2 = testutil::series_from([](double x) { return 9 - 0.5 * x; }, 6, 2000, "second");
    s2.id = 2;
    std::vector<SeriesModel> models;
    models.push_back({s2, fit(s2, ModelKind::linear, cfg)}); // reversed on purpose
    models.push_back({s1, fit(s1, ModelKind::linear, cfg)});

    ForecastRequest req{{2025, 2030}};
    auto table = forecast_table(models, req);
    REQUIRE(table.size() == 2);
    CHECK(table[0].parameter_id == 1);
    CHECK(table[0].parameter_name == "first");
    CHECK(table[1].parameter_id == 2);
    for (const auto& row : table) {
        REQUIRE(row.predictions.size() == 2);
        CHECK(row.predictions.count(2025) == 1);
        CHECK(row.predictions.count(2030) == 1);
    }
    CHECK(table[0].predictions.at(2025) == doctest::Approx(30).epsilon(1e-6));

    CHECK(forecast_table({}, req).empty());
}
