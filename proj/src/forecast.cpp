#include "trendfit/forecast.hpp"

#include <algorithm>
#include <cmath>

#include "trendfit/error.hpp"

namespace trendfit {

void validate_request(const ForecastRequest& req) {
    if (req.years.empty())
        throw InputError("forecast request has no years");
    for (size_t i = 1; i < req.years.size(); ++i) {
        if (req.years[i] <= req.years[i - 1])
            throw InputError("forecast years must be strictly ascending (got " +
                             std::to_string(req.years[i - 1]) + " then " +
                             std::to_string(req.years[i]) + ")");
    }
}

std::map<int, double> forecast(const TrainedModel& m, const ForecastRequest& req) {
    validate_request(req);
    const int last_trained = static_cast<int>(m.x_scale.max());
    std::map<int, double> out;
    for (int year : req.years) {
        if (year <= last_trained)
            throw InputError("forecast year " + std::to_string(year) +
                             " is not beyond the training range (last trained year " +
                             std::to_string(last_trained) + ")");
        double v = predict(m, year);
        if (!std::isfinite(v))
            throw NumericError("forecast for year " + std::to_string(year) +
                               " is not finite (model overflowed)");
        out.emplace(year, v);
    }
    return out;
}

std::vector<ForecastRow> forecast_table(std::span<const SeriesModel> selected,
                                        const ForecastRequest& req) {
    std::vector<ForecastRow> rows;
    rows.reserve(selected.size());
    for (const auto& sm : selected)
        rows.push_back({sm.series.id, sm.series.name, forecast(sm.model, req)});
    std::sort(rows.begin(), rows.end(),
              [](const ForecastRow& a, const ForecastRow& b) {
                  return a.parameter_id < b.parameter_id;
              });
    return rows;
}

} // namespace trendfit
