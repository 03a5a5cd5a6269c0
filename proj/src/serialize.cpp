#include "trendfit/serialize.hpp"

#include <cmath>
#include <fstream>

#include "trendfit/error.hpp"

namespace trendfit {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw InputError("malformed JSON: " + what);
}

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        bad(std::string("missing field '") + key + "'");
    return *it;
}

double real_field(const Json& j, const char* key) {
    const Json& f = field(j, key);
    if (!f.is_number())
        bad(std::string("field '") + key + "' is not a number");
    return f.get<double>();
}

Json scale_to_json(const ScalingParams& p) {
    return Json{{"min", p.min()}, {"max", p.max()}};
}

ScalingParams scale_from_json(const Json& j, const char* key) {
    const Json& f = field(j, key);
    double min = real_field(f, "min");
    double max = real_field(f, "max");
    if (!(max > min))
        bad(std::string(key) + ": min must be below max");
    return {min, max};
}

} // namespace

Json model_to_json(const TrainedModel& m) {
    return Json{{"kind", kind_name(m.kind)},
                {"weights", m.weights},
                {"x_scale", scale_to_json(m.x_scale)},
                {"y_scale", scale_to_json(m.y_scale)},
                {"training_loss", m.training_loss}};
}

TrainedModel model_from_json(const Json& j) {
    const Json& kind_field = field(j, "kind");
    if (!kind_field.is_string())
        bad("'kind' is not a string");
    auto kind = kind_from_name(kind_field.get<std::string>());
    if (!kind)
        bad("unknown model kind '" + kind_field.get<std::string>() + "'");

    const Json& weights_field = field(j, "weights");
    if (!weights_field.is_array())
        bad("'weights' is not an array");
    Weights w;
    for (const auto& entry : weights_field) {
        if (!entry.is_number())
            bad("weight entries must be numbers");
        w.push_back(entry.get<double>());
        if (!std::isfinite(w.back()))
            bad("weights must be finite");
    }
    if (static_cast<int>(w.size()) != weight_count(*kind))
        bad("'" + std::string(kind_name(*kind)) + "' needs " +
            std::to_string(weight_count(*kind)) + " weights, got " + std::to_string(w.size()));

    double training_loss = real_field(j, "training_loss");
    if (!(training_loss >= 0))
        bad("'training_loss' must be >= 0");

    return {*kind, std::move(w), scale_from_json(j, "x_scale"), scale_from_json(j, "y_scale"),
            training_loss};
}

namespace {

Json metrics_to_json(const FitMetrics& m) {
    return Json{{"kind", kind_name(m.kind)}, {"r_squared", m.r_squared}, {"rmse", m.rmse}};
}

FitMetrics metrics_from_json(const Json& j) {
    const Json& kf = field(j, "kind");
    auto kind = kf.is_string() ? kind_from_name(kf.get<std::string>()) : std::nullopt;
    if (!kind)
        bad("candidate with unknown kind");
    return {*kind, real_field(j, "r_squared"), real_field(j, "rmse")};
}

} // namespace

Json report_to_json(const SeriesReport& r) {
    Json candidates = Json::array();
    for (const auto& c : r.choice.candidates)
        candidates.push_back(metrics_to_json(c));
    Json skipped = Json::array();
    for (const auto& s : r.choice.skipped)
        skipped.push_back(Json{{"kind", kind_name(s.kind)}, {"reason", s.reason}});

    Json forecast = nullptr;
    if (r.forecast) {
        Json predictions = Json::object();
        for (const auto& [year, value] : r.forecast->predictions)
            predictions[std::to_string(year)] = value;
        forecast = Json{{"parameter_id", r.forecast->parameter_id},
                        {"parameter_name", r.forecast->parameter_name},
                        {"predictions", std::move(predictions)}};
    }

    return Json{{"id", r.id},
                {"name", r.name},
                {"unit", r.unit},
                {"choice", Json{{"candidates", std::move(candidates)},
                                {"selected", kind_name(r.choice.selected)},
                                {"skipped", std::move(skipped)}}},
                {"forecast", std::move(forecast)},
                {"model", model_to_json(r.model)}};
}

SeriesReport report_from_json(const Json& j) {
    int id = static_cast<int>(real_field(j, "id"));
    const Json& name = field(j, "name");
    if (!name.is_string())
        bad("'name' is not a string");
    std::string unit = field(j, "unit").is_string() ? j["unit"].get<std::string>() : std::string();

    ModelChoice choice;
    const Json& choice_json = field(j, "choice");
    const Json& candidates = field(choice_json, "candidates");
    if (!candidates.is_array() || candidates.empty())
        bad("'choice.candidates' must be a non-empty array");
    for (const auto& c : candidates)
        choice.candidates.push_back(metrics_from_json(c));
    const Json& selected = field(choice_json, "selected");
    auto kind = selected.is_string() ? kind_from_name(selected.get<std::string>()) : std::nullopt;
    if (!kind)
        bad("'choice.selected' is not a model kind");
    choice.selected = *kind;
    if (auto it = choice_json.find("skipped"); it != choice_json.end() && it->is_array()) {
        for (const auto& s : *it) {
            auto skind = field(s, "kind").is_string()
                             ? kind_from_name(s["kind"].get<std::string>())
                             : std::nullopt;
            if (!skind)
                bad("skipped entry with unknown kind");
            choice.skipped.push_back({*skind, field(s, "reason").get<std::string>()});
        }
    }

    std::optional<ForecastRow> forecast;
    const Json& forecast_json = field(j, "forecast");
    if (!forecast_json.is_null()) {
        ForecastRow row;
        row.parameter_id = static_cast<int>(real_field(forecast_json, "parameter_id"));
        row.parameter_name = field(forecast_json, "parameter_name").get<std::string>();
        for (const auto& [key, value] : field(forecast_json, "predictions").items()) {
            if (!value.is_number())
                bad("forecast predictions must be numbers");
            row.predictions.emplace(std::stoi(key), value.get<double>());
        }
        forecast = std::move(row);
    }

    TrainedModel model = model_from_json(field(j, "model"));
    if (model.kind != choice.selected)
        bad("serialized model kind differs from choice.selected");
    return {id, name.get<std::string>(), std::move(unit), std::move(choice),
            std::move(forecast), std::move(model)};
}

Json reports_to_json(std::span<const SeriesReport> reports) {
    Json arr = Json::array();
    for (const auto& r : reports)
        arr.push_back(report_to_json(r));
    return Json{{"series", std::move(arr)}};
}

std::vector<SeriesReport> reports_from_json(const Json& j) {
    const Json& arr = field(j, "series");
    if (!arr.is_array())
        bad("'series' is not an array");
    std::vector<SeriesReport> out;
    out.reserve(arr.size());
    for (const auto& entry : arr)
        out.push_back(report_from_json(entry));
    return out;
}

Json dataset_to_json(std::span<const TimeSeries> series) {
    Json arr = Json::array();
    for (const auto& s : series) {
        Json points = Json::array();
        for (const auto& p : s.points)
            points.push_back(Json{{"year", p.year}, {"value", p.value}});
        arr.push_back(Json{{"id", s.id}, {"name", s.name}, {"unit", s.unit},
                           {"points", std::move(points)}});
    }
    return Json{{"series", std::move(arr)}};
}

std::vector<TimeSeries> dataset_from_json(const Json& j) {
    const Json& arr = field(j, "series");
    if (!arr.is_array())
        bad("'series' is not an array");
    std::vector<TimeSeries> out;
    for (const auto& entry : arr) {
        TimeSeries s;
        s.id = static_cast<int>(real_field(entry, "id"));
        s.name = field(entry, "name").get<std::string>();
        s.unit = field(entry, "unit").get<std::string>();
        for (const auto& p : field(entry, "points")) {
            s.points.push_back({static_cast<int>(real_field(p, "year")),
                                real_field(p, "value")});
        }
        validate_series(s);
        out.push_back(std::move(s));
    }
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec)
            throw InputError("cannot create directory " + path.parent_path().string() + ": " +
                             ec.message());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out)
        throw InputError("write failed for " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path.string());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad())
        throw InputError("read failed for " + path.string());
    return content;
}

Json parse_json_file(const std::filesystem::path& path) {
    Json j = Json::parse(read_text_file(path), nullptr, false);
    if (j.is_discarded())
        throw InputError("invalid JSON in " + path.string());
    return j;
}

} // namespace trendfit
