#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trendfit/pipeline.hpp"
#include "trendfit/regression.hpp"
#include "trendfit/timeseries.hpp"

namespace trendfit {

// ordered_json keeps insertion order, so serialized output is stable.
using Json = nlohmann::ordered_json;

Json model_to_json(const TrainedModel& m);
// Validates shape and invariants; bad input is InputError.
TrainedModel model_from_json(const Json& j);

Json report_to_json(const SeriesReport& r);
SeriesReport report_from_json(const Json& j);

Json reports_to_json(std::span<const SeriesReport> reports);
std::vector<SeriesReport> reports_from_json(const Json& j);

Json dataset_to_json(std::span<const TimeSeries> series);
std::vector<TimeSeries> dataset_from_json(const Json& j);

// File helpers: write creates parent directories; both raise InputError
// with the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

Json parse_json_file(const std::filesystem::path& path);

} // namespace trendfit
