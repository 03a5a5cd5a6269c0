#pragma once

#include <string>
#include <vector>

namespace trendfit {

struct TimeSeriesPoint {
    int year = 0;
    double value = 0.0;

    bool operator==(const TimeSeriesPoint&) const = default;
};

// One indicator's observations, sorted by strictly ascending year.
struct TimeSeries {
    int id = 0;
    std::string name;
    std::string unit; // trailing parenthetical of the name, if any
    std::vector<TimeSeriesPoint> points;

    bool operator==(const TimeSeries&) const = default;
};

// Throws InputError unless the series is non-empty, strictly ascending in
// year, and finite in value.
void validate_series(const TimeSeries& s);

std::vector<double> years_of(const TimeSeries& s);
std::vector<double> values_of(const TimeSeries& s);
int last_year(const TimeSeries& s);

// "Forest area (square kilometer)" -> "square kilometer"; empty if the
// name has no trailing parenthetical.
std::string unit_from_name(const std::string& name);

} // namespace trendfit
