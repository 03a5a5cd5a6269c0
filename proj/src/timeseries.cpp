#include "trendfit/timeseries.hpp"

#include <cmath>

#include "trendfit/error.hpp"

namespace trendfit {

void validate_series(const TimeSeries& s) {
    if (s.points.empty())
        throw InputError("series '" + s.name + "' has no points");
    int prev_year = 0;
    bool first = true;
    for (const auto& p : s.points) {
        if (!first && p.year <= prev_year)
            throw InputError("series '" + s.name + "' years not strictly ascending at " +
                             std::to_string(p.year));
        if (!std::isfinite(p.value))
            throw InputError("series '" + s.name + "' has a non-finite value at year " +
                             std::to_string(p.year));
        prev_year = p.year;
        first = false;
    }
}

std::vector<double> years_of(const TimeSeries& s) {
    std::vector<double> out;
    out.reserve(s.points.size());
    for (const auto& p : s.points)
        out.push_back(static_cast<double>(p.year));
    return out;
}

std::vector<double> values_of(const TimeSeries& s) {
    std::vector<double> out;
    out.reserve(s.points.size());
    for (const auto& p : s.points)
        out.push_back(p.value);
    return out;
}

int last_year(const TimeSeries& s) {
    return s.points.empty() ? 0 : s.points.back().year;
}

std::string unit_from_name(const std::string& name) {
    if (name.empty() || name.back() != ')')
        return {};
    auto open = name.rfind('(');
    if (open == std::string::npos)
        return {};
    return name.substr(open + 1, name.size() - open - 2);
}

} // namespace trendfit
