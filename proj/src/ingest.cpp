#include "trendfit/ingest.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <unordered_map>

#include "trendfit/error.hpp"

namespace trendfit {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos)
        return {};
    size_t e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_comma(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

// Physical lines, 1-based, CRLF tolerated. Keeps blank lines so error
// messages point at real file positions.
std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

[[noreturn]] void fail(size_t line_no, const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

int parse_year(const std::string& cell, size_t line_no) {
    std::string t = trim(cell);
    int year = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), year);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
        fail(line_no, "invalid year '" + cell + "'");
    if (year < 1900 || year > 2100)
        fail(line_no, "year " + std::to_string(year) + " outside [1900, 2100]");
    return year;
}

std::optional<double> parse_value(const std::string& cell, size_t line_no) {
    std::string t = trim(cell);
    if (t.empty())
        return std::nullopt;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        fail(line_no, "invalid value '" + cell + "'");
    if (!std::isfinite(v))
        fail(line_no, "non-finite value '" + cell + "'");
    return v;
}

std::string parse_indicator(const std::string& cell, size_t line_no) {
    std::string name = trim(cell);
    if (name.empty())
        fail(line_no, "empty indicator name");
    return name;
}

} // namespace

RawDataset parse_long_csv(std::istream& in) {
    auto lines = read_lines(in);
    if (lines.empty())
        throw InputError("line 1: missing header (expected 'indicator,year,value')");
    if (lines[0] != "indicator,year,value")
        throw InputError("line 1: malformed header '" + lines[0] +
                         "' (expected 'indicator,year,value')");

    RawDataset ds;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty())
            continue;
        auto cells = split_comma(lines[i]);
        if (cells.size() != 3)
            fail(i + 1, "expected 3 fields, got " + std::to_string(cells.size()));
        RawRecord rec;
        rec.indicator = parse_indicator(cells[0], i + 1);
        rec.year = parse_year(cells[1], i + 1);
        rec.value = parse_value(cells[2], i + 1);
        ds.records.push_back(std::move(rec));
    }
    return ds;
}

RawDataset parse_wide_csv(std::istream& in) {
    auto lines = read_lines(in);
    if (lines.empty())
        throw InputError("line 1: missing header");
    auto header = split_comma(lines[0]);
    if (header.size() < 2)
        throw InputError("line 1: wide header needs an indicator column plus year columns");

    std::vector<int> years;
    years.reserve(header.size() - 1);
    for (size_t c = 1; c < header.size(); ++c) {
        int year = parse_year(header[c], 1);
        for (int seen : years) {
            if (seen == year)
                throw InputError("line 1: duplicate year column " + std::to_string(year));
        }
        years.push_back(year);
    }

    RawDataset ds;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty())
            continue;
        auto cells = split_comma(lines[i]);
        if (cells.size() > header.size())
            fail(i + 1, "row has " + std::to_string(cells.size()) + " fields but the header has " +
                            std::to_string(header.size()));
        std::string indicator = parse_indicator(cells[0], i + 1);
        for (size_t c = 1; c < cells.size(); ++c) {
            auto value = parse_value(cells[c], i + 1);
            if (!value)
                continue; // blank cell: no observation that year
            ds.records.push_back({indicator, years[c - 1], value});
        }
    }
    return ds;
}

namespace {

bool name_matches(const std::string& name, const std::vector<std::string>& patterns) {
    for (const auto& raw : patterns) {
        std::string p = trim(raw);
        if (!p.empty() && p.back() == '*') {
            std::string_view prefix(p.data(), p.size() - 1);
            if (std::string_view(name).substr(0, prefix.size()) == prefix)
                return true;
        } else if (name == p) {
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<TimeSeries> select_series(const RawDataset& ds, const SelectionRules& rules,
                                      std::vector<std::string>* warnings) {
    if (rules.min_points < 2)
        throw std::invalid_argument("SelectionRules.min_points must be >= 2");

    // Group by indicator in first-appearance order; later duplicate years
    // overwrite earlier ones.
    std::vector<std::string> order;
    std::unordered_map<std::string, std::map<int, double>> groups;
    for (const auto& rec : ds.records) {
        auto [it, fresh] = groups.try_emplace(rec.indicator);
        if (fresh)
            order.push_back(rec.indicator);
        if (!rec.value)
            continue;
        auto found = it->second.find(rec.year);
        if (found != it->second.end()) {
            found->second = *rec.value;
            if (warnings)
                warnings->push_back("duplicate record for '" + rec.indicator + "' year " +
                                    std::to_string(rec.year) + ": keeping the last value");
        } else {
            it->second.emplace(rec.year, *rec.value);
        }
    }

    std::vector<TimeSeries> out;
    for (const auto& name : order) {
        const auto& by_year = groups[name];
        if (static_cast<int>(by_year.size()) < rules.min_points)
            continue;
        if (rules.reject_constant) {
            bool constant = true;
            double first = by_year.begin()->second;
            for (const auto& [year, value] : by_year) {
                if (value != first) {
                    constant = false;
                    break;
                }
            }
            if (constant)
                continue;
        }
        if (rules.include_names && !name_matches(name, *rules.include_names))
            continue;

        TimeSeries s;
        s.id = static_cast<int>(out.size()) + 1;
        s.name = name;
        s.unit = unit_from_name(name);
        s.points.reserve(by_year.size());
        for (const auto& [year, value] : by_year)
            s.points.push_back({year, value});
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace trendfit
