#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "trendfit/timeseries.hpp"

namespace trendfit {

// One CSV cell's worth of observation. value is absent when the cell was
// empty; such records are dropped during series selection.
struct RawRecord {
    std::string indicator;
    int year = 0;
    std::optional<double> value;

    bool operator==(const RawRecord&) const = default;
};

struct RawDataset {
    std::vector<RawRecord> records;

    bool operator==(const RawDataset&) const = default;
};

// Long layout: header exactly "indicator,year,value", one observation per
// row. The v1 dialect has no quoting or escaping, so indicator names must
// not contain commas. Parse errors name the 1-based line number.
RawDataset parse_long_csv(std::istream& in);

// Wide layout: header "indicator,<year>,<year>,...", one indicator per
// row, each non-empty cell becoming one record (row order, then column
// order). Short rows are padded with absent cells; long rows are errors.
RawDataset parse_wide_csv(std::istream& in);

struct SelectionRules {
    int min_points = 5;          // must be >= 2
    bool reject_constant = true; // drop series whose values are all equal
    // When set, keep only indicators matching one of these names exactly,
    // or by prefix when the pattern ends in '*'.
    std::optional<std::vector<std::string>> include_names;
};

// Groups records by indicator (first-appearance order), drops absent
// values, dedupes years keeping the last occurrence (warning per dupe),
// applies the rules, and assigns ids 1..k in surviving input order.
std::vector<TimeSeries> select_series(const RawDataset& ds,
                                      const SelectionRules& rules,
                                      std::vector<std::string>* warnings = nullptr);

} // namespace trendfit
