#include "trendfit/render.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "trendfit/error.hpp"
#include "trendfit/serialize.hpp"

namespace trendfit {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{})
        throw std::invalid_argument("format_double failed");
    return {buf, ptr};
}

std::string format_fixed(double v, int decimal_places) {
    if (decimal_places < 0)
        throw std::invalid_argument("decimal_places must be >= 0");
    double scale = std::pow(10.0, decimal_places);
    double rounded = std::copysign(std::floor(std::abs(v) * scale + 0.5) / scale, v);
    char buf[64];
    int n = std::snprintf(buf, sizeof buf, "%.*f", decimal_places, rounded);
    if (n < 0 || n >= static_cast<int>(sizeof buf))
        throw std::invalid_argument("format_fixed overflow");
    return {buf, static_cast<size_t>(n)};
}

std::string format_forecast_value(double v, int decimal_places) {
    if (std::abs(v) >= 1e8) {
        char buf[32];
        int n = std::snprintf(buf, sizeof buf, "%.3e", v);
        return {buf, static_cast<size_t>(n)};
    }
    return format_fixed(v, decimal_places);
}

namespace {

// header/rows hold already-formatted cells; each format decides the glue.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows,
                         TableFormat format) {
    std::string out;
    switch (format) {
    case TableFormat::markdown: {
        auto emit_row = [&out](const std::vector<std::string>& cells) {
            out += "|";
            for (const auto& c : cells) {
                out += " ";
                out += c;
                out += " |";
            }
            out += "\n";
        };
        emit_row(header);
        std::vector<std::string> sep(header.size(), "---");
        emit_row(sep);
        for (const auto& r : rows)
            emit_row(r);
        return out;
    }
    case TableFormat::csv: {
        auto emit_row = [&out](const std::vector<std::string>& cells) {
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i)
                    out += ",";
                out += cells[i];
            }
            out += "\n";
        };
        emit_row(header);
        for (const auto& r : rows)
            emit_row(r);
        return out;
    }
    case TableFormat::json: {
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json obj = Json::object();
            for (size_t i = 0; i < r.size(); ++i) {
                // Numeric cells become JSON numbers (re-parsed from their
                // rendered form so both views carry identical rounding).
                double num = 0.0;
                auto [ptr, ec] = std::from_chars(r[i].data(), r[i].data() + r[i].size(), num);
                if (ec == std::errc{} && ptr == r[i].data() + r[i].size()) {
                    if (i == 0)
                        obj[header[i]] = static_cast<long>(num);
                    else
                        obj[header[i]] = num;
                } else {
                    obj[header[i]] = r[i];
                }
            }
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
    }
    throw std::invalid_argument("unknown table format");
}

} // namespace

std::string render_metrics_table(std::span<const SeriesReport> reports, TableFormat format,
                                 int decimal_places) {
    std::vector<std::string> header = {"parameter", "r_squared", "rmse", "model_type"};
    std::vector<std::vector<std::string>> rows;
    rows.reserve(reports.size());
    for (const auto& rep : reports) {
        const FitMetrics* selected = nullptr;
        for (const auto& c : rep.choice.candidates) {
            if (c.kind == rep.choice.selected)
                selected = &c;
        }
        if (!selected)
            throw std::invalid_argument("report " + std::to_string(rep.id) +
                                        ": selected kind missing from candidates");
        rows.push_back({std::to_string(rep.id), format_fixed(selected->r_squared, decimal_places),
                        format_fixed(selected->rmse, decimal_places),
                        std::string(kind_name(selected->kind))});
    }
    return render_table(header, rows, format);
}

std::string render_forecast_table(std::span<const SeriesReport> reports, TableFormat format,
                                  int decimal_places) {
    std::vector<std::string> header = {"parameter"};
    bool have_years = false;
    std::vector<std::vector<std::string>> rows;
    rows.reserve(reports.size());
    for (const auto& rep : reports) {
        if (!rep.forecast)
            throw std::invalid_argument("report " + std::to_string(rep.id) +
                                        " has no forecast to render");
        if (!have_years) {
            for (const auto& [year, value] : rep.forecast->predictions)
                header.push_back(std::to_string(year));
            have_years = true;
        }
        std::vector<std::string> row = {std::to_string(rep.id)};
        for (const auto& [year, value] : rep.forecast->predictions)
            row.push_back(format_forecast_value(value, decimal_places));
        rows.push_back(std::move(row));
    }
    return render_table(header, rows, format);
}

std::string render_long_csv(const RawDataset& ds) {
    std::string out = "indicator,year,value\n";
    for (const auto& rec : ds.records) {
        out += rec.indicator;
        out += ",";
        out += std::to_string(rec.year);
        out += ",";
        if (rec.value)
            out += format_double(*rec.value);
        out += "\n";
    }
    return out;
}

std::filesystem::path emit_plot_series(const SeriesReport& report, const TimeSeries& series,
                                       const std::filesystem::path& dir) {
    std::string out = "year,actual,fitted\n";
    for (const auto& p : series.points) {
        out += std::to_string(p.year);
        out += ",";
        out += format_double(p.value);
        out += ",";
        out += format_double(predict(report.model, p.year));
        out += "\n";
    }
    if (report.forecast) {
        for (const auto& [year, value] : report.forecast->predictions) {
            out += std::to_string(year);
            out += ",,";
            out += format_double(value);
            out += "\n";
        }
    }
    auto path = dir / ("plot_" + std::to_string(report.id) + ".csv");
    write_text_file(path, out);
    return path;
}

} // namespace trendfit
