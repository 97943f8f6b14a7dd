#pragma once

#include <map>
#include <string>
#include <vector>

#include "loewner/geometry.hpp"

namespace loewner {

/// One measured cell of an experiment: metric value at family index j,
/// viewpoint x, plus named value components (dT, sup, ...).
struct ReportRow {
    std::size_t j = 0;
    ComplexPoint x;
    std::string metric;
    double value = 0.0;
    std::map<std::string, double> components;

    bool operator==(const ReportRow&) const = default;
};

/// Trend verdict of one (metric, x) series across the index range.
struct SeriesVerdict {
    std::string series;  // "metric@(re,im)" key
    std::string verdict;  // "CONVERGING" or "STALLED"
    std::vector<double> values;  // in index order

    bool operator==(const SeriesVerdict&) const = default;
};

struct Report {
    std::vector<ReportRow> rows;
    std::vector<SeriesVerdict> verdicts;
    std::map<std::string, std::string> meta;  // runtime metadata, config echo

    bool operator==(const Report&) const = default;
};

/// CONVERGING iff the last four values (the whole series when shorter)
/// are strictly decreasing and the final value is below half the
/// initial one; STALLED otherwise.
std::string trend_verdict(const std::vector<double>& series);

/// Series key used in verdicts and plot legends.
std::string series_key(const std::string& metric, const ComplexPoint& x);

/// Flat CSV of the rows; an empty report yields the header line only.
/// Numeric fields are printed with round-trip precision, so identical
/// reports serialize bitwise identically.
std::string report_to_csv(const Report& r);

/// Full JSON structure: rows, verdicts and metadata.
std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);

/// Log-scale metric-vs-index line plot, one polyline per (metric, x).
std::string report_to_svg(const Report& r);

/// Writes the chosen format ("csv", "json" or "svg") to path.
void emit_report(const Report& r, const std::string& format,
                 const std::string& path);

}  // namespace loewner
