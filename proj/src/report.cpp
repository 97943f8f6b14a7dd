#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "loewner/report.hpp"

namespace loewner {

namespace {

using nlohmann::json;

/// Round-trip formatting of a double: shortest form that parses back
/// to the same bits, so CSV output is deterministic across runs.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back = std::strtod(buf, nullptr);
    if (back == v) {
        for (int prec = 1; prec <= 16; ++prec) {
            char shorter[40];
            std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
            if (std::strtod(shorter, nullptr) == v) return shorter;
        }
    }
    return buf;
}

json point_to_json(const ComplexPoint& p) {
    if (p.at_infinity) return json{{"inf", true}};
    return json{{"re", p.re}, {"im", p.im}};
}

ComplexPoint point_from_json(const json& j) {
    if (j.contains("inf") && j["inf"].get<bool>()) return ComplexPoint::infinity();
    return ComplexPoint(j["re"].get<double>(), j["im"].get<double>());
}

}  // namespace

std::string trend_verdict(const std::vector<double>& series) {
    if (series.size() < 2) return "STALLED";
    std::size_t tail = std::min<std::size_t>(series.size(), 4);
    for (std::size_t i = series.size() - tail; i + 1 < series.size(); ++i)
        if (!(series[i + 1] < series[i])) return "STALLED";
    if (!(series.back() < 0.5 * series.front())) return "STALLED";
    return "CONVERGING";
}

std::string series_key(const std::string& metric, const ComplexPoint& x) {
    if (x.at_infinity) return metric + "@inf";
    return metric + "@(" + fmt(x.re) + "," + fmt(x.im) + ")";
}

std::string report_to_csv(const Report& r) {
    std::string out = "j,x_re,x_im,metric,value,components\n";
    for (const auto& row : r.rows) {
        out += std::to_string(row.j) + ",";
        out += (row.x.at_infinity ? "inf" : fmt(row.x.re)) + ",";
        out += (row.x.at_infinity ? "inf" : fmt(row.x.im)) + ",";
        out += row.metric + "," + fmt(row.value) + ",";
        bool first = true;
        for (const auto& [k, v] : row.components) {
            if (!first) out += ";";
            out += k + "=" + fmt(v);
            first = false;
        }
        out += "\n";
    }
    return out;
}

std::string report_to_json(const Report& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json comp = json::object();
        for (const auto& [k, v] : row.components) comp[k] = v;
        rows.push_back({{"j", row.j},
                        {"x", point_to_json(row.x)},
                        {"metric", row.metric},
                        {"value", row.value},
                        {"components", comp}});
    }
    json verdicts = json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back(
            {{"series", v.series}, {"verdict", v.verdict}, {"values", v.values}});
    json meta = json::object();
    for (const auto& [k, v] : r.meta) meta[k] = v;
    json doc{{"rows", rows}, {"verdicts", verdicts}, {"meta", meta}};
    return doc.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    json doc = json::parse(text);
    Report r;
    for (const auto& jr : doc.at("rows")) {
        ReportRow row;
        row.j = jr.at("j").get<std::size_t>();
        row.x = point_from_json(jr.at("x"));
        row.metric = jr.at("metric").get<std::string>();
        row.value = jr.at("value").get<double>();
        for (auto it = jr.at("components").begin(); it != jr.at("components").end();
             ++it)
            row.components[it.key()] = it.value().get<double>();
        r.rows.push_back(std::move(row));
    }
    for (const auto& jv : doc.at("verdicts")) {
        SeriesVerdict v;
        v.series = jv.at("series").get<std::string>();
        v.verdict = jv.at("verdict").get<std::string>();
        v.values = jv.at("values").get<std::vector<double>>();
        r.verdicts.push_back(std::move(v));
    }
    for (auto it = doc.at("meta").begin(); it != doc.at("meta").end(); ++it)
        r.meta[it.key()] = it.value().get<std::string>();
    return r;
}

std::string report_to_svg(const Report& r) {
    // one polyline per (metric, x) over (j, log10 value)
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    double jmin = 1e300, jmax = -1e300, vmin = 1e300, vmax = -1e300;
    for (const auto& row : r.rows) {
        double lv = std::log10(std::max(row.value, 1e-16));
        series[series_key(row.metric, row.x)].emplace_back(double(row.j), lv);
        jmin = std::min(jmin, double(row.j));
        jmax = std::max(jmax, double(row.j));
        vmin = std::min(vmin, lv);
        vmax = std::max(vmax, lv);
    }
    if (series.empty()) {
        jmin = 0;
        jmax = 1;
        vmin = -1;
        vmax = 0;
    }
    if (jmax - jmin < 1e-12) jmax = jmin + 1;
    if (vmax - vmin < 1e-12) vmax = vmin + 1;
    const double W = 720, H = 480, ml = 60, mr = 160, mt = 20, mb = 40;
    auto px = [&](double j) { return ml + (j - jmin) / (jmax - jmin) * (W - ml - mr); };
    auto py = [&](double v) { return H - mb - (v - vmin) / (vmax - vmin) * (H - mt - mb); };
    const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                             "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\">\n";
    out += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
    out += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(H - mb) + "\" x2=\"" +
           fmt(W - mr) + "\" y2=\"" + fmt(H - mb) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt) + "\" x2=\"" + fmt(ml) +
           "\" y2=\"" + fmt(H - mb) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt((ml + W - mr) / 2) + "\" y=\"" + fmt(H - 8) +
           "\" font-size=\"13\" text-anchor=\"middle\">index j</text>\n";
    out += "<text x=\"14\" y=\"" + fmt((mt + H - mb) / 2) +
           "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
           fmt((mt + H - mb) / 2) + ")\">log10 metric</text>\n";
    std::size_t idx = 0;
    for (const auto& [key, pts] : series) {
        const char* color = palette[idx % 8];
        std::string poly;
        for (const auto& [j, v] : pts) poly += fmt(px(j)) + "," + fmt(py(v)) + " ";
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.5\" points=\"" + poly + "\"/>\n";
        out += "<text x=\"" + fmt(W - mr + 8) + "\" y=\"" + fmt(mt + 14.0 * (idx + 1)) +
               "\" font-size=\"11\" fill=\"" + color + "\">" + key + "</text>\n";
        ++idx;
    }
    out += "</svg>\n";
    return out;
}

void emit_report(const Report& r, const std::string& format,
                 const std::string& path) {
    std::string body;
    if (format == "csv")
        body = report_to_csv(r);
    else if (format == "json")
        body = report_to_json(r);
    else if (format == "svg")
        body = report_to_svg(r);
    else
        throw std::invalid_argument("emit_report: unknown format " + format);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("emit_report: cannot write " + path);
    f << body;
}

}  // namespace loewner
