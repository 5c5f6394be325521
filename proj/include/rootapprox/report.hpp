#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootapprox/errors.hpp"
#include "rootapprox/registry.hpp"

namespace rootapprox {

inline constexpr int report_schema_version = 1;

namespace detail {

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

/// Baseline shown in the CSV row: the best scanned one, else the first.
inline const baseline_result* representative_baseline(const case_result& r) {
    const baseline_result* best = nullptr;
    for (const auto& b : r.baselines)
        if (b.status == "ok" && (!best || b.max_rel_err < best->max_rel_err)) best = &b;
    if (!best && !r.baselines.empty()) best = &r.baselines.front();
    return best;
}

} // namespace detail

inline std::string to_csv(const std::vector<case_result>& results) {
    if (results.empty()) raise(errc::validation_error, "no results to report");
    std::string out;
    out += "# schema_version " + std::to_string(report_schema_version) + "\n";
    out += "case,k,mode,param_max_dev,scan_max_rel_err,scan_argmax,baseline_name,"
           "baseline_max_rel_err,status\n";
    for (const auto& r : results) {
        out += r.name + "," + std::to_string(r.k) + "," + r.mode + ",";
        out += detail::fmt_double(r.param_max_dev) + ",";
        if (r.scan) {
            out += detail::fmt_double(r.scan->max_rel_err) + "," +
                   detail::fmt_double(r.scan->argmax_x) + ",";
        } else {
            out += ",,";
        }
        if (const auto* b = detail::representative_baseline(r)) {
            out += b->name + ",";
            out += b->status == "ok" ? detail::fmt_double(b->max_rel_err) : "";
            out += ",";
        } else {
            out += ",,";
        }
        out += r.status + "\n";
    }
    return out;
}

inline nlohmann::json to_json(const std::vector<case_result>& results) {
    if (results.empty()) raise(errc::validation_error, "no results to report");
    nlohmann::json root;
    root["schema_version"] = report_schema_version;
    auto& arr = root["results"] = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json j;
        j["case"] = r.name;
        j["k"] = r.k;
        j["mode"] = r.mode;
        j["status"] = r.status;
        j["params"] = r.params;
        j["expected"] = r.expected;
        j["param_max_dev"] = r.param_max_dev;
        j["scan_status"] = r.scan_status;
        if (r.scan) {
            nlohmann::json s;
            s["max_rel_err"] = r.scan->max_rel_err;
            s["argmax_x"] = r.scan->argmax_x;
            s["grid"] = r.scan->grid;
            auto& pts = s["per_point"] = nlohmann::json::array();
            for (const auto& p : r.scan->per_point)
                pts.push_back({p.x, p.approx, p.oracle, p.rel_err});
            j["scan"] = std::move(s);
        }
        auto& bl = j["baselines"] = nlohmann::json::array();
        for (const auto& b : r.baselines) {
            nlohmann::json jb;
            jb["name"] = b.name;
            jb["status"] = b.status;
            if (b.status == "ok") {
                jb["max_rel_err"] = b.max_rel_err;
                jb["argmax_x"] = b.argmax_x;
            }
            bl.push_back(std::move(jb));
        }
        arr.push_back(std::move(j));
    }
    return root;
}

inline void emit_report(const std::vector<case_result>& results, const std::string& format,
                        const std::string& path) {
    std::string payload;
    if (format == "csv") {
        payload = to_csv(results);
    } else if (format == "json") {
        payload = to_json(results).dump(2) + "\n";
    } else {
        raise(errc::validation_error, "format must be csv or json, got '" + format + "'");
    }
    std::ofstream out(path);
    if (!out) raise(errc::io_error, "cannot write '" + path + "'");
    out << payload;
    if (!out) raise(errc::io_error, "write failed for '" + path + "'");
}

/// Plot-ready scan data: four-column (x, approx, oracle, rel_err) at `path`,
/// two-column (x, approx) at `path.xy`.
inline void emit_scan(const error_report& rep, const std::string& path) {
    {
        std::ofstream out(path);
        if (!out) raise(errc::io_error, "cannot write '" + path + "'");
        out << "# x approx oracle rel_err   (" << rep.grid << ")\n";
        for (const auto& p : rep.per_point)
            out << detail::fmt_double(p.x) << " " << detail::fmt_double(p.approx) << " "
                << detail::fmt_double(p.oracle) << " " << detail::fmt_double(p.rel_err) << "\n";
        if (!out) raise(errc::io_error, "write failed for '" + path + "'");
    }
    {
        std::string xy = path + ".xy";
        std::ofstream out(xy);
        if (!out) raise(errc::io_error, "cannot write '" + xy + "'");
        out << "# x approx\n";
        for (const auto& p : rep.per_point)
            out << detail::fmt_double(p.x) << " " << detail::fmt_double(p.approx) << "\n";
        if (!out) raise(errc::io_error, "write failed for '" + xy + "'");
    }
}

} // namespace rootapprox
