#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rootapprox/errors.hpp"
#include "rootapprox/registry.hpp"

namespace rootapprox {

namespace detail {

struct config_entry {
    std::string value;
    int line = 0;
};

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

inline double to_number(const std::string& v, int line) {
    try {
        if (v.find('/') != std::string::npos) return parse_rational(v).to_double();
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        raise(errc::parse_error, "line " + std::to_string(line) + ": not a number: '" + v + "'");
    }
}

inline rational to_rational(const std::string& v, int line) {
    try {
        return parse_rational(v);
    } catch (const error&) {
        raise(errc::parse_error,
              "line " + std::to_string(line) + ": exponents must be rational: '" + v + "'");
    }
}

inline std::vector<rational> to_rational_list(const std::string& v, int line) {
    std::vector<rational> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_rational(trim(item), line));
    return out;
}

} // namespace detail

/// Parse a flat key-value case file with [case], [schedule], [mode], [scan]
/// sections. Unknown keys are hard errors; numbers accept "p/q" or decimal;
/// exponents must be rational.
inline case_descriptor load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::io_error, "cannot open '" + path + "'");
    std::map<std::string, std::map<std::string, detail::config_entry>> sections;
    std::string section;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                raise(errc::parse_error, "line " + std::to_string(lineno) + ": unterminated section");
            section = line.substr(1, line.size() - 2);
            if (section != "case" && section != "schedule" && section != "mode" &&
                section != "scan")
                raise(errc::validation_error,
                      "line " + std::to_string(lineno) + ": unknown section [" + section + "]");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            raise(errc::parse_error, "line " + std::to_string(lineno) + " col " +
                                         std::to_string(line.size()) + ": expected key = value");
        if (section.empty())
            raise(errc::parse_error,
                  "line " + std::to_string(lineno) + ": key outside of any section");
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            raise(errc::parse_error, "line " + std::to_string(lineno) + " col " +
                                         std::to_string(eq) + ": empty key or value");
        sections[section][key] = {value, lineno};
    }

    case_descriptor d;
    rational small_step{1}, large_step{1};
    std::map<int, coeff_entry> small_by_index, large_by_index;

    auto starts_with = [](const std::string& s, const std::string& p) {
        return s.rfind(p, 0) == 0;
    };
    auto index_of = [&](const std::string& key, const std::string& prefix, int line) {
        try {
            return std::stoi(key.substr(prefix.size()));
        } catch (const std::exception&) {
            raise(errc::validation_error,
                  "line " + std::to_string(line) + ": bad coefficient index in '" + key + "'");
        }
    };

    nest_spec explicit_spec;
    bool has_explicit = false;

    for (const auto& [sec, entries] : sections) {
        for (const auto& [key, ent] : entries) {
            const std::string& v = ent.value;
            int ln = ent.line;
            if (sec == "case") {
                if (key == "name") d.name = v;
                else if (key == "citation") d.citation = v;
                else if (key == "variable_note") d.data.variable_note = v;
                else if (key == "small_amp") d.data.small_amp = detail::to_number(v, ln);
                else if (key == "small_pow") d.data.small_pow = detail::to_rational(v, ln);
                else if (key == "small_step") small_step = detail::to_rational(v, ln);
                else if (key == "large_amp") d.data.large_amp = detail::to_number(v, ln);
                else if (key == "large_pow") d.data.large_pow = detail::to_rational(v, ln);
                else if (key == "large_step") large_step = detail::to_rational(v, ln);
                else if (key == "var_pow") d.data.var_pow = detail::to_rational(v, ln);
                else if (starts_with(key, "small_logcoeff_")) {
                    auto& e = small_by_index[1000 + index_of(key, "small_logcoeff_", ln)];
                    e.logpow = 1;
                    e.value = detail::to_number(v, ln);
                } else if (starts_with(key, "small_coeff_")) {
                    small_by_index[index_of(key, "small_coeff_", ln)].value =
                        detail::to_number(v, ln);
                } else if (starts_with(key, "large_logcoeff_")) {
                    auto& e = large_by_index[1000 + index_of(key, "large_logcoeff_", ln)];
                    e.logpow = 1;
                    e.value = detail::to_number(v, ln);
                } else if (starts_with(key, "large_coeff_")) {
                    large_by_index[index_of(key, "large_coeff_", ln)].value =
                        detail::to_number(v, ln);
                } else
                    raise(errc::validation_error,
                          "line " + std::to_string(ln) + ": unknown key '" + key + "'");
            } else if (sec == "schedule") {
                if (!d.schedule) d.schedule = schedule_params{};
                if (key == "k") d.schedule->k = static_cast<int>(detail::to_number(v, ln));
                else if (key == "sigma") d.schedule->sigma = detail::to_rational(v, ln);
                else if (key == "step") d.schedule->step = detail::to_rational(v, ln);
                else if (key == "total_pow") d.schedule->total_pow = detail::to_rational(v, ln);
                else if (key == "term_exps") {
                    explicit_spec.term_exps = detail::to_rational_list(v, ln);
                    has_explicit = true;
                } else if (key == "level_pows") {
                    explicit_spec.level_pows = detail::to_rational_list(v, ln);
                    has_explicit = true;
                } else if (starts_with(key, "log_slot_")) {
                    explicit_spec.log_slots[index_of(key, "log_slot_", ln)] =
                        detail::to_rational(v, ln);
                    has_explicit = true;
                } else
                    raise(errc::validation_error,
                          "line " + std::to_string(ln) + ": unknown key '" + key + "'");
            } else if (sec == "mode") {
                if (key == "type") {
                    if (v == "small_only") d.mode = case_descriptor::mode_t::small_only;
                    else if (v == "amplitude") d.mode = case_descriptor::mode_t::amplitude;
                    else if (v == "two_point") d.mode = case_descriptor::mode_t::two_point;
                    else if (v == "verify") d.mode = case_descriptor::mode_t::verify;
                    else
                        raise(errc::validation_error,
                              "line " + std::to_string(ln) + ": unknown mode '" + v + "'");
                } else if (starts_with(key, "expected_")) {
                    int i = index_of(key, "expected_", ln);
                    if (static_cast<int>(d.expected_params.size()) < i)
                        d.expected_params.resize(static_cast<std::size_t>(i), 0.0);
                    d.expected_params[static_cast<std::size_t>(i - 1)] = detail::to_number(v, ln);
                } else
                    raise(errc::validation_error,
                          "line " + std::to_string(ln) + ": unknown key '" + key + "'");
            } else { // scan
                if (!d.scan) d.scan = scan_grid{};
                if (key == "lo") d.scan->lo = detail::to_number(v, ln);
                else if (key == "hi") d.scan->hi = detail::to_number(v, ln);
                else if (key == "n") d.scan->n = static_cast<int>(detail::to_number(v, ln));
                else if (key == "oracle") {
                    oracle_by_name(v); // validates the name
                    d.oracle = v;
                } else
                    raise(errc::validation_error,
                          "line " + std::to_string(ln) + ": unknown key '" + key + "'");
            }
        }
    }

    // log entries were keyed at index + 1000 to coexist with plain ones
    for (auto& [i, e] : small_by_index) {
        e.exponent = small_step * rational(i >= 1000 ? i - 1000 : i);
        d.data.small_coeffs.push_back(e);
    }
    for (auto& [i, e] : large_by_index) {
        e.exponent = large_step * rational(i >= 1000 ? i - 1000 : i);
        d.data.large_coeffs.push_back(e);
    }
    if (has_explicit) {
        if (explicit_spec.term_exps.size() != explicit_spec.level_pows.size())
            raise(errc::validation_error, "term_exps and level_pows lengths differ");
        explicit_spec.step = small_step;
        d.explicit_spec = explicit_spec;
        d.schedule.reset();
    }
    if (d.name.empty()) raise(errc::validation_error, "missing [case] name");
    if (!d.schedule && !d.explicit_spec)
        raise(errc::validation_error, "missing [schedule] section");

    // power consistency: the schedule's implied infinity exponent, scaled by
    // the variable change, must reproduce beta - alpha
    if (d.data.large_amp) {
        nest_spec s = make_spec(d);
        rational implied = implied_infinity_exponent(s) * d.data.var_pow;
        rational expect = d.data.large_pow - d.data.small_pow;
        if (implied != expect)
            raise(errc::validation_error,
                  "power mismatch: schedule gives x^" + implied.str() +
                      " at infinity, expansions demand x^" + expect.str());
    }
    if (d.mode == case_descriptor::mode_t::two_point ||
        d.mode == case_descriptor::mode_t::verify)
        d.conditions = conditions_from_case(d.data);
    return d;
}

} // namespace rootapprox
