// Command-line driver: build cases from the registry (or a config file),
// scan them against their oracles, compare with the Pade baselines, and emit
// CSV/JSON reports.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootapprox/rootapprox.hpp"

namespace ra = rootapprox;

namespace {

std::vector<ra::case_descriptor> assemble_registry(const std::vector<std::string>& configs) {
    auto reg = ra::builtin_registry();
    for (const auto& path : configs) {
        auto d = ra::load_config(path);
        bool replaced = false;
        for (auto& existing : reg)
            if (existing.name == d.name) {
                existing = d;
                replaced = true;
                break;
            }
        if (!replaced) reg.push_back(std::move(d));
    }
    return reg;
}

std::optional<ra::scan_grid> parse_grid(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    ra::scan_grid g;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &g.lo, &g.hi, &g.n) != 3 || g.lo <= 0.0 ||
        g.hi <= g.lo || g.n < 2)
        ra::raise(ra::errc::validation_error, "grid must be lo:hi:n with 0 < lo < hi, n >= 2");
    return g;
}

void print_params(const ra::case_result& r, double tol) {
    std::printf("case %s  (k = %d, mode %s, status %s)\n", r.name.c_str(), r.k, r.mode.c_str(),
                r.status.c_str());
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        std::printf("  A_%zu = %.8g", i + 1, r.params[i]);
        if (i < r.expected.size()) std::printf("   (expected %.8g)", r.expected[i]);
        std::printf("\n");
    }
    if (!r.expected.empty())
        std::printf("  max parameter deviation %.3g (tolerance %.3g): %s\n", r.param_max_dev, tol,
                    r.param_max_dev <= tol ? "ok" : "OUT OF TOLERANCE");
}

int run_build(const ra::case_descriptor& d, double tol) {
    auto r = ra::run_case(d, tol);
    print_params(r, tol);
    if (r.status != "ok") {
        std::printf("  build did not produce an approximant (%s)\n", r.status.c_str());
        return d.name == "fekete_k3" ? 0 : 1; // documented degenerate case
    }
    return (!r.expected.empty() && r.param_max_dev > tol) ? 1 : 0;
}

int run_scan(const ra::case_descriptor& d, double tol, const std::optional<ra::scan_grid>& grid,
             const std::string& out) {
    auto dd = d;
    if (grid) dd.scan = grid;
    auto r = ra::run_case(dd, tol);
    if (r.status != "ok") {
        std::printf("case %s: build failed (%s), nothing to scan\n", r.name.c_str(),
                    r.status.c_str());
        return 1;
    }
    if (!r.scan) {
        std::printf("case %s: no oracle registered, nothing to scan\n", r.name.c_str());
        return 0;
    }
    std::printf("case %s: max relative error %.4g at x = %.6g   (%s)\n", r.name.c_str(),
                r.scan->max_rel_err, r.scan->argmax_x, r.scan->grid.c_str());
    if (!out.empty()) {
        ra::emit_scan(*r.scan, out);
        std::printf("scan written to %s (and %s.xy)\n", out.c_str(), out.c_str());
    }
    return 0;
}

int run_compare(const ra::case_descriptor& d, double tol,
                const std::optional<ra::scan_grid>& grid) {
    auto dd = d;
    if (grid) dd.scan = grid;
    auto r = ra::run_case(dd, tol);
    std::printf("case %s (status %s)\n", r.name.c_str(), r.status.c_str());
    if (r.scan)
        std::printf("  %-28s max rel err %.4g at x = %.5g\n", "root approximant",
                    r.scan->max_rel_err, r.scan->argmax_x);
    else
        std::printf("  %-28s %s\n", "root approximant",
                    r.status == "ok" ? "no oracle to scan against" : r.status.c_str());
    for (const auto& b : r.baselines) {
        if (b.status == "ok")
            std::printf("  %-28s max rel err %.4g at x = %.5g\n", b.name.c_str(), b.max_rel_err,
                        b.argmax_x);
        else
            std::printf("  %-28s %s\n", b.name.c_str(), b.status.c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-similar root approximants: build, scan, compare, report"};
    app.require_subcommand(1);

    std::vector<std::string> configs;
    double tol = 1e-3;
    std::string grid_spec;
    app.add_option("--config", configs, "case file(s) overriding or extending the registry")
        ->expected(-1);
    app.add_option("--tol", tol, "parameter-check tolerance (relative)");
    app.add_option("--grid", grid_spec, "scan grid lo:hi:n (log-spaced)");

    std::string case_name, out_path, format = "csv";
    bool all = false;

    auto* build = app.add_subcommand("build", "solve a case and print its parameters");
    build->add_option("case", case_name, "registry case name")->required();

    auto* scan = app.add_subcommand("scan", "error-scan a case against its oracle");
    scan->add_option("case", case_name, "registry case name")->required();
    scan->add_option("--out", out_path, "write plot-ready scan data here");

    auto* compare = app.add_subcommand("compare", "approximant vs Pade baselines");
    compare->add_option("case", case_name, "registry case name")->required();

    auto* report = app.add_subcommand("report", "run cases and emit a CSV/JSON report");
    report->add_flag("--all", all, "run the whole registry");
    report->add_option("case", case_name, "single case (when --all is absent)");
    report->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    report->add_option("--out", out_path, "output path")->required();

    auto* list = app.add_subcommand("list", "list registered cases");

    CLI11_PARSE(app, argc, argv);

    try {
        auto reg = assemble_registry(configs);
        auto grid = parse_grid(grid_spec);
        if (build->parsed()) return run_build(ra::find_case(reg, case_name), tol);
        if (scan->parsed()) return run_scan(ra::find_case(reg, case_name), tol, grid, out_path);
        if (compare->parsed()) return run_compare(ra::find_case(reg, case_name), tol, grid);
        if (list->parsed()) {
            for (const auto& d : reg)
                std::printf("%-26s k=%d mode=%-10s %s\n", d.name.c_str(), d.k(),
                            ra::mode_name(d.mode), d.citation.c_str());
            return 0;
        }
        if (report->parsed()) {
            std::vector<ra::case_result> results;
            if (all) {
                for (const auto& d : reg) results.push_back(ra::run_case(d, tol));
            } else {
                if (case_name.empty())
                    ra::raise(ra::errc::validation_error, "report needs --all or a case name");
                results.push_back(ra::run_case(ra::find_case(reg, case_name), tol));
            }
            ra::emit_report(results, format, out_path);
            std::printf("%zu case(s) written to %s\n", results.size(), out_path.c_str());
            return 0;
        }
    } catch (const ra::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
