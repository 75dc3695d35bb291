// Command-line front end: radius sweeps over the compactified-dimension
// spectrum, plus the identity/property check suites.

#include "r3s1/potential.hpp"
#include "r3s1/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

int do_sweep(const r3s1::sweep::SweepConfig& cfg) {
    const auto result = r3s1::sweep::run_sweep(cfg);
    for (const auto& row : result.rows) {
        std::printf("R = %-10.6g Z = %-8.4g ground = %-14.8g bound states = %-6ld %s%s%s\n",
                    row.R, row.Z, row.ground_energy, row.n_bound_states,
                    row.stability_flag.c_str(), row.error.empty() ? "" : "  ERROR: ",
                    row.error.c_str());
    }
    if (!result.io_ok) {
        std::fprintf(stderr, "output error: %s (rows retained in memory)\n",
                     result.message.c_str());
        return 2;
    }
    if (!result.solver_ok) {
        std::fprintf(stderr, "solver non-convergence on at least one radius\n");
        return 3;
    }
    return 0;
}

int do_check(const r3s1::sweep::SweepConfig& cfg) {
    const auto rep = r3s1::sweep::run_checks(cfg);
    for (const auto& line : rep.lines)
        std::printf("%-55s tolerance %-12.3g achieved %-14.6g %s\n", line.name.c_str(),
                    line.tolerance, line.achieved, line.pass ? "PASS" : "FAIL");
    for (const auto& note : rep.notes) std::printf("%s\n", note.c_str());
    return rep.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hydrogen-like atom on R^3 x S^1: radius sweeps and identity checks"};
    app.set_config("--config", "", "INI-style key=value configuration file");

    r3s1::sweep::SweepConfig cfg;
    double r_min = 0.05, r_max = 0.30;
    int steps = 6;
    std::string format = "csv";
    std::vector<std::string> checks;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--grid-nr", cfg.grid.n_r, "radial grid nodes");
        cmd->add_option("--grid-nx4", cfg.grid.n_x4, "fibre grid nodes (even)");
        cmd->add_option("--grid-rmin", cfg.grid.r_min, "radial inner cutoff");
        cmd->add_option("--grid-rmax", cfg.grid.r_max, "radial outer truncation");
        cmd->add_option("--stretch", cfg.grid.stretch, "grid clustering exponent");
        cmd->add_option("--l-max", cfg.l_max, "angular momentum cutoff");
        cmd->add_option("--seed", cfg.seed, "seed for sampled property checks");
        cmd->add_option("--workers", cfg.workers, "concurrent sweep workers");
        cmd->add_option("--tol-neg", cfg.tol_neg, "negativity threshold for state counting");
        cmd->add_option("--out", cfg.output_path, "output file path");
        cmd->add_option("--format", format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "radius sweep with CSV/JSON output");
    sweep_cmd->add_option("--r-min", r_min, "smallest compactification radius (a0 units)");
    sweep_cmd->add_option("--r-max", r_max, "largest compactification radius (a0 units)");
    sweep_cmd->add_option("--steps", steps, "number of radii (inclusive linear spacing)");
    add_common(sweep_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "run identity/property suites");
    check_cmd->add_option("--check", checks,
                          "suite: identities, hardy, instability, weyl (repeatable)");
    check_cmd->add_option("--samples", cfg.check_samples, "sampled points per suite");
    add_common(check_cmd);

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cfg.format = (format == "json") ? r3s1::sweep::OutputFormat::json
                                    : r3s1::sweep::OutputFormat::csv;

    try {
        if (sweep_cmd->parsed()) {
            if (steps < 1 || !(r_min > 0.0) || r_max < r_min) {
                std::fprintf(stderr, "invalid radius range\n");
                return 2;
            }
            cfg.r_values.clear();
            for (int i = 0; i < steps; ++i)
                cfg.r_values.push_back(
                    steps == 1 ? r_min : r_min + (r_max - r_min) * double(i) / (steps - 1));
            return do_sweep(cfg);
        }
        if (check_cmd->parsed()) {
            if (!checks.empty()) {
                cfg.checks.clear();
                for (const std::string& c : checks) {
                    if (c == "identities") cfg.checks.insert(r3s1::sweep::Check::identities);
                    else if (c == "hardy") cfg.checks.insert(r3s1::sweep::Check::hardy);
                    else if (c == "instability") cfg.checks.insert(r3s1::sweep::Check::instability);
                    else if (c == "weyl") cfg.checks.insert(r3s1::sweep::Check::weyl);
                    else {
                        std::fprintf(stderr, "unknown check suite: %s\n", c.c_str());
                        return 2;
                    }
                }
            }
            return do_check(cfg);
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
