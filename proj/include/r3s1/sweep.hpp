#pragma once

#include "r3s1/solver.hpp"

#include <set>
#include <string>
#include <vector>

namespace r3s1::sweep {

enum class OutputFormat { csv, json };
enum class Check { identities, hardy, instability, weyl };

struct SweepConfig {
    std::vector<double> r_values;
    solver::GridSpec grid{1e-3, 40.0, 600, 32, 1.0};
    int l_max = 2;
    std::set<Check> checks{Check::identities, Check::hardy, Check::instability, Check::weyl};
    std::string output_path;
    OutputFormat format = OutputFormat::csv;
    unsigned long long seed = 1;
    int workers = 1;
    double tol_neg = 1e-6;
    int check_samples = 200;

    void validate() const;
};

struct SweepRow {
    double R = 0.0;
    double Z = 0.0;
    double ground_energy = 0.0;
    double variational_bound = 0.0; // -1 below the critical radius, nan above
    long n_bound_states = 0;
    std::string stability_flag;
    double max_residual = 0.0;
    std::string error; // per-radius solver failure, empty when clean
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool io_ok = true;
    bool solver_ok = true;
    std::string message;
};

/// One row per R, ordered by R; the output file is written atomically
/// (temp file + rename).  Per-radius failures are recorded in-row.
SweepResult run_sweep(const SweepConfig& cfg);

std::string to_csv(const std::vector<SweepRow>& rows);
std::string to_json(const SweepConfig& cfg, const std::vector<SweepRow>& rows);

struct CheckLine {
    std::string name;
    double tolerance = 0.0;
    double achieved = 0.0;
    bool pass = false;
};

struct CheckReport {
    std::vector<CheckLine> lines;
    std::vector<std::string> notes; // e.g. the instability divergence table
    bool all_pass = true;
};

/// Runs the selected identity/property suites with the configured seed.
CheckReport run_checks(const SweepConfig& cfg);

} // namespace r3s1::sweep
