#include "r3s1/sweep.hpp"

#include "r3s1/variational.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace r3s1::sweep {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SweepRow compute_row(double R, const SweepConfig& cfg) {
    SweepRow row;
    row.R = R;
    row.Z = potential::charge_to_z(R);
    row.variational_bound =
        (R < potential::critical_radius_internal()) ? -1.0 : std::nan("");
    row.stability_flag = (row.Z < 1.0) ? "stable" : (row.Z == 1.0 ? "critical" : "unstable");
    try {
        const auto spec = potential::PotentialSpec::from_radius(R, 100);
        const auto assembly = solver::assemble_compactified(spec, 0, cfg.grid);
        solver::EigenOptions opts;
        opts.tol_neg = cfg.tol_neg;
        const auto spectral = solver::lowest_eigenvalues(assembly, 1, opts);
        row.ground_energy = spectral.ground;
        row.max_residual = spectral.residuals.empty() ? 0.0 : spectral.residuals.front();
        row.n_bound_states = solver::count_bound_states(spec, cfg.l_max, cfg.grid, cfg.tol_neg);
        if (!spectral.converged) row.error = spectral.message;
    } catch (const std::exception& e) {
        row.error = e.what();
        row.ground_energy = std::nan("");
        row.max_residual = std::nan("");
        row.n_bound_states = -1;
    }
    return row;
}

bool write_atomic(const std::string& path, const std::string& content, std::string* msg) {
    try {
        const std::filesystem::path target(path);
        const std::filesystem::path tmp = target.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) {
                *msg = "cannot open " + tmp.string();
                return false;
            }
            out << content;
            if (!out.good()) {
                *msg = "write failed for " + tmp.string();
                return false;
            }
        }
        std::filesystem::rename(tmp, target);
        return true;
    } catch (const std::exception& e) {
        *msg = e.what();
        return false;
    }
}

} // namespace

void SweepConfig::validate() const {
    if (r_values.empty()) throw std::invalid_argument("sweep: r_values must be non-empty");
    double prev = 0.0;
    for (double r : r_values) {
        if (!(r > 0.0)) throw std::invalid_argument("sweep: radii must be positive");
        if (r <= prev && prev != 0.0) throw std::invalid_argument("sweep: radii must be sorted ascending");
        prev = r;
    }
    grid.validate();
    if (l_max < 0) throw std::invalid_argument("sweep: l_max must be >= 0");
    if (workers < 1) throw std::invalid_argument("sweep: workers must be >= 1");
}

SweepResult run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    SweepResult result;
    result.rows.resize(cfg.r_values.size());

    const int workers = std::min<int>(cfg.workers, static_cast<int>(cfg.r_values.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < cfg.r_values.size(); ++i)
            result.rows[i] = compute_row(cfg.r_values[i], cfg);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    const size_t i = next.fetch_add(1);
                    if (i >= cfg.r_values.size()) return;
                    result.rows[i] = compute_row(cfg.r_values[i], cfg);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    for (const SweepRow& row : result.rows)
        if (!row.error.empty()) result.solver_ok = false;

    if (!cfg.output_path.empty()) {
        const std::string content = (cfg.format == OutputFormat::csv)
                                        ? to_csv(result.rows)
                                        : to_json(cfg, result.rows);
        std::string msg;
        if (!write_atomic(cfg.output_path, content, &msg)) {
            result.io_ok = false;
            result.message = msg;
        }
    }
    return result;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "R,Z,ground_energy,variational_bound,n_bound_states,stability_flag,max_residual\n";
    for (const SweepRow& r : rows) {
        out += fmt17(r.R) + "," + fmt17(r.Z) + "," + fmt17(r.ground_energy) + "," +
               fmt17(r.variational_bound) + "," + std::to_string(r.n_bound_states) + "," +
               r.stability_flag + "," + fmt17(r.max_residual) + "\n";
    }
    return out;
}

std::string to_json(const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
    nlohmann::json j;
    j["units"] = "internal: hbar^2/(2m) = 1, a0 = 1; Z = 4R; energies in hbar^2/(2m a0^2)";
    j["config"] = {
        {"r_values", cfg.r_values},
        {"grid", {{"r_min", cfg.grid.r_min},
                  {"r_max", cfg.grid.r_max},
                  {"n_r", cfg.grid.n_r},
                  {"n_x4", cfg.grid.n_x4},
                  {"stretch", cfg.grid.stretch}}},
        {"l_max", cfg.l_max},
        {"seed", cfg.seed},
        {"workers", cfg.workers},
        {"tol_neg", cfg.tol_neg},
        {"format", cfg.format == OutputFormat::csv ? "csv" : "json"},
    };
    nlohmann::json rows_json = nlohmann::json::array();
    for (const SweepRow& r : rows) {
        nlohmann::json row = {
            {"R", r.R},
            {"Z", r.Z},
            {"ground_energy", std::isnan(r.ground_energy) ? nlohmann::json() : nlohmann::json(r.ground_energy)},
            {"variational_bound",
             std::isnan(r.variational_bound) ? nlohmann::json() : nlohmann::json(r.variational_bound)},
            {"n_bound_states", r.n_bound_states},
            {"stability_flag", r.stability_flag},
            {"max_residual", std::isnan(r.max_residual) ? nlohmann::json() : nlohmann::json(r.max_residual)},
        };
        if (!r.error.empty()) row["error"] = r.error;
        rows_json.push_back(row);
    }
    j["rows"] = rows_json;
    return j.dump(2) + "\n";
}

namespace {

void check_identities(const SweepConfig& cfg, CheckReport& rep) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double worst_ratio = 0.0, worst_bound = 0.0;
    for (double R : {0.05, 0.25, 1.0}) {
        const auto spec = potential::PotentialSpec::from_radius(R, 10000);
        for (int i = 0; i < cfg.check_samples; ++i) {
            const double r = std::exp(std::log(1e-3) + unit(rng) * std::log(1e5));
            const double x4 = (2.0 * unit(rng) - 1.0) * kPi * R;
            const auto img = potential::image_sum({r, x4}, spec);
            const double cf = potential::closed_form({r, x4}, spec);
            worst_ratio = std::max(worst_ratio, std::abs(img.value - cf) /
                                                    std::max(img.tail_bound, 1e-300));
            worst_bound = std::max(worst_bound, img.tail_bound);
        }
    }
    rep.lines.push_back({"closed form vs image sum: |diff|/tail_bound", 1.0, worst_ratio,
                         worst_ratio <= 1.0});
    rep.lines.push_back({"image-sum tail bound", 1e-7, worst_bound, worst_bound <= 1e-7});

    double worst_axial = 0.0, worst_antider = 0.0;
    for (double R : {0.05, 0.25, 1.0}) {
        const auto spec = potential::PotentialSpec::from_radius(R, 100);
        for (double r : {1e-2, 1e-1, 1.0, 10.0, 100.0}) {
            const auto q = potential::axial_integral(r, spec);
            worst_axial = std::max(worst_axial, std::abs(q.value * r / kPi + 1.0));
            worst_antider = std::max(
                worst_antider,
                std::abs(q.value - potential::axial_integral_antiderivative(r, spec)) * r);
        }
    }
    rep.lines.push_back({"axial integral vs -pi/r (scaled)", 1e-8, worst_axial, worst_axial <= 1e-8});
    rep.lines.push_back(
        {"axial quadrature vs antiderivative (scaled)", 1e-10, worst_antider, worst_antider <= 1e-10});

    double worst_w = 0.0;
    bool w_ok = true;
    for (double R : {0.25, 1.0}) {
        const auto spec = potential::PotentialSpec::from_radius(R, 10000);
        for (int i = 0; i < cfg.check_samples; ++i) {
            const double r = std::exp(std::log(1e-3) + unit(rng) * std::log(1e5));
            const double x4 = (2.0 * unit(rng) - 1.0) * kPi * R;
            const double w = potential::remainder_w({r, x4}, spec);
            if (!(w < 0.0)) w_ok = false;
            worst_w = std::max(worst_w, std::abs(w) / potential::remainder_bound(spec));
        }
    }
    rep.lines.push_back({"remainder |W| / (1/(4R^2))", 1.0, worst_w, w_ok && worst_w <= 1.0});

    double worst_per = 0.0;
    for (double R : {0.1, 0.5}) {
        const auto spec = potential::PotentialSpec::from_radius(R, 100);
        for (int i = 0; i < 50; ++i) {
            const double r = std::exp(std::log(1e-2) + unit(rng) * std::log(1e3));
            const double x4 = (2.0 * unit(rng) - 1.0) * kPi * R;
            const double v = potential::closed_form({r, x4}, spec);
            const double shifted =
                potential::closed_form({r, potential::reduce_x4(x4 + 2.0 * kPi * R, R)}, spec);
            const double mirrored = potential::closed_form({r, -x4}, spec);
            worst_per = std::max({worst_per, std::abs(v - shifted), std::abs(v - mirrored)});
        }
    }
    rep.lines.push_back({"periodicity and evenness in x4", 1e-12, worst_per, worst_per <= 1e-12});

    const double rt = std::abs(potential::meters_to_bohr(potential::bohr_to_meters(0.731)) / 0.731 - 1.0);
    rep.lines.push_back({"unit round trip (relative)", 1e-12, rt, rt <= 1e-12});
    const double crit = std::abs(potential::critical_radius_physical() - 1.32e-11) / 1.32e-11;
    rep.lines.push_back({"critical radius vs 1.32e-11 m (relative)", 1e-2, crit, crit <= 1e-2});
}

void check_hardy(const SweepConfig& cfg, CheckReport& rep) {
    (void)cfg;
    const auto g4 = variational::hardy_quotient(variational::gaussian_trial(), 4);
    rep.lines.push_back({"hardy gaussian d=4 (quotient - 2)", 1e-6, std::abs(g4.value - 2.0),
                         std::abs(g4.value - 2.0) <= 1e-6});
    const auto g3 = variational::hardy_quotient(variational::gaussian_trial(), 3);
    rep.lines.push_back({"hardy gaussian d=3 (quotient - 3)", 1e-6, std::abs(g3.value - 3.0),
                         std::abs(g3.value - 3.0) <= 1e-6});

    double prev = 1e300, min_q = 1e300;
    bool decreasing = true;
    for (int n : {8, 16, 32, 64}) {
        const auto q = variational::hardy_quotient(
            variational::optimizing_sequence({n, 0.4}), 4);
        if (q.value >= prev) decreasing = false;
        prev = q.value;
        min_q = std::min(min_q, q.value);
    }
    rep.lines.push_back({"optimizing sequence decreasing toward 1 (min quotient)", 1.0 - 1e-6,
                         min_q, decreasing && min_q >= 1.0 - 1e-6});
}

void check_instability(const SweepConfig& cfg, CheckReport& rep) {
    (void)cfg;
    double prev = 1e300, last = 0.0;
    bool decreasing = true;
    rep.notes.push_back("instability quotients, Z = 2, delta = 0.4:");
    for (int n : {8, 16, 32, 64, 128}) {
        const auto r = variational::instability_rayleigh(2.0, {n, 0.4});
        rep.notes.push_back("  n = " + std::to_string(n) + ": quotient = " + fmt17(r.quotient));
        if (r.quotient >= prev) decreasing = false;
        prev = r.quotient;
        last = r.quotient;
    }
    rep.lines.push_back({"instability Z=2 strictly decreasing", 0.0, decreasing ? 1.0 : 0.0,
                         decreasing});
    rep.lines.push_back({"instability Z=2 final quotient < -10", -10.0, last, last < -10.0});
}

void check_weyl(const SweepConfig& cfg, CheckReport& rep) {
    (void)cfg;
    double min_ratio = 1e300;
    for (double k : {0.5, 1.0}) {
        double prev = 0.0;
        for (int n : {4, 8, 16, 32}) {
            const auto w = variational::weyl_residual(k, n, 0.1);
            if (n > 4) min_ratio = std::min(min_ratio, prev / w.residual);
            prev = w.residual;
        }
    }
    rep.lines.push_back({"weyl residual decay factor per doubling", 1.4, min_ratio,
                         min_ratio >= 1.4});
}

} // namespace

CheckReport run_checks(const SweepConfig& cfg) {
    CheckReport rep;
    if (cfg.checks.count(Check::identities)) check_identities(cfg, rep);
    if (cfg.checks.count(Check::hardy)) check_hardy(cfg, rep);
    if (cfg.checks.count(Check::instability)) check_instability(cfg, rep);
    if (cfg.checks.count(Check::weyl)) check_weyl(cfg, rep);
    for (const CheckLine& l : rep.lines)
        if (!l.pass) rep.all_pass = false;
    return rep;
}

} // namespace r3s1::sweep
