#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mfg/errors.hpp"
#include "mfg/runner.hpp"

namespace {

mfg::Config load_or_default(const std::string& config_path) {
    if (config_path.empty()) return mfg::Config{};
    return mfg::load_config(config_path);
}

void print_audit(const mfg::AuditReport& report) {
    for (const auto& c : report.checks) {
        std::printf("%-16s %s", c.name.c_str(), c.pass ? "pass" : "FAIL");
        if (!c.pass && !c.detail.empty()) std::printf("  (%s)", c.detail.c_str());
        std::printf("\n");
    }
    std::printf("audit: %s\n", report.overall_pass ? "pass" : "FAIL");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Oligopoly exhaustible-resource market: coupled HJB/transport solver"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    app.add_option("--config", config_path, "config file (INI)");
    app.add_option("--out", out_dir, "output directory");

    auto* solve = app.add_subcommand("solve", "solve the coupled system and audit it");

    auto* audit = app.add_subcommand("audit", "audit externally supplied u/m fields");
    std::string u_path, m_path;
    audit->add_option("u_csv", u_path, "value-field CSV")->required();
    audit->add_option("m_csv", m_path, "density-field CSV")->required();

    auto* sweep = app.add_subcommand("sweep", "solve once per parameter value");
    std::string sweep_param;
    std::vector<double> sweep_values;
    bool with_uniqueness = false;
    sweep->add_option("--param", sweep_param, "epsilon or sigma")->required();
    sweep->add_option("--values", sweep_values, "parameter values")->required();
    sweep->add_flag("--uniqueness", with_uniqueness,
                    "also report the two-start gap in m per value");

    auto* conv = app.add_subcommand("convergence", "dyadic refinement study");
    int levels = 3;
    conv->add_option("--levels", levels, "refinement levels (>= 2)");

    CLI11_PARSE(app, argc, argv);

    try {
        const mfg::Config cfg = load_or_default(config_path);
        if (solve->parsed()) {
            const mfg::SolveOutcome out = mfg::run_solve(cfg, out_dir);
            std::printf("converged: %s  iterations: %d  tau: %g\n",
                        out.solution.converged ? "yes" : "no",
                        out.solution.iterations, out.solution.tau_final);
            print_audit(out.audit);
            std::printf("wrote %s/{u.csv,m.csv,paths.csv,report.json}\n", out_dir.c_str());
            return out.exit_status;
        }
        if (audit->parsed()) {
            const mfg::AuditReport report = mfg::run_audit(cfg, u_path, m_path);
            print_audit(report);
            return report.overall_pass ? mfg::kExitOk : mfg::kExitAuditFailed;
        }
        if (sweep->parsed()) {
            mfg::run_sweep(cfg, sweep_param, sweep_values, out_dir, with_uniqueness);
            std::printf("wrote %s/summary.csv\n", out_dir.c_str());
            return mfg::kExitOk;
        }
        mfg::run_convergence(cfg, levels, out_dir);
        std::printf("wrote %s/orders.json\n", out_dir.c_str());
        return mfg::kExitOk;
    } catch (const mfg::SolverError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return mfg::kExitNotConverged;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return mfg::kExitError;
    }
}
