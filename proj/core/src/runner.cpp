#include "mfg/runner.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <utility>

#include <nlohmann/json.hpp>

#include "mfg/calculus.hpp"
#include "mfg/errors.hpp"
#include "mfg/fp.hpp"
#include "mfg/hjb.hpp"
#include "mfg/io.hpp"
#include "mfg/verification.hpp"

namespace mfg {

namespace fs = std::filesystem;

namespace {

double measured_value(const CheckRecord& rec, const std::string& key) {
    for (const auto& [k, v] : rec.measured)
        if (k == key) return v;
    throw std::logic_error("audit record '" + rec.name + "' has no entry '" + key + "'");
}

double max_grid_ux(const Solution& sol) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n <= sol.grid.nt; ++n)
        for (double v : gradient(sol.u.row(n), sol.grid.dx))
            m = std::max(m, v);
    return m;
}

std::vector<double> observed_orders(const std::vector<double>& errors) {
    std::vector<double> orders;
    for (std::size_t k = 0; k + 1 < errors.size(); ++k)
        orders.push_back(std::log2(errors[k] / errors[k + 1]));
    return orders;
}

double hjb_manufactured_error(const ModelParams& params, const Grid& grid,
                              TimeShape shape) {
    const ManufacturedCase mc = manufactured_hjb(params, grid, shape);
    const Field u = solve_hjb(mc.f, params, grid, HjbOptions{}, &mc.source, &mc.terminal);
    return max_error(u, mc.exact);
}

double fp_eigenfunction_error(const ModelParams& params, const Grid& grid) {
    const Field exact = fp_eigenfunction(params, grid);
    const std::vector<double> initial(exact.row(0).begin(), exact.row(0).end());
    const Field u_zero(grid.nt + 1, grid.nx + 1);
    const ScalarPath f_zero(grid.nt + 1, 0.0);
    const Field m = solve_fp(u_zero, f_zero, params, grid, 1.0, &initial);
    return max_error(m, exact);
}

} // namespace

SolveOutcome run_solve(const Config& cfg, const fs::path& out_dir) {
    SolveOutcome outcome;
    outcome.solution = continuation_solve(cfg.params, cfg.disc);
    outcome.audit = audit_all(outcome.solution, cfg.params);
    if (!outcome.solution.converged)
        outcome.exit_status = kExitNotConverged;
    else if (!outcome.audit.overall_pass)
        outcome.exit_status = kExitAuditFailed;

    const std::string u_csv = field_to_csv(outcome.solution.u, outcome.solution.grid);
    const std::string m_csv = field_to_csv(outcome.solution.m, outcome.solution.grid);
    const std::string paths_csv = paths_to_csv(outcome.solution);
    const std::string report = report_to_json(outcome.solution, outcome.audit).dump(2) + "\n";

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    std::vector<fs::path> written;
    try {
        const std::vector<std::pair<std::string, const std::string*>> files = {
            {"u.csv", &u_csv},
            {"m.csv", &m_csv},
            {"paths.csv", &paths_csv},
            {"report.json", &report}};
        for (const auto& [name, content] : files) {
            const fs::path p = out_dir / name;
            write_text_file(p, *content);
            written.push_back(p);
        }
    } catch (...) {
        for (const auto& p : written) fs::remove(p, ec);
        throw;
    }
    return outcome;
}

AuditReport run_audit(const Config& cfg, const fs::path& u_csv, const fs::path& m_csv) {
    const LoadedField lu = read_field_csv(u_csv);
    const LoadedField lm = read_field_csv(m_csv);
    if (lu.x.size() != lm.x.size() || lu.t.size() != lm.t.size())
        throw ConfigError("audit: u and m fields have different shapes");

    Solution sol;
    sol.grid = build_grid(lu.x.back(), lu.t.back(), lu.x.size() - 1, lu.t.size() - 1);
    sol.u = lu.field;
    sol.m = lm.field;
    CouplingPaths cp = coupling_paths(sol.u, sol.m, sol.grid, cfg.params.epsilon);
    sol.eta = std::move(cp.eta);
    sol.Q = std::move(cp.Q);
    sol.f = std::move(cp.f);
    sol.pbar = std::move(cp.pbar);
    sol.tau_final = 1.0;
    sol.converged = true;
    return audit_all(sol, cfg.params);
}

void run_sweep(const Config& cfg, const std::string& param,
               const std::vector<double>& values, const fs::path& out_dir,
               bool with_uniqueness) {
    if (param != "epsilon" && param != "sigma")
        throw ConfigError("sweep: parameter must be 'epsilon' or 'sigma'");

    struct Row {
        double value;
        bool ok = false;
        std::string error;
        bool converged = false;
        int iterations = 0;
        double eta_T = 0.0;
        double max_f = 0.0;
        double max_ux = 0.0;
        double uniq_gap_m = std::numeric_limits<double>::quiet_NaN();
    };

    auto solve_one = [&](double value) -> Row {
        Row row;
        row.value = value;
        Config c = cfg;
        if (param == "epsilon") c.params.epsilon = value;
        else c.params.sigma = value;
        try {
            validate(c.params);
            const Solution sol = continuation_solve(c.params, c.disc);
            row.converged = sol.converged;
            row.iterations = sol.iterations;
            row.eta_T = sol.eta.back();
            for (double fv : sol.f) row.max_f = std::max(row.max_f, std::abs(fv));
            row.max_ux = max_grid_ux(sol);
            if (with_uniqueness) {
                const ScalarPath qa(sol.grid.nt + 1, 0.0), qb(sol.grid.nt + 1, 1.0);
                row.uniq_gap_m = uniqueness_experiment(c.params, c.disc, qa, qb).gap_m;
            }
            row.ok = true;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        return row;
    };

    std::vector<std::future<Row>> futures;
    futures.reserve(values.size());
    for (double v : values)
        futures.push_back(std::async(std::launch::async, solve_one, v));

    std::string csv = param + ",converged,iterations,eta_T,max_f,max_ux,uniqueness_gap_m,error\n";
    for (auto& fut : futures) {
        const Row row = fut.get();
        csv += format_double(row.value);
        csv += ',';
        if (row.ok) {
            csv += row.converged ? "true" : "false";
            csv += ',' + std::to_string(row.iterations);
            csv += ',' + format_double(row.eta_T);
            csv += ',' + format_double(row.max_f);
            csv += ',' + format_double(row.max_ux);
            csv += ',';
            if (!std::isnan(row.uniq_gap_m)) csv += format_double(row.uniq_gap_m);
            csv += ',';
        } else {
            std::string msg = row.error;
            std::replace(msg.begin(), msg.end(), ',', ';');
            csv += ",,,,,," + msg;
        }
        csv += '\n';
    }

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    write_text_file(out_dir / "summary.csv", csv);
}

void run_convergence(const Config& cfg, int levels, const fs::path& out_dir) {
    if (levels < 2) throw ConfigError("convergence: levels must be >= 2");
    const ModelParams& params = cfg.params;

    nlohmann::json j;

    // Temporal order of the Hamiltonian sweep: fixed fine mesh in space,
    // dyadic refinement in time, quadratic-in-time manufactured profile.
    {
        std::vector<double> errors;
        const std::size_t nx = cfg.disc.nx;
        std::size_t nt = std::max<std::size_t>(4, cfg.disc.nt / 8);
        for (int k = 0; k < levels; ++k, nt *= 2) {
            const Grid grid = build_grid(params.L, params.T, nx, nt);
            errors.push_back(hjb_manufactured_error(params, grid, TimeShape::Quadratic));
        }
        j["hjb_manufactured"]["temporal"] = {{"errors", errors},
                                             {"orders", observed_orders(errors)}};
    }
    // Spatial order: linear-in-time profile (exact in time), dyadic in space.
    {
        std::vector<double> errors;
        std::size_t nx = std::max<std::size_t>(8, cfg.disc.nx / 4);
        const std::size_t nt = cfg.disc.nt;
        for (int k = 0; k < levels; ++k, nx *= 2) {
            const Grid grid = build_grid(params.L, params.T, nx, nt);
            errors.push_back(hjb_manufactured_error(params, grid, TimeShape::Linear));
        }
        j["hjb_manufactured"]["spatial"] = {{"errors", errors},
                                            {"orders", observed_orders(errors)}};
    }
    // Pure-diffusion eigenmode: dyadic in space with dt ~ dx^2.
    {
        std::vector<double> errors;
        std::size_t nx = std::max<std::size_t>(8, cfg.disc.nx / 4);
        std::size_t nt = std::max<std::size_t>(4, cfg.disc.nt / 4);
        for (int k = 0; k < levels; ++k, nx *= 2, nt *= 4) {
            const Grid grid = build_grid(params.L, params.T, nx, nt);
            errors.push_back(fp_eigenfunction_error(params, grid));
        }
        j["fp_eigenfunction"] = {{"errors", errors}, {"orders", observed_orders(errors)}};
    }
    // Identity residuals on converged runs under dyadic space-time refinement.
    {
        std::vector<double> energy_residuals, nonlocal_residuals;
        Discretization disc = cfg.disc;
        disc.nx = std::max<std::size_t>(8, cfg.disc.nx / 2);
        disc.nt = std::max<std::size_t>(4, cfg.disc.nt / 2);
        for (int k = 0; k < levels; ++k, disc.nx *= 2, disc.nt *= 2) {
            const Solution sol = continuation_solve(params, disc);
            if (!sol.converged)
                throw SolverError("convergence: solve did not converge at level " +
                                  std::to_string(k));
            energy_residuals.push_back(
                measured_value(check_energy(sol, params), "identity_residual"));
            nonlocal_residuals.push_back(
                measured_value(check_nonlocal(sol, params), "flux_identity_residual"));
        }
        j["energy_identity"] = {{"residuals", energy_residuals},
                                {"orders", observed_orders(energy_residuals)}};
        j["nonlocal_identity"] = {{"residuals", nonlocal_residuals},
                                  {"orders", observed_orders(nonlocal_residuals)}};
    }

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    write_text_file(out_dir / "orders.json", j.dump(2) + "\n");
}

} // namespace mfg
