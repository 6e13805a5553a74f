#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mfg/audit.hpp"
#include "mfg/config.hpp"
#include "mfg/coupling.hpp"

namespace mfg {

/// Exit statuses shared by the library entry points and the CLI.
enum ExitStatus : int {
    kExitOk = 0,            ///< converged and audit passed
    kExitError = 1,         ///< configuration or I/O error
    kExitNotConverged = 2,  ///< fixed point did not converge
    kExitAuditFailed = 3,   ///< converged but an audit check failed
};

struct SolveOutcome {
    Solution solution;
    AuditReport audit;
    int exit_status = kExitOk;
};

/// continuation_solve + audit_all, then writes u.csv, m.csv, paths.csv and
/// report.json into out_dir. All outputs are rendered before the first byte
/// is written, and partial outputs are removed on failure.
SolveOutcome run_solve(const Config& cfg, const std::filesystem::path& out_dir);

/// Audits an externally supplied field pair against the configured model.
AuditReport run_audit(const Config& cfg, const std::filesystem::path& u_csv,
                      const std::filesystem::path& m_csv);

/// One independent solve per value of `param` ("epsilon" or "sigma");
/// writes summary.csv. Rows for invalid values record the rejection and the
/// sweep continues. With `with_uniqueness`, each row also reports the
/// two-start uniqueness gap in m.
void run_sweep(const Config& cfg, const std::string& param,
               const std::vector<double>& values,
               const std::filesystem::path& out_dir, bool with_uniqueness = false);

/// Dyadic-refinement study; writes orders.json with observed orders for the
/// manufactured Hamiltonian sweep, the pure-diffusion eigenmode, and the
/// energy / boundary-flux identity residuals. levels >= 2.
void run_convergence(const Config& cfg, int levels,
                     const std::filesystem::path& out_dir);

} // namespace mfg
