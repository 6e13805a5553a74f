#include "mfg/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mfg/errors.hpp"

namespace mfg {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string field_to_csv(const Field& field, const Grid& grid) {
    std::string out;
    out.reserve(field.rows() * (field.cols() + 1) * 20);
    out += "t";
    for (double x : grid.x) {
        out += ',';
        out += format_double(x);
    }
    out += '\n';
    for (std::size_t n = 0; n < field.rows(); ++n) {
        out += format_double(grid.t[n]);
        for (double v : field.row(n)) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

LoadedField read_field_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open field file '" + path.string() + "'");

    LoadedField lf;
    std::string line;
    if (!std::getline(in, line))
        throw ConfigError("field file '" + path.string() + "' is empty");
    {
        std::stringstream header(line);
        std::string cell;
        std::getline(header, cell, ','); // "t" label
        while (std::getline(header, cell, ','))
            lf.x.push_back(std::stod(cell));
    }
    if (lf.x.size() < 2)
        throw ConfigError("field file '" + path.string() + "': too few x columns");

    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ','))
            row.push_back(std::stod(cell));
        if (row.size() != lf.x.size() + 1)
            throw ConfigError("field file '" + path.string() + "': row " +
                              std::to_string(rows.size() + 2) + " has " +
                              std::to_string(row.size()) + " cells, expected " +
                              std::to_string(lf.x.size() + 1));
        lf.t.push_back(row.front());
        rows.push_back(std::move(row));
    }
    if (rows.size() < 2)
        throw ConfigError("field file '" + path.string() + "': too few time rows");

    lf.field = Field(rows.size(), lf.x.size());
    for (std::size_t n = 0; n < rows.size(); ++n)
        for (std::size_t i = 0; i < lf.x.size(); ++i)
            lf.field(n, i) = rows[n][i + 1];
    return lf;
}

std::string paths_to_csv(const Solution& sol) {
    std::string out = "t,eta,Q,f,pbar\n";
    for (std::size_t n = 0; n < sol.eta.size(); ++n) {
        out += format_double(sol.grid.t[n]);
        out += ',';
        out += format_double(sol.eta[n]);
        out += ',';
        out += format_double(sol.Q[n]);
        out += ',';
        out += format_double(sol.f[n]);
        out += ',';
        if (!std::isnan(sol.pbar[n])) out += format_double(sol.pbar[n]);
        out += '\n';
    }
    return out;
}

nlohmann::json report_to_json(const Solution& sol, const AuditReport& report) {
    nlohmann::json j;
    j["converged"] = sol.converged;
    j["iterations"] = sol.iterations;
    j["tau_final"] = sol.tau_final;
    j["residual_history"] = sol.residual_history;
    j["grid"] = {{"nx", sol.grid.nx}, {"nt", sol.grid.nt},
                 {"dx", sol.grid.dx}, {"dt", sol.grid.dt}};

    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["tolerance"] = c.tolerance;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        for (const auto& [k, v] : c.measured) jc["measured"][k] = v;
        checks.push_back(std::move(jc));
    }
    j["audit"] = {{"overall_pass", report.overall_pass}, {"checks", std::move(checks)}};
    return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw ConfigError("failed writing '" + path.string() + "'");
}

} // namespace mfg
