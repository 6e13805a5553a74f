#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "mfg/audit.hpp"
#include "mfg/coupling.hpp"
#include "mfg/field.hpp"
#include "mfg/grid.hpp"

namespace mfg {

/// Shortest round-tripping decimal form of a double (up to 17 significant
/// digits).
std::string format_double(double v);

/// Field CSV layout: header row "t" followed by the x-coordinates; one row
/// per time node, first column the t-coordinate. Values round-trip
/// bit-for-bit through read_field_csv.
std::string field_to_csv(const Field& field, const Grid& grid);

struct LoadedField {
    Field field;
    std::vector<double> x;
    std::vector<double> t;
};

LoadedField read_field_csv(const std::filesystem::path& path);

/// paths CSV: t, eta, Q, f, pbar (pbar column empty where absent).
std::string paths_to_csv(const Solution& sol);

nlohmann::json report_to_json(const Solution& sol, const AuditReport& report);

/// Writes a whole string to a file; throws ConfigError on I/O failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace mfg
