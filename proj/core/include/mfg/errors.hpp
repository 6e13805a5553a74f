#pragma once

#include <stdexcept>
#include <string>

namespace mfg {

/// Invalid configuration or model data (bad grid sizes, violated data
/// invariants, malformed config files).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Failure inside a numerical solve (Newton stall, singular tridiagonal row).
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what, double residual = 0.0,
                         long time_node = -1)
        : std::runtime_error(what), residual_(residual), time_node_(time_node) {}

    double residual() const { return residual_; }
    long time_node() const { return time_node_; }

private:
    double residual_;
    long time_node_;
};

} // namespace mfg
