#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mfg/grid.hpp"

namespace mfg {

/// A space profile on [0,L], either a named closed form or a sampled vector.
///
/// Closed-form profiles are evaluated exactly at the grid nodes; sampled
/// profiles are interpolated linearly when the requesting grid does not
/// match the sample count.
class Profile {
public:
    Profile() = default;

    /// m0 built-in: 30 x^2 (L-x)^2 / L^5. Unit integral in closed form,
    /// vanishes with zero slope at x = L, vanishes at x = 0.
    static Profile quartic_bump();

    /// uT built-in: 0.5 sin^2(pi x / (2L)). Nondecreasing, flat at x = L.
    static Profile sine_squared();

    static Profile zero();

    static Profile from_samples(std::vector<double> values, std::string name = "samples");
    static Profile from_function(std::function<double(double, double)> fn,
                                 std::string name = "function"); // fn(x, L)

    std::vector<double> sample(const Grid& grid) const;
    const std::string& name() const { return name_; }

private:
    std::string name_ = "zero";
    std::function<double(double, double)> fn_;
    std::vector<double> samples_;
};

/// PDE data: competition parameter, diffusion, discount, domain, horizon,
/// and the initial-density / terminal-value profiles.
struct ModelParams {
    double epsilon = 0.3;
    double sigma = 0.5;
    double r = 0.1;
    double L = 1.0;
    double T = 1.0;
    Profile m0 = Profile::quartic_bump();
    Profile uT = Profile::sine_squared();
};

/// Grid sizes, inner/outer solver tolerances, damping and the continuation
/// schedule (tau values, nondecreasing, ending at 1).
struct Discretization {
    std::size_t nx = 200;
    std::size_t nt = 400;
    double newton_tol = 1e-11;
    int newton_max = 50;
    double picard_tol = 1e-8;
    int picard_max = 500;
    double theta = 0.5;
    std::vector<double> continuation{1.0};
};

/// Scalar invariants (sigma > 0, L > 0, T > 0, epsilon >= 0, r >= 0).
/// Throws ConfigError naming the offending field.
void validate(const ModelParams& params);

/// Size/tolerance invariants and the continuation-schedule shape.
void validate(const Discretization& disc);

Grid build_grid(const ModelParams& params, const Discretization& disc);

/// Samples params.m0 on the grid, validates the density invariants
/// (nonnegativity, endpoint values, flat right end, unit integral within
/// 1e-8*(1+magnitude)) and rescales so the discrete trapezoid integral is
/// exactly 1.
std::vector<double> initial_density(const ModelParams& params, const Grid& grid);

/// Samples params.uT on the grid and validates the terminal-value
/// invariants (nonnegative, nondecreasing, zero at x = 0, flat right end).
std::vector<double> terminal_value(const ModelParams& params, const Grid& grid);

} // namespace mfg
