#include "mfg/params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "mfg/calculus.hpp"
#include "mfg/errors.hpp"

namespace mfg {

Profile Profile::quartic_bump() {
    Profile p;
    p.name_ = "quartic-bump";
    p.fn_ = [](double x, double L) {
        const double s = x * (L - x);
        return 30.0 * s * s / (L * L * L * L * L);
    };
    return p;
}

Profile Profile::sine_squared() {
    Profile p;
    p.name_ = "sine-squared";
    p.fn_ = [](double x, double L) {
        const double s = std::sin(std::numbers::pi * x / (2.0 * L));
        return 0.5 * s * s;
    };
    return p;
}

Profile Profile::zero() {
    Profile p;
    p.name_ = "zero";
    p.fn_ = [](double, double) { return 0.0; };
    return p;
}

Profile Profile::from_samples(std::vector<double> values, std::string name) {
    if (values.size() < 2)
        throw ConfigError("profile '" + name + "': need at least 2 samples");
    Profile p;
    p.name_ = std::move(name);
    p.samples_ = std::move(values);
    return p;
}

Profile Profile::from_function(std::function<double(double, double)> fn, std::string name) {
    Profile p;
    p.name_ = std::move(name);
    p.fn_ = std::move(fn);
    return p;
}

std::vector<double> Profile::sample(const Grid& grid) const {
    std::vector<double> out(grid.nx + 1, 0.0);
    if (fn_) {
        for (std::size_t i = 0; i <= grid.nx; ++i)
            out[i] = fn_(grid.x[i], grid.L);
        return out;
    }
    if (samples_.empty()) return out;
    if (samples_.size() == grid.nx + 1) return samples_;
    // Linear interpolation from the sampled mesh onto the requested grid.
    const std::size_t m = samples_.size() - 1;
    for (std::size_t i = 0; i <= grid.nx; ++i) {
        const double s = grid.x[i] / grid.L * static_cast<double>(m);
        const std::size_t j = std::min(static_cast<std::size_t>(s), m - 1);
        const double w = s - static_cast<double>(j);
        out[i] = (1.0 - w) * samples_[j] + w * samples_[j + 1];
    }
    return out;
}

void validate(const ModelParams& params) {
    if (!(params.sigma > 0.0))
        throw ConfigError("model: sigma must be positive (parabolic regime), got " +
                          std::to_string(params.sigma));
    if (!(params.L > 0.0)) throw ConfigError("model: L must be positive");
    if (!(params.T > 0.0)) throw ConfigError("model: T must be positive");
    if (params.epsilon < 0.0) throw ConfigError("model: epsilon must be nonnegative");
    if (params.r < 0.0) throw ConfigError("model: r must be nonnegative");
}

void validate(const Discretization& disc) {
    if (disc.nx < 4) throw ConfigError("discretization: nx must be >= 4");
    if (disc.nt < 2) throw ConfigError("discretization: nt must be >= 2");
    if (!(disc.newton_tol > 0.0)) throw ConfigError("discretization: newton_tol must be positive");
    if (disc.newton_max < 1) throw ConfigError("discretization: newton_max must be positive");
    if (!(disc.picard_tol > 0.0)) throw ConfigError("discretization: picard_tol must be positive");
    if (disc.picard_max < 1) throw ConfigError("discretization: picard_max must be positive");
    if (!(disc.theta > 0.0 && disc.theta <= 1.0))
        throw ConfigError("discretization: theta must lie in (0,1]");
    if (disc.continuation.empty())
        throw ConfigError("discretization: continuation schedule must not be empty");
    for (double tau : disc.continuation)
        if (tau < 0.0 || tau > 1.0)
            throw ConfigError("discretization: continuation values must lie in [0,1]");
    if (!std::is_sorted(disc.continuation.begin(), disc.continuation.end()))
        throw ConfigError("discretization: continuation schedule must be nondecreasing");
    if (disc.continuation.back() != 1.0)
        throw ConfigError("discretization: continuation schedule must end at 1");
}

Grid build_grid(const ModelParams& params, const Discretization& disc) {
    validate(params);
    validate(disc);
    return build_grid(params.L, params.T, disc.nx, disc.nt);
}

namespace {

double profile_scale(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s = std::max(s, std::abs(x));
    return s;
}

} // namespace

std::vector<double> initial_density(const ModelParams& params, const Grid& grid) {
    std::vector<double> m0 = params.m0.sample(grid);
    const double scale = profile_scale(m0);
    const double tol = 1e-8 * (1.0 + scale);
    for (std::size_t i = 0; i < m0.size(); ++i)
        if (m0[i] < -tol)
            throw ConfigError("m0: negative value at node " + std::to_string(i));
    if (std::abs(m0.front()) > tol) throw ConfigError("m0: m0(0) must be 0");
    if (std::abs(m0.back()) > tol) throw ConfigError("m0: m0(L) must be 0");
    const double slope_tol = 10.0 * grid.dx * (1.0 + scale);
    if (std::abs(right_derivative(m0, grid.dx)) > slope_tol)
        throw ConfigError("m0: discrete m0'(L) must vanish within grid tolerance");
    const double mass = trapezoid(m0, grid.dx);
    // Quadrature alone perturbs the mass of a smooth profile by O(dx^2), so
    // the gate scales with the grid; the rescale below restores exactness.
    const double mass_tol = std::max(tol, 10.0 * grid.dx * grid.dx * (1.0 + scale));
    if (std::abs(mass - 1.0) > mass_tol)
        throw ConfigError("m0: trapezoid integral is " + std::to_string(mass) +
                          ", must equal 1");
    // Rescale so the discrete mass is exactly 1; this is what the mass audit
    // measures, and the closed-form built-ins are only O(dx^4) away from it.
    for (double& v : m0) v /= mass;
    for (double& v : m0)
        if (v < 0.0) v = 0.0;
    return m0;
}

std::vector<double> terminal_value(const ModelParams& params, const Grid& grid) {
    std::vector<double> uT = params.uT.sample(grid);
    const double scale = profile_scale(uT);
    const double tol = 1e-8 * (1.0 + scale);
    if (std::abs(uT.front()) > tol) throw ConfigError("uT: uT(0) must be 0");
    for (std::size_t i = 0; i < uT.size(); ++i)
        if (uT[i] < -tol)
            throw ConfigError("uT: negative value at node " + std::to_string(i));
    for (std::size_t i = 0; i + 1 < uT.size(); ++i)
        if (uT[i + 1] < uT[i] - tol)
            throw ConfigError("uT: must be nondecreasing, violated at node " +
                              std::to_string(i + 1));
    const double slope_tol = 10.0 * grid.dx * (1.0 + scale);
    if (std::abs(right_derivative(uT, grid.dx)) > slope_tol)
        throw ConfigError("uT: discrete uT'(L) must vanish within grid tolerance");
    uT.front() = 0.0;
    return uT;
}

} // namespace mfg
