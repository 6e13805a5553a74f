#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "mfg/calculus.hpp"
#include "mfg/fp.hpp"
#include "mfg/model.hpp"
#include "mfg/verification.hpp"

using namespace mfg;

namespace {

// splitmix64, so the property trials are reproducible across platforms
struct Rng {
    std::uint64_t state;
    double uniform(double lo, double hi) {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        return lo + (hi - lo) * (static_cast<double>(z >> 11) * 0x1.0p-53);
    }
};

} // namespace

TEST_CASE("zero initial mass stays exactly zero") {
    ModelParams params;
    params.m0 = Profile::zero();
    const Grid grid = build_grid(params.L, params.T, 20, 10);
    const Field u(grid.nt + 1, grid.nx + 1);
    const ScalarPath f(grid.nt + 1, 1.0);
    const std::vector<double> m0(grid.nx + 1, 0.0);
    const Field m = solve_fp(u, f, params, grid, 1.0, &m0);
    for (double v : m.data()) CHECK(v == 0.0);
}

TEST_CASE("pure-diffusion eigenmode: decay matches the closed form") {
    const ModelParams params; // sigma = 0.5, L = 1
    const Grid grid = build_grid(params.L, params.T, 64, 512);
    const Field exact = fp_eigenfunction(params, grid);
    const std::vector<double> m0(exact.row(0).begin(), exact.row(0).end());
    const Field u(grid.nt + 1, grid.nx + 1);
    const ScalarPath f(grid.nt + 1, 0.0);
    const Field m = solve_fp(u, f, params, grid, 1.0, &m0);
    CHECK(max_error(m, exact) <= 5.0 * (grid.dt + grid.dx * grid.dx));

    // spot value against an independently computed reference:
    // exp(-0.25*pi^2/8 * 0.5) * sin(pi/4) at (t,x) = (0.5, 0.5)
    CHECK(exact(grid.nt / 2, grid.nx / 2) ==
          doctest::Approx(0.60605401753005206).epsilon(1e-14));
}

TEST_CASE("pure-diffusion eigenmode: spatial order at least 1.8") {
    const ModelParams params;
    std::vector<double> errors;
    std::size_t nx = 16, nt = 64; // dt refined fourfold so dx^2 dominates
    for (int level = 0; level < 3; ++level, nx *= 2, nt *= 4) {
        const Grid grid = build_grid(params.L, params.T, nx, nt);
        const Field exact = fp_eigenfunction(params, grid);
        const std::vector<double> m0(exact.row(0).begin(), exact.row(0).end());
        const Field u(grid.nt + 1, grid.nx + 1);
        const ScalarPath f(grid.nt + 1, 0.0);
        errors.push_back(max_error(solve_fp(u, f, params, grid, 1.0, &m0), exact));
    }
    CHECK(std::log2(errors[0] / errors[1]) >= 1.8);
    CHECK(std::log2(errors[1] / errors[2]) >= 1.8);
}

TEST_CASE("discrete mass balance holds to machine precision") {
    // eta_{n+1} - eta_n = dt * exit flux, with the flux never positive.
    const ModelParams params;
    const Grid grid = build_grid(params.L, params.T, 50, 80);
    Field u(grid.nt + 1, grid.nx + 1);
    for (std::size_t n = 0; n <= grid.nt; ++n)
        for (std::size_t i = 0; i <= grid.nx; ++i)
            u(n, i) = 0.3 * (1.0 + grid.t[n]) * std::sin(0.5 * M_PI * grid.x[i] / grid.L);
    const ScalarPath f(grid.nt + 1, 1.0);
    const Field m = solve_fp(u, f, params, grid);

    for (std::size_t n = 0; n < grid.nt; ++n) {
        const std::vector<double> ux = gradient(u.row(n + 1), grid.dx);
        std::vector<double> g(grid.nx + 1);
        for (std::size_t i = 0; i <= grid.nx; ++i) g[i] = drift_G(f[n + 1], ux[i]);
        const double flux = fp_exit_flux(m.row(n + 1), g, params, grid);
        const double d_eta = trapezoid(m.row(n + 1), grid.dx) - trapezoid(m.row(n), grid.dx);
        CHECK(flux <= 0.0);
        CHECK(d_eta == doctest::Approx(grid.dt * flux).epsilon(1e-12));
    }
}

TEST_CASE("density stays nonnegative under arbitrary drifts") {
    const ModelParams params;
    const Grid grid = build_grid(params.L, params.T, 40, 20);
    Rng rng{42};
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> m(grid.nx + 1);
        for (auto& v : m) v = rng.uniform(0.0, 2.0);
        m[0] = 0.0;
        for (std::size_t n = 0; n < grid.nt; ++n) {
            std::vector<double> g(grid.nx + 1);
            for (auto& v : g) v = rng.uniform(-10.0, 10.0);
            m = fp_step(m, g, params, grid);
            for (double v : m) CHECK(v >= 0.0);
        }
    }
}
