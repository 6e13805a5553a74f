#include <doctest.h>

#include <cmath>
#include <vector>

#include "mfg/errors.hpp"
#include "mfg/hjb.hpp"
#include "mfg/verification.hpp"

using namespace mfg;

namespace {

ModelParams zero_terminal_params() {
    ModelParams p;
    p.uT = Profile::zero();
    return p;
}

} // namespace

TEST_CASE("zero data stays exactly zero through the backward sweep") {
    const ModelParams params = zero_terminal_params();
    const Grid grid = build_grid(params.L, params.T, 20, 10);
    const ScalarPath f(grid.nt + 1, 0.0);
    const Field u = solve_hjb(f, params, grid);
    for (double v : u.data()) CHECK(v == 0.0);
}

TEST_CASE("one tiny step from zero produces u = dt/4 away from the exit") {
    // With u_next = 0 and f = 1 the step equation is -v/dt + O(1)-terms + 1/4 = 0,
    // so v = dt/4 + O(dt^2) except at the pinned x = 0 node.
    const ModelParams params;
    const Grid grid = build_grid(1.0, 1e-4, 50, 100); // dt = 1e-6
    const std::vector<double> u_next(grid.nx + 1, 0.0);
    const std::vector<double> v = hjb_step(u_next, 1.0, params, grid);
    CHECK(v[0] == 0.0);
    for (std::size_t i = 1; i <= grid.nx; ++i)
        CHECK(v[i] == doctest::Approx(grid.dt / 4.0).epsilon(1e-3));
}

TEST_CASE("manufactured solution: sup error within the scheme bound") {
    const ModelParams params;
    const Grid grid = build_grid(params.L, params.T, 100, 100);
    const ManufacturedCase mc = manufactured_hjb(params, grid, TimeShape::Linear);
    const Field u = solve_hjb(mc.f, params, grid, HjbOptions{}, &mc.source, &mc.terminal);
    double scale = 0.0;
    for (double v : mc.exact.data()) scale = std::max(scale, std::abs(v));
    CHECK(max_error(u, mc.exact) <= 5.0 * (grid.dt + grid.dx * grid.dx) * scale);
}

TEST_CASE("manufactured solution: spatial order at least 1.8") {
    // Linear-in-time profile is exact under backward Euler, so refinement in
    // x alone exposes the spatial order.
    const ModelParams params;
    std::vector<double> errors;
    for (std::size_t nx : {25u, 50u, 100u}) {
        const Grid grid = build_grid(params.L, params.T, nx, 100);
        const ManufacturedCase mc = manufactured_hjb(params, grid, TimeShape::Linear);
        const Field u = solve_hjb(mc.f, params, grid, HjbOptions{}, &mc.source, &mc.terminal);
        errors.push_back(max_error(u, mc.exact));
    }
    CHECK(std::log2(errors[0] / errors[1]) >= 1.8);
    CHECK(std::log2(errors[1] / errors[2]) >= 1.8);
}

TEST_CASE("manufactured solution: temporal order at least 0.9") {
    const ModelParams params;
    std::vector<double> errors;
    for (std::size_t nt : {25u, 50u, 100u}) {
        const Grid grid = build_grid(params.L, params.T, 200, nt);
        const ManufacturedCase mc = manufactured_hjb(params, grid, TimeShape::Quadratic);
        const Field u = solve_hjb(mc.f, params, grid, HjbOptions{}, &mc.source, &mc.terminal);
        errors.push_back(max_error(u, mc.exact));
    }
    CHECK(std::log2(errors[0] / errors[1]) >= 0.9);
    CHECK(std::log2(errors[1] / errors[2]) >= 0.9);
}

TEST_CASE("value stays nonnegative for nonnegative terminal data") {
    const ModelParams params;
    const Grid grid = build_grid(params.L, params.T, 60, 60);
    const ScalarPath f(grid.nt + 1, 1.0);
    const Field u = solve_hjb(f, params, grid);
    for (double v : u.data()) CHECK(v >= -1e-12);
}

TEST_CASE("forced upwind directions agree at zero drift") {
    // f = 0 and zero terminal data put the solution at u = 0 where the drift
    // vanishes, so the backward and forward stencils must coincide exactly.
    const ModelParams params = zero_terminal_params();
    const Grid grid = build_grid(params.L, params.T, 30, 10);
    const ScalarPath f(grid.nt + 1, 0.0);
    HjbOptions back, fwd;
    back.gradient = HjbGradient::Backward;
    fwd.gradient = HjbGradient::Forward;
    const Field ub = solve_hjb(f, params, grid, back);
    const Field uf = solve_hjb(f, params, grid, fwd);
    CHECK(ub == uf);
}

TEST_CASE("newton reports failure with the residual and time node") {
    const ModelParams params;
    const Grid grid = build_grid(params.L, params.T, 20, 2);
    const ScalarPath f(grid.nt + 1, 5.0);
    HjbOptions opts;
    opts.newton_max = 1;
    bool threw = false;
    try {
        solve_hjb(f, params, grid, opts);
    } catch (const SolverError& e) {
        threw = true;
        CHECK(e.residual() > 0.0);
        CHECK(e.time_node() >= 0);
    }
    CHECK(threw);
}
