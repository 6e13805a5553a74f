#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "mfg/coupling.hpp"

using namespace mfg;

namespace {

Discretization coarse_disc() {
    Discretization d;
    d.nx = 50;
    d.nt = 50;
    return d;
}

} // namespace

TEST_CASE("monopoly decouples: two passes, machine-precision intercept") {
    ModelParams params;
    params.epsilon = 0.0;
    const Discretization disc = coarse_disc();
    const ScalarPath q0(disc.nt + 1, 0.0);
    const Solution sol = picard_solve(params, disc, q0, 1.0);
    CHECK(sol.converged);
    CHECK(sol.iterations <= 2);
    CHECK(sol.residual_history.back() <= 1e-10);
    for (double f : sol.f) CHECK(f == 1.0);
}

TEST_CASE("tau = 0 yields the trivial solution") {
    const ModelParams params;
    const Discretization disc = coarse_disc();
    const ScalarPath q0(disc.nt + 1, 0.0);
    const Solution sol = picard_solve(params, disc, q0, 0.0);
    CHECK(sol.converged);
    CHECK(sol.tau_final == 0.0);
    for (double v : sol.u.data()) CHECK(v == 0.0);
    for (double v : sol.m.data()) CHECK(v == 0.0);
    for (double v : sol.eta) CHECK(v == 0.0);
    for (double v : sol.Q) CHECK(v == 0.0);
}

TEST_CASE("repeated solves are bit-identical") {
    const ModelParams params;
    const Discretization disc = coarse_disc();
    const ScalarPath q0(disc.nt + 1, 0.0);
    const Solution a = picard_solve(params, disc, q0, 1.0);
    const Solution b = picard_solve(params, disc, q0, 1.0);
    CHECK(a.u == b.u);
    CHECK(a.m == b.m);
    CHECK(a.Q == b.Q);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("trivial continuation schedule equals a direct solve") {
    const ModelParams params;
    const Discretization disc = coarse_disc();
    const ScalarPath q0(disc.nt + 1, 0.0);
    const Solution direct = picard_solve(params, disc, q0, 1.0);
    const Solution staged = continuation_solve(params, disc);
    CHECK(staged.converged);
    CHECK(staged.tau_final == 1.0);
    CHECK(staged.u == direct.u);
    CHECK(staged.m == direct.m);
}

TEST_CASE("staged continuation lands on the same fixed point") {
    const ModelParams params;
    Discretization disc = coarse_disc();
    const Solution direct = continuation_solve(params, disc);
    disc.continuation = {0.0, 0.5, 1.0};
    const Solution staged = continuation_solve(params, disc);
    REQUIRE(staged.converged);
    CHECK(staged.tau_final == 1.0);
    for (std::size_t n = 0; n <= disc.nt; ++n) {
        CHECK(std::abs(staged.Q[n] - direct.Q[n]) <= 1e-5);
        CHECK(std::abs(staged.eta[n] - direct.eta[n]) <= 1e-5);
    }
}

TEST_CASE("convergence failure is reported, not thrown") {
    const ModelParams params;
    Discretization disc = coarse_disc();
    disc.picard_max = 1;
    const ScalarPath q0(disc.nt + 1, 0.0);
    const Solution sol = picard_solve(params, disc, q0, 1.0);
    CHECK_FALSE(sol.converged);
    CHECK(sol.iterations == 1);
    CHECK_FALSE(sol.residual_history.empty());
}

TEST_CASE("weak competition: distinct starts land on the same solution") {
    ModelParams params;
    params.epsilon = 0.1;
    const Discretization disc = coarse_disc();
    const ScalarPath qa(disc.nt + 1, 0.0), qb(disc.nt + 1, 1.0);
    const UniquenessReport rep = uniqueness_experiment(params, disc, qa, qb);
    CHECK(rep.converged_a);
    CHECK(rep.converged_b);
    CHECK(rep.gap_u <= 1e-6);
    CHECK(rep.gap_m <= 1e-6);
    CHECK(rep.gap_q <= 1e-6);
}
