#include "mfg/calculus.hpp"

#include <cassert>
#include <cstddef>

namespace mfg {

double trapezoid(std::span<const double> profile, double dx) {
    assert(profile.size() >= 2);
    double sum = 0.5 * (profile.front() + profile.back());
    for (std::size_t i = 1; i + 1 < profile.size(); ++i)
        sum += profile[i];
    return sum * dx;
}

std::vector<double> gradient(std::span<const double> profile, double dx) {
    assert(profile.size() >= 3);
    const std::size_t n = profile.size();
    std::vector<double> g(n);
    g[0] = (-3.0 * profile[0] + 4.0 * profile[1] - profile[2]) / (2.0 * dx);
    for (std::size_t i = 1; i + 1 < n; ++i)
        g[i] = (profile[i + 1] - profile[i - 1]) / (2.0 * dx);
    g[n - 1] = (3.0 * profile[n - 1] - 4.0 * profile[n - 2] + profile[n - 3]) / (2.0 * dx);
    return g;
}

double left_derivative(std::span<const double> profile, double dx) {
    assert(profile.size() >= 3);
    return (-3.0 * profile[0] + 4.0 * profile[1] - profile[2]) / (2.0 * dx);
}

double right_derivative(std::span<const double> profile, double dx) {
    assert(profile.size() >= 3);
    const std::size_t n = profile.size();
    return (3.0 * profile[n - 1] - 4.0 * profile[n - 2] + profile[n - 3]) / (2.0 * dx);
}

double right_second_derivative(std::span<const double> profile, double dx) {
    assert(profile.size() >= 4);
    const std::size_t n = profile.size();
    return (2.0 * profile[n - 1] - 5.0 * profile[n - 2] + 4.0 * profile[n - 3] -
            profile[n - 4]) /
           (dx * dx);
}

} // namespace mfg
