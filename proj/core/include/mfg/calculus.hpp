#pragma once

#include <span>
#include <vector>

namespace mfg {

/// Trapezoid rule over a uniformly sampled profile. Exact for affine data.
/// Requires at least two samples.
double trapezoid(std::span<const double> profile, double dx);

/// First derivative on a uniform grid: central differences at interior
/// nodes, second-order one-sided stencils at both endpoints. Exact for
/// quadratics. Requires at least three samples.
std::vector<double> gradient(std::span<const double> profile, double dx);

/// Second-order one-sided first derivative at the first node.
double left_derivative(std::span<const double> profile, double dx);

/// Second-order one-sided first derivative at the last node.
double right_derivative(std::span<const double> profile, double dx);

/// Second-order one-sided second derivative at the last node.
/// Requires at least four samples.
double right_second_derivative(std::span<const double> profile, double dx);

} // namespace mfg
