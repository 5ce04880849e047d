#pragma once

#include <functional>
#include <vector>

namespace hh {

struct GaussLegendre {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (Golub-Welsch).
GaussLegendre gauss_legendre(int n);

/// Adaptive Gauss-Legendre on [a, b]: a panel is accepted when the 16-point
/// rule agrees with the sum over its two halves to tol * (1 + |value|).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol = 1e-12,
                          int max_depth = 20);

/// Radial breakpoints 0, 1/2, 3/4, ..., clipped to `radius`, refining
/// geometrically toward the unit circle.
std::vector<double> geometric_breakpoints(double radius, int levels = 30);

/// Integrals of F(rho, theta) over the disks |z| < radii[i] (radii increasing),
/// with `angular` equispaced trapezoid nodes and adaptive radial panels.
/// Integrands may blow up integrably at rho = 1: the piece next to the circle
/// is extrapolated from the geometric decay of the preceding panels.
std::vector<double> integrate_disks(const std::function<double(double, double)>& f, const std::vector<double>& radii,
                                    int angular, double tol = 1e-12);

}  // namespace hh
