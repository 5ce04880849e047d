#include "hh/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "hh/errors.hpp"

namespace hh {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorKind::Range, "Gauss-Legendre needs n >= 1");
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jac(k, k - 1) = jac(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  GaussLegendre rule;
  for (int i = 0; i < n; ++i) {
    rule.nodes.push_back(es.eigenvalues()(i));
    const double v = es.eigenvectors()(0, i);
    rule.weights.push_back(2.0 * v * v);
  }
  return rule;
}

namespace {

const GaussLegendre& rule16() {
  static const GaussLegendre rule = gauss_legendre(16);
  return rule;
}

double panel(const std::function<double(double)>& f, double a, double b) {
  const auto& rule = rule16();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return s * half;
}

double adapt(const std::function<double(double)>& f, double a, double b, double whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = panel(f, a, mid), right = panel(f, mid, b);
  if (depth <= 0 || std::abs(left + right - whole) <= tol * (1.0 + std::abs(left + right)))
    return left + right;
  return adapt(f, a, mid, left, tol, depth - 1) + adapt(f, mid, b, right, tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
  if (b <= a) return 0.0;
  return adapt(f, a, b, panel(f, a, b), tol, max_depth);
}

std::vector<double> geometric_breakpoints(double radius, int levels) {
  std::vector<double> pts{0.0};
  for (int j = 1; j <= levels; ++j) {
    const double b = 1.0 - std::ldexp(1.0, -j);
    if (b >= radius) break;
    pts.push_back(b);
  }
  pts.push_back(radius);
  return pts;
}

std::vector<double> integrate_disks(const std::function<double(double, double)>& f, const std::vector<double>& radii,
                                    int angular, double tol) {
  for (std::size_t i = 0; i < radii.size(); ++i)
    if (!(radii[i] > 0.0 && radii[i] <= 1.0) || (i > 0 && !(radii[i] > radii[i - 1])))
      throw Error(ErrorKind::Range, "radii must increase within (0, 1]");
  std::vector<double> thetas(static_cast<std::size_t>(angular));
  for (int j = 0; j < angular; ++j) thetas[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / angular;

  const auto radial = [&](double rho) {
    double s = 0.0;
    for (double t : thetas) s += f(rho, t);
    return s * rho * 2.0 * std::numbers::pi / angular;
  };

  std::vector<double> out;
  double acc = 0.0, from = 0.0;
  for (double radius : radii) {
    const auto bps = geometric_breakpoints(radius);
    // On the unit circle the last piece [1 - 2^-L, 1] may hold an integrable
    // singularity. Panel contributions there decay geometrically, so it is
    // replaced by the geometric tail of the two preceding panels.
    const bool to_circle = radius == 1.0 && bps.size() >= 4 && bps[bps.size() - 4] >= from;
    const std::size_t last = to_circle ? bps.size() - 2 : bps.size() - 1;
    double prev = 0.0, cur = 0.0;
    for (std::size_t k = 0; k < last; ++k) {
      const double a = std::max(bps[k], from), b = bps[k + 1];
      prev = cur;
      cur = b > a ? integrate_adaptive(radial, a, b, tol) : 0.0;
      acc += cur;
    }
    if (to_circle) {
      const double q = prev != 0.0 ? cur / prev : 0.0;
      if (q > 0.0 && q < 1.0) acc += cur * q / (1.0 - q);
    }
    from = radius;
    out.push_back(acc);
  }
  return out;
}

}  // namespace hh
