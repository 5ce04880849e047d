#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hh/symbol.hpp"

namespace hh {

enum class Verdict { Converging, Diverging, Inconclusive };
std::string_view to_string(Verdict v);

/// Trend classification of partial seminorm values. With increments
/// d1, d2 between the last three partials: converging when d2 <= d1 / 2
/// (or both vanish), diverging when d2 >= 0.9 d1, inconclusive otherwise
/// and whenever fewer than three partials exist.
Verdict classify_trend(const std::vector<double>& partials);

struct BesovReport {
  double p = 2.0;
  double seminorm_partial = 0.0;
  std::vector<double> trend;
  /// Radii (basis "radius") or truncation bands (basis "band") of the trend.
  std::vector<double> abscissae;
  std::string basis = "radius";
  Verdict verdict = Verdict::Inconclusive;
  /// Which rule produced the verdict.
  std::string rule;
};

/// Partial integrals of (1-|z|^2)^{p-2} |F'|^p (|F''| for p = 1) over the
/// disks |z| < radii[i], classified by classify_trend.
BesovReport analytic_besov_seminorm(const FourierSymbol& f, double p, const std::vector<double>& radii);

/// The same seminorm on the full disk for the truncations of f to the
/// given increasing bands.
BesovReport besov_band_trend(const FourierSymbol& f, double p, const std::vector<int>& bands);

struct BesovMembership {
  BesovReport f_report;
  BesovReport g_report;
};

/// Runs the seminorm on both halves of analytic_split(phi). Exact
/// trigonometric polynomials are reported converging (polynomials lie in
/// every A_p); truncations of infinite series are judged by the trend over
/// doubling bands.
BesovMembership besov_membership(const FourierSymbol& phi, double p);

enum class Sufficiency { Met, NotMet, Inconclusive };
std::string_view to_string(Sufficiency s);

struct SufficiencyReport {
  Sufficiency verdict = Sufficiency::Inconclusive;
  BesovMembership real_part;
  BesovMembership imag_part;
  bool imag_bounded_only = false;  // the (B_1, L^inf) variant
};

/// Re phi in B_p and Im phi in B_q with 1/p + 1/q = 1, or p = 1 with
/// q = +inf for the (B_1, L^inf) variant. ConjugateError otherwise.
SufficiencyReport almost_normal_sufficient(const FourierSymbol& phi, double p, double q);

struct JacobianIntegrability {
  std::vector<double> radii;
  std::vector<double> partials;  // integral of |J(Phi)| over |z| < radius
  double f_energy = 0.0;         // integral of |F'|^2 over the largest disk
  double g_energy = 0.0;         // integral of |G'|^2 over the largest disk
  double bound = 0.0;            // 2 sqrt(f_energy g_energy)
  bool bound_applicable = false; // both halves nonzero
  bool holds = false;            // partials.back() <= bound + tolerance
};

JacobianIntegrability jacobian_integrability(const FourierSymbol& phi, const std::vector<double>& radii);

/// Schatten p-norm of the N x N Hankel block.
double hankel_schatten_probe(const FourierSymbol& phi, double p, int n);

}  // namespace hh
