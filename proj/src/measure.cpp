#include "hh/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hh/errors.hpp"

namespace hh {

namespace {

const cplx kInvTwoPiI = 1.0 / cplx(0.0, 2.0 * std::numbers::pi);

FourierSymbol without_tail(const FourierSymbol& phi) { return FourierSymbol(phi.coefficients()); }

}  // namespace

std::optional<cplx> MeasureDensity::value(int i, int j) const {
  const auto m = multiplicity.value(i, j);
  if (!m) return std::nullopt;
  return static_cast<double>(*m) * kInvTwoPiI;
}

cplx MeasureDensity::raw_value(int i, int j) const {
  return static_cast<double>(multiplicity.values[multiplicity.index(i, j)]) * kInvTwoPiI;
}

MeasureDensity hh_density(const FourierSymbol& phi, double r, const GridSpec& grid) {
  MeasureDensity d;
  d.multiplicity = multiplicity_grid(phi, r, grid);
  d.r_used = r;
  d.tail_note = d.multiplicity.tail_bound;
  return d;
}

GridSpec default_box(const FourierSymbol& phi, int n) { return GridSpec::square(phi.l1_norm() + 0.5, n); }

TraceFormulaReport trace_formula_check(const FourierSymbol& phi, const BivariatePolynomial& p,
                                       const BivariatePolynomial& q, const GridSpec& grid, double r) {
  if (!phi.exact()) throw Error(ErrorKind::Tail, "trace formula check needs an exact finite-band symbol");
  const double radius = phi.l1_norm();
  if (grid.x0 > -radius || grid.x1 < radius || grid.y0 > -radius || grid.y1 < radius)
    throw Error(ErrorKind::Range, "grid box must contain the disk of radius sum|c(k)|");

  const FourierSymbol s = curve_symbol(phi, r);
  TraceFormulaReport rep;
  const auto trace = commutator_trace(s, p, q);
  rep.lhs = trace.value;
  rep.truncation = trace.truncation;

  const BivariatePolynomial j = jacobian_bracket(p, q);
  const MultiplicityGrid m = multiplicity_grid(phi, r, grid);
  const GridIntegral coarse = integrate(m, j);
  const GridIntegral fine = integrate(multiplicity_grid(phi, r, grid.refined()), j);

  rep.rhs = coarse.value * kInvTwoPiI;
  rep.rhs_valid_only = coarse.valid_only * kInvTwoPiI;
  rep.abs_err = std::abs(rep.lhs - rep.rhs);
  rep.quad_err_estimate = std::abs(fine.value - coarse.value) / (2.0 * std::numbers::pi);
  rep.grid = grid;
  rep.r = r;
  rep.masked_area_fraction = m.masked_fraction();
  rep.uncertified_area_fraction = m.uncertified_fraction();
  rep.tail_bound = s.tail_bound();

  const double unsure = coarse.uncertified_mass / (2.0 * std::numbers::pi);
  if (unsure > std::max(0.01 * std::abs(rep.rhs), 1e-3))
    throw Error(ErrorKind::MaskCoverage,
                "uncertified cells could carry " + std::to_string(unsure) + " of the quadrature");
  return rep;
}

TotalVariation total_variation(const MeasureDensity& d) {
  TotalVariation tv;
  const auto& m = d.multiplicity;
  const double scale = m.grid.cell_area() / (2.0 * std::numbers::pi);
  for (std::size_t k = 0; k < m.values.size(); ++k) {
    const double v = std::abs(m.values[k]) * scale;
    tv.value += v;
    if (m.valid[k]) tv.valid_only += v;
  }
  tv.masked_area_fraction = m.masked_fraction();
  return tv;
}

BrownBound brown_bound_check(const FourierSymbol& phi, double r, const GridSpec& grid) {
  const FourierSymbol s = curve_symbol(phi, r);
  BrownBound b;
  b.tv = total_variation(hh_density(phi, r, grid)).value;
  const double fine = total_variation(hh_density(phi, r, grid.refined())).value;
  b.quad_err_estimate = std::abs(fine - b.tv);
  // The self-commutator lives in the band x band corner.
  const Index n = std::max(1, s.band());
  b.bound = schatten_norm(self_commutator(s, n), 1.0).value / 2.0;
  b.ok = b.tv <= b.bound + 2e-3 + b.quad_err_estimate;
  return b;
}

IndexCheck index_check(const FourierSymbol& phi, cplx lambda, double r, double eps) {
  IndexCheck c;
  c.wind = winding(SampledCurve::of_symbol(phi, r), lambda, eps);
  const int m = preimage_multiplicity(phi, r, lambda);
  c.density_value = static_cast<double>(m) * kInvTwoPiI;
  c.ok = std::abs(c.density_value - static_cast<double>(c.wind) * kInvTwoPiI) < 1e-12;
  return c;
}

ProbeTable main_theorem_probe(const FourierSymbol& phi, const BivariatePolynomial& p,
                              const BivariatePolynomial& q, const std::vector<double>& r_list,
                              const GridSpec& grid) {
  ProbeTable t;
  t.tail_bound = phi.tail_bound();
  const FourierSymbol truncated = without_tail(phi);
  t.lhs = commutator_trace(truncated, p, q).value;

  const auto moments = multiplicity_limit_probe(phi, r_list, {jacobian_bracket(p, q)}, grid);
  for (const auto& row : moments) {
    ProbeRow out{row.r, row.moments[0], commutator_trace(poisson_smooth(truncated, row.r), p, q).value,
                 std::nullopt, row.masked_fraction};
    if (!row.differences.empty()) out.difference = row.differences[0];
    t.rows.push_back(out);
  }
  return t;
}

}  // namespace hh
