#pragma once

#include <optional>
#include <vector>

#include "hh/degree.hpp"
#include "hh/operator.hpp"
#include "hh/polynomial.hpp"
#include "hh/symbol.hpp"

namespace hh {

/// Helton-Howe density (1/2pi i) m_{Phi_r} on a grid. Values are purely
/// imaginary integer multiples of 1/2pi.
struct MeasureDensity {
  MultiplicityGrid multiplicity;
  double r_used = 1.0;
  double tail_note = 0.0;

  std::optional<cplx> value(int i, int j) const;
  /// Density at every cell center, masked cells included.
  cplx raw_value(int i, int j) const;
};

MeasureDensity hh_density(const FourierSymbol& phi, double r, const GridSpec& grid);

struct TraceFormulaReport {
  cplx lhs;
  cplx rhs;
  double abs_err = 0.0;
  double quad_err_estimate = 0.0;
  Index truncation = 0;
  GridSpec grid;
  double r = 1.0;
  double masked_area_fraction = 0.0;
  double uncertified_area_fraction = 0.0;
  double tail_bound = 0.0;
  /// Quadrature restricted to eps-valid cells, for comparison.
  cplx rhs_valid_only;
};

/// Compares tr[p(X,Y), q(X,Y)] with the midpoint quadrature of
/// J(p,q) (1/2pi i) m_{Phi_r}. The quadrature error estimate is the change
/// under one halving of the cell size.
TraceFormulaReport trace_formula_check(const FourierSymbol& phi, const BivariatePolynomial& p,
                                       const BivariatePolynomial& q, const GridSpec& grid, double r = 1.0);

/// Square box of half-width sum|c(k)| + 0.5.
GridSpec default_box(const FourierSymbol& phi, int n = 400);

struct TotalVariation {
  double value = 0.0;       // all cells
  double valid_only = 0.0;  // eps-valid cells only
  double masked_area_fraction = 0.0;
};

TotalVariation total_variation(const MeasureDensity& d);

struct BrownBound {
  double tv = 0.0;
  double bound = 0.0;
  double quad_err_estimate = 0.0;
  bool ok = false;
};

/// ||P_T|| <= ||[T^*, T]||_1 / 2 for T = T_{phi_r}.
BrownBound brown_bound_check(const FourierSymbol& phi, double r, const GridSpec& grid);

struct IndexCheck {
  int wind = 0;
  cplx density_value;  // m_{Phi_r}(lambda) / 2pi i from the preimage count
  bool ok = false;
};

/// Index formula: the density at lambda equals wind(phi_r, lambda) / 2pi i.
IndexCheck index_check(const FourierSymbol& phi, cplx lambda, double r = 1.0, double eps = 1e-3);

struct ProbeRow {
  double r;
  cplx moment;        // (1/2pi i) integral of J(p,q) m_{Phi_r}
  cplx lhs_smoothed;  // tr[p, q] for the operator with symbol phi_r
  std::optional<double> difference;  // |moment - previous moment|
  double masked_fraction;
};

struct ProbeTable {
  std::vector<ProbeRow> rows;
  cplx lhs;  // tr[p, q] at the (truncated) symbol itself
  double tail_bound = 0.0;
};

/// Cauchy diagnostics of the moments of dP_{T_{phi_r}} as r increases.
ProbeTable main_theorem_probe(const FourierSymbol& phi, const BivariatePolynomial& p,
                              const BivariatePolynomial& q, const std::vector<double>& r_list,
                              const GridSpec& grid);

}  // namespace hh
