#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hh/polynomial.hpp"
#include "hh/symbol.hpp"

namespace hh {

/// Closed curve sampled at increasing angles in [0, 2pi); wraparound implied.
/// A refinable curve carries its parametrization so winding() can bisect.
class SampledCurve {
 public:
  using Parametrization = std::function<cplx(double)>;

  SampledCurve(std::vector<double> angles, std::vector<cplx> points);
  SampledCurve(std::size_t n, Parametrization curve);

  /// phi_r on n equispaced angles (r = 1 evaluates phi itself).
  static SampledCurve of_symbol(const FourierSymbol& phi, double r, std::size_t n = 256);

  const std::vector<double>& angles() const noexcept { return angles_; }
  const std::vector<cplx>& points() const noexcept { return points_; }
  bool refinable() const noexcept { return static_cast<bool>(curve_); }
  cplx at(double theta) const { return curve_(theta); }

 private:
  std::vector<double> angles_;
  std::vector<cplx> points_;
  Parametrization curve_;
};

/// Winding number by accumulated argument increments, each kept below pi/2
/// by bisection of refinable curves. Throws WindingUndefined when the curve
/// comes within eps of lambda and NonIntegerError when the total is not an
/// integer to 1e-6. Bisection cannot undo aliasing, so the initial samples
/// must already resolve the curve (of_symbol takes at least 8 per harmonic).
int winding(const SampledCurve& c, cplx lambda, double eps);

struct GridSpec {
  double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  int nx = 1, ny = 1;

  double dx() const noexcept { return (x1 - x0) / nx; }
  double dy() const noexcept { return (y1 - y0) / ny; }
  double cell_area() const noexcept { return dx() * dy(); }
  double diagonal() const noexcept;
  double x(int i) const noexcept { return x0 + (i + 0.5) * dx(); }
  double y(int j) const noexcept { return y0 + (j + 0.5) * dy(); }
  std::size_t cells() const noexcept { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }

  /// Same box at twice the resolution.
  GridSpec refined() const noexcept { return {x0, x1, y0, y1, 2 * nx, 2 * ny}; }
  /// Square [-h, h]^2.
  static GridSpec square(double half_width, int n) { return {-half_width, half_width, -half_width, half_width, n, n}; }
  void validate() const;
};

/// Signed multiplicity m_{Phi_r} rasterized at cell centers.
///
/// The curve phi_r is replaced by a polyline whose distance to the curve is
/// at most `tau`. Every cell gets the polyline winding number at its center.
/// A cell is `valid` when its center is farther than eps from the curve, and
/// `certified` when it is farther than 2 tau, which already makes the value
/// the exact winding number of the curve.
struct MultiplicityGrid {
  GridSpec grid;
  double r = 1.0;
  double eps = 0.0;
  double tau = 0.0;
  double tail_bound = 0.0;
  std::vector<int> values;
  std::vector<std::uint8_t> valid;
  std::vector<std::uint8_t> certified;

  std::size_t index(int i, int j) const noexcept { return static_cast<std::size_t>(j) * grid.nx + i; }
  std::optional<int> value(int i, int j) const noexcept {
    const auto k = index(i, j);
    return valid[k] ? std::optional<int>(values[k]) : std::nullopt;
  }
  double masked_fraction() const noexcept;
  double uncertified_fraction() const noexcept;
  /// Grid cell containing w, if any.
  std::optional<std::pair<int, int>> locate(cplx w) const noexcept;
};

struct MultiplicityOptions {
  /// Curve-proximity mask; nonpositive selects 2x the cell diagonal.
  double eps = -1.0;
};

MultiplicityGrid multiplicity_grid(const FourierSymbol& phi, double r, const GridSpec& grid,
                                   MultiplicityOptions opts = {});

/// Midpoint sums of p * m over the grid.
struct GridIntegral {
  double value = 0.0;         // sum over all cells of p * m * area
  double valid_only = 0.0;    // same, restricted to eps-valid cells
  double uncertified_mass = 0.0;  // sum of |p| * max(|m|, 1) * area over uncertified cells
};

GridIntegral integrate(const MultiplicityGrid& m, const BivariatePolynomial& p);

struct PreimageOptions {
  int min_depth = 3;
  int max_depth = 6;
  double dedup = 1e-6;
  double jtol = 1e-8;
  int newton_iterations = 60;
};

struct Preimages {
  std::vector<cplx> roots;  // in the unit disk, as preimages under Phi_r
  std::vector<int> signs;
  int multiplicity = 0;
};

/// Roots of Phi_r(z) = w in the unit disk by Newton iteration from a
/// subdivision of the disk, deduplicated, with Jacobian signs.
Preimages find_preimages(const FourierSymbol& phi, double r, cplx w, PreimageOptions opts = {});

/// Sum of Jacobian signs over the preimages of w; oracle for multiplicity_grid.
int preimage_multiplicity(const FourierSymbol& phi, double r, cplx w, PreimageOptions opts = {});

struct MomentRow {
  double r;
  std::vector<cplx> moments;      // (1/2pi i) * integral of p * m_{Phi_r}
  std::vector<double> differences;  // |moment - previous row's moment|; empty for the first row
  double masked_fraction;
};

/// Moments of (1/2pi i) m_{Phi_r} dxdy against test polynomials along r_list.
std::vector<MomentRow> multiplicity_limit_probe(const FourierSymbol& phi, const std::vector<double>& r_list,
                                                const std::vector<BivariatePolynomial>& polys,
                                                const GridSpec& grid);

/// Symbol whose boundary curve is phi_r (phi itself for r = 1).
FourierSymbol curve_symbol(const FourierSymbol& phi, double r);

}  // namespace hh
