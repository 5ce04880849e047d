#include "hh/degree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hh/errors.hpp"

namespace hh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxBisection = 40;

}  // namespace

SampledCurve::SampledCurve(std::vector<double> angles, std::vector<cplx> points)
    : angles_(std::move(angles)), points_(std::move(points)) {
  if (angles_.size() != points_.size() || angles_.size() < 3)
    throw Error(ErrorKind::Domain, "curve needs at least 3 samples with matching angles");
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    if (!(angles_[i] >= 0.0 && angles_[i] < kTwoPi)) throw Error(ErrorKind::Domain, "angle outside [0, 2pi)");
    if (i > 0 && !(angles_[i] > angles_[i - 1])) throw Error(ErrorKind::Domain, "angles must increase strictly");
    if (!std::isfinite(points_[i].real()) || !std::isfinite(points_[i].imag()))
      throw Error(ErrorKind::Domain, "curve sample is not finite");
  }
}

SampledCurve::SampledCurve(std::size_t n, Parametrization curve) : curve_(std::move(curve)) {
  if (n < 3) throw Error(ErrorKind::Domain, "curve needs at least 3 samples");
  angles_.resize(n);
  points_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    angles_[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
    points_[i] = curve_(angles_[i]);
  }
}

FourierSymbol curve_symbol(const FourierSymbol& phi, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorKind::Range, "r must lie in (0,1]");
  if (r < 1.0) return poisson_smooth(phi, r);
  if (!phi.exact()) throw Error(ErrorKind::Domain, "r = 1 requires an exact finite-band symbol");
  return phi;
}

SampledCurve SampledCurve::of_symbol(const FourierSymbol& phi, double r, std::size_t n) {
  const FourierSymbol s = curve_symbol(phi, r);
  n = std::max<std::size_t>(n, static_cast<std::size_t>(8 * s.band() + 8));
  return SampledCurve(n, [s](double t) { return s.eval_angle(t); });
}

int winding(const SampledCurve& c, cplx lambda, double eps) {
  const auto& th = c.angles();
  const auto& pt = c.points();
  for (const auto& p : pt)
    if (std::abs(p - lambda) <= eps)
      throw Error(ErrorKind::WindingUndefined, "curve sample within eps of the point");

  // Argument increment along [ta, tb], bisecting while it is >= pi/2.
  std::function<double(double, cplx, double, cplx, int)> increment =
      [&](double ta, cplx pa, double tb, cplx pb, int depth) -> double {
    const double d = std::arg((pb - lambda) / (pa - lambda));
    if (std::abs(d) < std::numbers::pi / 2) return d;
    if (!c.refinable())
      throw Error(ErrorKind::NonInteger, "argument increment >= pi/2 on a non-refinable curve");
    if (depth >= kMaxBisection)
      throw Error(ErrorKind::WindingUndefined, "bisection could not resolve the curve near the point");
    const double tm = 0.5 * (ta + tb);
    const cplx pm = c.at(tm);
    if (std::abs(pm - lambda) <= eps)
      throw Error(ErrorKind::WindingUndefined, "curve passes within eps of the point");
    return increment(ta, pa, tm, pm, depth + 1) + increment(tm, pm, tb, pb, depth + 1);
  };

  double total = 0.0;
  const std::size_t n = th.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const double tb = j == 0 ? th[0] + kTwoPi : th[j];
    total += increment(th[i], pt[i], tb, pt[j], 0);
  }
  const double turns = total / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-6)
    throw Error(ErrorKind::NonInteger, "winding total " + std::to_string(turns) + " is not an integer");
  return static_cast<int>(rounded);
}

double GridSpec::diagonal() const noexcept { return std::hypot(dx(), dy()); }

void GridSpec::validate() const {
  if (!(x1 > x0) || !(y1 > y0)) throw Error(ErrorKind::Range, "grid box must have positive extent");
  if (nx < 1 || ny < 1) throw Error(ErrorKind::Range, "grid must have at least one cell per axis");
  if (static_cast<double>(nx) * static_cast<double>(ny) > 1e7)
    throw Error(ErrorKind::Range, "grid exceeds 10^7 cells");
}

double MultiplicityGrid::masked_fraction() const noexcept {
  const auto n = std::count(valid.begin(), valid.end(), std::uint8_t{0});
  return values.empty() ? 0.0 : static_cast<double>(n) / static_cast<double>(values.size());
}

double MultiplicityGrid::uncertified_fraction() const noexcept {
  const auto n = std::count(certified.begin(), certified.end(), std::uint8_t{0});
  return values.empty() ? 0.0 : static_cast<double>(n) / static_cast<double>(values.size());
}

std::optional<std::pair<int, int>> MultiplicityGrid::locate(cplx w) const noexcept {
  const int i = static_cast<int>(std::floor((w.real() - grid.x0) / grid.dx()));
  const int j = static_cast<int>(std::floor((w.imag() - grid.y0) / grid.dy()));
  if (i < 0 || j < 0 || i >= grid.nx || j >= grid.ny) return std::nullopt;
  return std::pair{i, j};
}

namespace {

double segment_distance(cplx p, cplx a, cplx b) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  double t = len2 > 0.0 ? ((p - a) * std::conj(ab)).real() / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

MultiplicityGrid multiplicity_grid(const FourierSymbol& phi, double r, const GridSpec& grid,
                                   MultiplicityOptions opts) {
  grid.validate();
  const FourierSymbol s = curve_symbol(phi, r);

  MultiplicityGrid out;
  out.grid = grid;
  out.r = r;
  out.eps = opts.eps > 0.0 ? opts.eps : 2.0 * grid.diagonal();
  out.tail_bound = s.tail_bound();

  // Chord error of a sampled curve is at most h^2/8 * max|phi''|.
  double second = 0.0;
  for (int k = -s.band(); k <= s.band(); ++k) second += double(k) * double(k) * std::abs(s.coeff(k));
  const double tau_target = 1e-3 * std::min(grid.dx(), grid.dy());
  std::size_t nseg = 256;
  if (second > 0.0) {
    const double h = std::sqrt(8.0 * tau_target / second);
    nseg = std::max<std::size_t>(nseg, static_cast<std::size_t>(std::ceil(kTwoPi / h)));
  }
  nseg = std::min<std::size_t>(nseg, std::size_t{1} << 22);
  const double h = kTwoPi / static_cast<double>(nseg);
  out.tau = h * h / 8.0 * second + 1e-14 * std::max(1.0, s.l1_norm());

  std::vector<cplx> poly(nseg + 1);
  for (std::size_t i = 0; i < nseg; ++i) poly[i] = s.eval_angle(h * static_cast<double>(i));
  poly[nseg] = poly[0];

  const std::size_t ncell = grid.cells();
  out.values.assign(ncell, 0);
  out.valid.assign(ncell, 1);
  out.certified.assign(ncell, 1);

  // Crossings of each row's horizontal line through the cell centers.
  std::vector<std::vector<std::pair<double, int>>> crossings(static_cast<std::size_t>(grid.ny));
  const double dy = grid.dy(), dx = grid.dx();
  for (std::size_t k = 0; k < nseg; ++k) {
    const cplx a = poly[k], b = poly[k + 1];
    if (a.imag() == b.imag()) continue;
    const double ylo = std::min(a.imag(), b.imag()), yhi = std::max(a.imag(), b.imag());
    const int jlo = std::max(0, static_cast<int>(std::ceil((ylo - grid.y0) / dy - 0.5)));
    const int jhi = std::min(grid.ny - 1, static_cast<int>(std::floor((yhi - grid.y0) / dy - 0.5)));
    const int sign = b.imag() > a.imag() ? 1 : -1;
    for (int j = jlo; j <= jhi; ++j) {
      const double yc = grid.y(j);
      if (yc < ylo || yc >= yhi) continue;
      const double t = (yc - a.imag()) / (b.imag() - a.imag());
      crossings[static_cast<std::size_t>(j)].emplace_back(a.real() + t * (b.real() - a.real()), sign);
    }
  }
  for (int j = 0; j < grid.ny; ++j) {
    auto& row = crossings[static_cast<std::size_t>(j)];
    std::sort(row.begin(), row.end());
    int right = 0;  // signed crossings strictly to the right of the current center
    for (const auto& c : row) right += c.second;
    std::size_t next = 0;
    for (int i = 0; i < grid.nx; ++i) {
      const double xc = grid.x(i);
      while (next < row.size() && row[next].first <= xc) right -= row[next++].second;
      out.values[out.index(i, j)] = right;
    }
  }

  // Distance of cell centers to the polyline, only where it matters.
  const double reach = std::max(out.eps + out.tau, 2.0 * out.tau);
  std::vector<double> dist(ncell, std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k < nseg; ++k) {
    const cplx a = poly[k], b = poly[k + 1];
    const double xlo = std::min(a.real(), b.real()) - reach, xhi = std::max(a.real(), b.real()) + reach;
    const double ylo = std::min(a.imag(), b.imag()) - reach, yhi = std::max(a.imag(), b.imag()) + reach;
    const int ilo = std::max(0, static_cast<int>(std::floor((xlo - grid.x0) / dx - 0.5)));
    const int ihi = std::min(grid.nx - 1, static_cast<int>(std::ceil((xhi - grid.x0) / dx - 0.5)));
    const int jlo = std::max(0, static_cast<int>(std::floor((ylo - grid.y0) / dy - 0.5)));
    const int jhi = std::min(grid.ny - 1, static_cast<int>(std::ceil((yhi - grid.y0) / dy - 0.5)));
    for (int j = jlo; j <= jhi; ++j)
      for (int i = ilo; i <= ihi; ++i) {
        auto& d = dist[out.index(i, j)];
        d = std::min(d, segment_distance({grid.x(i), grid.y(j)}, a, b));
      }
  }
  for (std::size_t c = 0; c < ncell; ++c) {
    out.valid[c] = dist[c] > out.eps + out.tau;
    out.certified[c] = dist[c] > 2.0 * out.tau;
  }
  return out;
}

GridIntegral integrate(const MultiplicityGrid& m, const BivariatePolynomial& p) {
  GridIntegral out;
  const double area = m.grid.cell_area();
  for (int j = 0; j < m.grid.ny; ++j) {
    const double y = m.grid.y(j);
    for (int i = 0; i < m.grid.nx; ++i) {
      const auto k = m.index(i, j);
      const int v = m.values[k];
      if (v == 0 && m.certified[k]) continue;
      const double pv = p(m.grid.x(i), y);
      out.value += pv * v * area;
      if (m.valid[k]) out.valid_only += pv * v * area;
      if (!m.certified[k]) out.uncertified_mass += std::abs(pv) * std::max(std::abs(v), 1) * area;
    }
  }
  return out;
}

Preimages find_preimages(const FourierSymbol& phi, double r, cplx w, PreimageOptions opts) {
  if (!phi.exact()) throw Error(ErrorKind::Tail, "preimage counting needs an exact finite-band symbol");
  const FourierSymbol s = curve_symbol(phi, r);
  const double scale = std::max({1.0, std::abs(w), s.l1_norm()});

  Preimages out;
  auto known = [&](cplx z) {
    return std::any_of(out.roots.begin(), out.roots.end(),
                       [&](cplx q) { return std::abs(q - z) <= opts.dedup; });
  };

  auto newton = [&](cplx z) -> std::optional<cplx> {
    for (int it = 0; it < opts.newton_iterations; ++it) {
      const cplx f = s.extension(z) - w;
      if (std::abs(f) <= 1e-13 * scale) return z;
      const auto [a, b] = s.extension_derivatives(z);
      const double jac = std::norm(a) - std::norm(b);
      if (jac == 0.0) return std::nullopt;
      // Solves a*dz + b*conj(dz) = -f, the real 2x2 Newton system in complex form.
      z += (-f * std::conj(a) + std::conj(f) * b) / jac;
      if (std::abs(z) > 2.0) return std::nullopt;
    }
    return std::nullopt;
  };

  bool stable = false;
  for (int depth = 1; depth <= opts.max_depth; ++depth) {
    if (depth < opts.min_depth) continue;
    const int n = 1 << depth;
    const std::size_t before = out.roots.size();
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const cplx z0{-1.0 + (2.0 * i + 1.0) / n, -1.0 + (2.0 * j + 1.0) / n};
        if (std::abs(z0) >= 1.0) continue;
        const auto root = newton(z0);
        if (!root || std::abs(*root) >= 1.0 || known(*root)) continue;
        const auto [a, b] = s.extension_derivatives(*root);
        const double jac = std::norm(a) - std::norm(b);
        if (std::abs(jac) < opts.jtol)
          throw Error(ErrorKind::DegenerateRoot, "Jacobian vanishes at a preimage");
        out.roots.push_back(*root);
        out.signs.push_back(jac > 0 ? 1 : -1);
      }
    if (depth > opts.min_depth && out.roots.size() == before) {
      stable = true;
      break;
    }
  }
  if (!stable) throw Error(ErrorKind::NoConvergence, "preimage set did not stabilize under subdivision");
  for (int sgn : out.signs) out.multiplicity += sgn;
  return out;
}

int preimage_multiplicity(const FourierSymbol& phi, double r, cplx w, PreimageOptions opts) {
  return find_preimages(phi, r, w, opts).multiplicity;
}

std::vector<MomentRow> multiplicity_limit_probe(const FourierSymbol& phi, const std::vector<double>& r_list,
                                                const std::vector<BivariatePolynomial>& polys,
                                                const GridSpec& grid) {
  if (r_list.empty()) throw Error(ErrorKind::Range, "r list must be nonempty");
  for (std::size_t i = 0; i < r_list.size(); ++i) {
    if (!(r_list[i] > 0.0 && r_list[i] < 1.0)) throw Error(ErrorKind::Range, "probe radii must lie in (0,1)");
    if (i > 0 && !(r_list[i] > r_list[i - 1])) throw Error(ErrorKind::Range, "probe radii must increase");
  }
  const cplx inv_two_pi_i = 1.0 / cplx(0.0, kTwoPi);
  std::vector<MomentRow> rows;
  for (double r : r_list) {
    const MultiplicityGrid m = multiplicity_grid(phi, r, grid);
    if (m.masked_fraction() > 0.10)
      throw Error(ErrorKind::MaskCoverage, "more than 10% of the grid is masked at r = " + std::to_string(r));
    MomentRow row{r, {}, {}, m.masked_fraction()};
    for (const auto& p : polys) row.moments.push_back(integrate(m, p).value * inv_two_pi_i);
    if (!rows.empty())
      for (std::size_t k = 0; k < polys.size(); ++k)
        row.differences.push_back(std::abs(row.moments[k] - rows.back().moments[k]));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hh
