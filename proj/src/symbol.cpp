#include "hh/symbol.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/FFT>

#include "hh/errors.hpp"

namespace hh {

FourierSymbol::FourierSymbol(const std::map<int, cplx>& coeffs, double tail_bound)
    : tail_bound_(tail_bound) {
  if (!(tail_bound >= 0.0)) throw Error(ErrorKind::Range, "tail_bound must be nonnegative");
  int band = 0;
  for (const auto& [k, c] : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorKind::Domain, "non-finite Fourier coefficient at k=" + std::to_string(k));
    if (c != cplx{}) band = std::max(band, std::abs(k));
  }
  band_ = band;
  coeffs_.assign(static_cast<std::size_t>(2 * band + 1), cplx{});
  for (const auto& [k, c] : coeffs)
    if (std::abs(k) <= band) coeffs_[static_cast<std::size_t>(k + band)] = c;
}

FourierSymbol FourierSymbol::real_valued(const std::map<int, cplx>& coeffs, double tail_bound) {
  FourierSymbol s(coeffs, tail_bound);
  if (!s.is_real()) throw Error(ErrorKind::Domain, "coefficients violate c(-k) = conj(c(k))");
  return s;
}

double FourierSymbol::l1_norm() const noexcept {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::abs(c);
  return s;
}

bool FourierSymbol::is_real(double tol) const noexcept {
  const double scale = std::max(1.0, l1_norm());
  for (int k = 0; k <= band_; ++k)
    if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol * scale) return false;
  return true;
}

cplx FourierSymbol::eval_angle(double theta) const noexcept {
  cplx s{};
  for (int k = -band_; k <= band_; ++k) s += coeff(k) * std::polar(1.0, k * theta);
  return s;
}

cplx FourierSymbol::extension(cplx z) const noexcept {
  cplx analytic{};
  for (int k = band_; k >= 0; --k) analytic = analytic * z + coeff(k);
  cplx coanalytic{};
  const cplx zb = std::conj(z);
  for (int k = band_; k >= 1; --k) coanalytic = (coanalytic + coeff(-k)) * zb;
  return analytic + coanalytic;
}

std::pair<cplx, cplx> FourierSymbol::extension_derivatives(cplx z) const noexcept {
  cplx dz{}, dzbar{};
  const cplx zb = std::conj(z);
  for (int k = band_; k >= 1; --k) {
    dz = dz * z + static_cast<double>(k) * coeff(k);
    dzbar = dzbar * zb + static_cast<double>(k) * coeff(-k);
  }
  return {dz, dzbar};
}

FourierSymbol FourierSymbol::conjugate() const {
  std::map<int, cplx> c;
  for (int k = -band_; k <= band_; ++k) c[-k] = std::conj(coeff(k));
  return FourierSymbol(c, tail_bound_);
}

FourierSymbol FourierSymbol::real_part() const {
  std::map<int, cplx> c;
  for (int k = -band_; k <= band_; ++k) c[k] = 0.5 * (coeff(k) + std::conj(coeff(-k)));
  return FourierSymbol(c, tail_bound_);
}

FourierSymbol FourierSymbol::imag_part() const {
  std::map<int, cplx> c;
  const cplx half_over_i{0.0, -0.5};
  for (int k = -band_; k <= band_; ++k) c[k] = half_over_i * (coeff(k) - std::conj(coeff(-k)));
  return FourierSymbol(c, tail_bound_);
}

std::map<int, cplx> FourierSymbol::coefficients() const {
  std::map<int, cplx> c;
  for (int k = -band_; k <= band_; ++k)
    if (coeff(k) != cplx{}) c[k] = coeff(k);
  return c;
}

FourierSymbol operator+(const FourierSymbol& a, const FourierSymbol& b) {
  std::map<int, cplx> c;
  const int band = std::max(a.band(), b.band());
  for (int k = -band; k <= band; ++k) c[k] = a.coeff(k) + b.coeff(k);
  return FourierSymbol(c, a.tail_bound() + b.tail_bound());
}

FourierSymbol operator*(cplx s, const FourierSymbol& a) {
  std::map<int, cplx> c;
  for (int k = -a.band(); k <= a.band(); ++k) c[k] = s * a.coeff(k);
  return FourierSymbol(c, std::abs(s) * a.tail_bound());
}

DiskPoint::DiskPoint(cplx z) : z_(z) {
  if (!(std::abs(z) <= 1.0)) throw Error(ErrorKind::Domain, "point lies outside the closed unit disk");
}

FourierSymbol from_samples(std::span<const cplx> values) {
  const std::size_t n = values.size();
  if (n < 4 || !std::has_single_bit(n))
    throw Error(ErrorKind::SampleCount,
                "sample count must be a power of two >= 4, got " + std::to_string(n));
  std::vector<cplx> in(values.begin(), values.end()), out;
  Eigen::FFT<double> fft;
  fft.fwd(out, in);

  double scale = 0.0;
  for (const auto& v : values) scale = std::max(scale, std::abs(v));
  const double drop = 1e-15 * std::max(scale, 1e-300);

  std::map<int, cplx> c;
  const int half = static_cast<int>(n / 2);
  for (int j = 0; j < static_cast<int>(n); ++j) {
    const cplx v = out[static_cast<std::size_t>(j)] / static_cast<double>(n);
    if (std::abs(v) <= drop) continue;
    const int k = j < half ? j : j - static_cast<int>(n);
    c[k] = v;
  }
  return FourierSymbol(c);
}

FourierSymbol poisson_smooth(const FourierSymbol& phi, double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::Range, "smoothing radius must lie in (0,1)");
  std::map<int, cplx> c;
  for (int k = -phi.band(); k <= phi.band(); ++k) c[k] = std::pow(r, std::abs(k)) * phi.coeff(k);
  // The discarded tail is damped at least as much as the kept coefficients.
  return FourierSymbol(c, phi.tail_bound() == 0.0 ? 0.0 : phi.tail_bound() * std::pow(r, phi.band() + 1));
}

cplx harmonic_eval(const FourierSymbol& phi, DiskPoint z) {
  if (!z.interior() && !phi.exact())
    throw Error(ErrorKind::Domain, "boundary evaluation requires an exact finite-band symbol");
  return phi.extension(z.value());
}

AnalyticSplit analytic_split(const FourierSymbol& phi) {
  std::map<int, cplx> f, g;
  for (int k = 0; k <= phi.band(); ++k) f[k] = phi.coeff(k);
  for (int k = 1; k <= phi.band(); ++k) g[k] = std::conj(phi.coeff(-k));
  return {FourierSymbol(f, phi.tail_bound()), FourierSymbol(g, phi.tail_bound())};
}

Wirtinger wirtinger(const FourierSymbol& phi, DiskPoint z) {
  if (!z.interior()) throw Error(ErrorKind::Domain, "Wirtinger derivatives need |z| < 1");
  const auto [dz, dzbar] = phi.extension_derivatives(z.value());
  return {dz, dzbar};
}

double jacobian(const FourierSymbol& phi, DiskPoint z) {
  const auto w = wirtinger(phi, z);
  return std::norm(w.dz) - std::norm(w.dzbar);
}

namespace symbols {

FourierSymbol monomial(int k, cplx c) { return FourierSymbol({{k, c}}); }

FourierSymbol constant(cplx c) { return FourierSymbol({{0, c}}); }

}  // namespace symbols

}  // namespace hh
