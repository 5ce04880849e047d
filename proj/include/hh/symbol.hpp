#pragma once

#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace hh {

using cplx = std::complex<double>;

/// A symbol on the unit circle stored by its Fourier coefficients c(k),
/// k in [-band, band]. Symbols with infinite support enter only as
/// truncations, with tail_bound bounding the discarded l1 mass
/// (zero for an exact trigonometric polynomial, +inf when unknown).
class FourierSymbol {
 public:
  FourierSymbol() : coeffs_(1, cplx{}) {}
  explicit FourierSymbol(const std::map<int, cplx>& coeffs, double tail_bound = 0.0);

  /// Builds a symbol that must satisfy c(-k) = conj(c(k)); throws DomainError otherwise.
  static FourierSymbol real_valued(const std::map<int, cplx>& coeffs, double tail_bound = 0.0);

  int band() const noexcept { return band_; }
  double tail_bound() const noexcept { return tail_bound_; }
  bool exact() const noexcept { return tail_bound_ == 0.0; }

  cplx coeff(int k) const noexcept {
    return (k < -band_ || k > band_) ? cplx{} : coeffs_[static_cast<std::size_t>(k + band_)];
  }

  /// Sum of |c(k)|; bounds the sup norm of the symbol and of its extension.
  double l1_norm() const noexcept;

  bool is_real(double tol = 1e-14) const noexcept;

  /// Value on the circle at angle theta.
  cplx eval_angle(double theta) const noexcept;

  /// Harmonic extension at z, no domain checks.
  cplx extension(cplx z) const noexcept;

  /// (dPhi/dz, dPhi/dzbar) at z, no domain checks.
  std::pair<cplx, cplx> extension_derivatives(cplx z) const noexcept;

  FourierSymbol conjugate() const;
  FourierSymbol real_part() const;
  FourierSymbol imag_part() const;

  std::map<int, cplx> coefficients() const;

 private:
  std::vector<cplx> coeffs_;  // index k + band_
  int band_ = 0;
  double tail_bound_ = 0.0;
};

FourierSymbol operator+(const FourierSymbol& a, const FourierSymbol& b);
FourierSymbol operator*(cplx s, const FourierSymbol& a);

/// A point of the closed unit disk.
class DiskPoint {
 public:
  explicit DiskPoint(cplx z);
  cplx value() const noexcept { return z_; }
  bool interior() const noexcept { return std::abs(z_) < 1.0; }

 private:
  cplx z_;
};

/// Discrete Fourier transform of 2^m (m >= 2) equispaced samples.
FourierSymbol from_samples(std::span<const cplx> values);

/// Coefficientwise c(k) r^|k|, i.e. the Poisson integral restricted to radius r.
FourierSymbol poisson_smooth(const FourierSymbol& phi, double r);

cplx harmonic_eval(const FourierSymbol& phi, DiskPoint z);

struct AnalyticSplit {
  FourierSymbol f;  // nonnegative frequencies, constant term included
  FourierSymbol g;  // phi = f + conj(g), g(0) = 0
};

AnalyticSplit analytic_split(const FourierSymbol& phi);

struct Wirtinger {
  cplx dz;
  cplx dzbar;
};

Wirtinger wirtinger(const FourierSymbol& phi, DiskPoint z);

/// |dPhi/dz|^2 - |dPhi/dzbar|^2.
double jacobian(const FourierSymbol& phi, DiskPoint z);

/// Symbols used throughout the tests and tools.
namespace symbols {
FourierSymbol monomial(int k, cplx c = 1.0);
FourierSymbol constant(cplx c);
}  // namespace symbols

}  // namespace hh
