#include "hh/besov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hh/errors.hpp"
#include "hh/operator.hpp"
#include "hh/quadrature.hpp"

namespace hh {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Converging: return "converging";
    case Verdict::Diverging: return "diverging";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(Sufficiency s) {
  switch (s) {
    case Sufficiency::Met: return "met";
    case Sufficiency::NotMet: return "not met";
    case Sufficiency::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict classify_trend(const std::vector<double>& partials) {
  const std::size_t n = partials.size();
  if (n < 3) return Verdict::Inconclusive;
  const double d1 = partials[n - 2] - partials[n - 3];
  const double d2 = partials[n - 1] - partials[n - 2];
  const double tiny = 1e-13 * std::max(1.0, std::abs(partials[n - 1]));
  if (std::abs(d1) <= tiny && std::abs(d2) <= tiny) return Verdict::Converging;
  if (d2 <= d1 / 2.0) return Verdict::Converging;
  if (d2 >= 0.9 * d1) return Verdict::Diverging;
  return Verdict::Inconclusive;
}

namespace {

void require_analytic(const FourierSymbol& f) {
  for (int k = 1; k <= f.band(); ++k)
    if (f.coeff(-k) != cplx{}) throw Error(ErrorKind::Domain, "Besov seminorm needs an analytic symbol");
}

void require_exponent(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error(ErrorKind::Range, "Besov exponent must be finite and >= 1");
}

int angular_nodes(const FourierSymbol& f) { return std::max(64, 8 * (f.band() + 1)); }

cplx second_derivative(const FourierSymbol& f, cplx z) {
  cplx s{};
  for (int k = f.band(); k >= 2; --k) s = s * z + double(k) * double(k - 1) * f.coeff(k);
  return s;
}

std::vector<double> seminorm_partials(const FourierSymbol& f, double p, const std::vector<double>& radii) {
  const auto integrand = [&](double rho, double theta) {
    const cplx z = std::polar(rho, theta);
    if (p == 1.0) return std::abs(second_derivative(f, z));
    const double d = std::abs(f.extension_derivatives(z).first);
    if (d == 0.0) return 0.0;
    return std::pow(1.0 - rho * rho, p - 2.0) * std::pow(d, p);
  };
  return integrate_disks(integrand, radii, angular_nodes(f));
}

FourierSymbol truncate(const FourierSymbol& f, int band) {
  std::map<int, cplx> c;
  for (int k = -band; k <= band; ++k) c[k] = f.coeff(k);
  return FourierSymbol(c, f.tail_bound());
}

bool is_zero(const FourierSymbol& f) { return f.band() == 0 && f.coeff(0) == cplx{}; }

BesovReport half_report(const FourierSymbol& half, double p) {
  if (half.exact() || half.band() < 8) {
    BesovReport rep = analytic_besov_seminorm(half, p, {0.5, 0.75, 0.875, 1.0});
    if (half.exact()) {
      rep.verdict = Verdict::Converging;
      rep.rule = "trigonometric polynomial";
    }
    return rep;
  }
  std::vector<int> bands;
  for (int b = half.band(); b >= 1 && bands.size() < 4; b /= 2) bands.push_back(b);
  std::reverse(bands.begin(), bands.end());
  return besov_band_trend(half, p, bands);
}

}  // namespace

BesovReport analytic_besov_seminorm(const FourierSymbol& f, double p, const std::vector<double>& radii) {
  require_exponent(p);
  require_analytic(f);
  BesovReport rep;
  rep.p = p;
  rep.abscissae = radii;
  rep.trend = seminorm_partials(f, p, radii);
  rep.seminorm_partial = rep.trend.empty() ? 0.0 : rep.trend.back();
  rep.verdict = classify_trend(rep.trend);
  rep.rule = "radial increments";
  return rep;
}

BesovReport besov_band_trend(const FourierSymbol& f, double p, const std::vector<int>& bands) {
  require_exponent(p);
  require_analytic(f);
  BesovReport rep;
  rep.p = p;
  rep.basis = "band";
  for (std::size_t i = 0; i < bands.size(); ++i) {
    if (bands[i] < 0 || (i > 0 && bands[i] <= bands[i - 1]))
      throw Error(ErrorKind::Range, "bands must increase");
    rep.abscissae.push_back(bands[i]);
    rep.trend.push_back(seminorm_partials(truncate(f, bands[i]), p, {1.0}).front());
  }
  rep.seminorm_partial = rep.trend.empty() ? 0.0 : rep.trend.back();
  rep.verdict = classify_trend(rep.trend);
  rep.rule = "band increments";
  return rep;
}

BesovMembership besov_membership(const FourierSymbol& phi, double p) {
  require_exponent(p);
  const auto [f, g] = analytic_split(phi);
  auto report = [&](const FourierSymbol& half) {
    if (is_zero(half)) {
      BesovReport rep;
      rep.p = p;
      rep.verdict = Verdict::Converging;
      rep.rule = "zero";
      return rep;
    }
    return half_report(half, p);
  };
  return {report(f), report(g)};
}

SufficiencyReport almost_normal_sufficient(const FourierSymbol& phi, double p, double q) {
  SufficiencyReport rep;
  const bool bounded_variant = p == 1.0 && std::isinf(q) && q > 0;
  if (!bounded_variant) {
    if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q) ||
        std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
      throw Error(ErrorKind::Conjugate, "exponents must be finite Hoelder conjugates (or p = 1, q = inf)");
  }
  rep.imag_bounded_only = bounded_variant;
  rep.real_part = besov_membership(phi.real_part(), p);

  std::vector<Verdict> verdicts{rep.real_part.f_report.verdict, rep.real_part.g_report.verdict};
  if (bounded_variant) {
    // Im phi is bounded whenever its coefficient sum is finite.
    const bool bounded = std::isfinite(phi.imag_part().l1_norm() + phi.tail_bound());
    verdicts.push_back(bounded ? Verdict::Converging : Verdict::Inconclusive);
  } else {
    rep.imag_part = besov_membership(phi.imag_part(), q);
    verdicts.push_back(rep.imag_part.f_report.verdict);
    verdicts.push_back(rep.imag_part.g_report.verdict);
  }

  if (std::any_of(verdicts.begin(), verdicts.end(), [](Verdict v) { return v == Verdict::Diverging; }))
    rep.verdict = Sufficiency::NotMet;
  else if (std::all_of(verdicts.begin(), verdicts.end(), [](Verdict v) { return v == Verdict::Converging; }))
    rep.verdict = Sufficiency::Met;
  else
    rep.verdict = Sufficiency::Inconclusive;
  return rep;
}

JacobianIntegrability jacobian_integrability(const FourierSymbol& phi, const std::vector<double>& radii) {
  if (radii.empty()) throw Error(ErrorKind::Range, "radii must be nonempty");
  JacobianIntegrability out;
  out.radii = radii;
  const int angular = std::max(128, 16 * (phi.band() + 1));
  out.partials = integrate_disks(
      [&](double rho, double theta) {
        const auto [dz, dzbar] = phi.extension_derivatives(std::polar(rho, theta));
        return std::abs(std::norm(dz) - std::norm(dzbar));
      },
      radii, angular);

  const auto [f, g] = analytic_split(phi);
  const std::vector<double> last{radii.back()};
  const auto energy = [&](const FourierSymbol& h) {
    return integrate_disks(
               [&](double rho, double theta) { return std::norm(h.extension_derivatives(std::polar(rho, theta)).first); },
               last, angular)
        .front();
  };
  out.f_energy = energy(f);
  out.g_energy = energy(g);
  out.bound = 2.0 * std::sqrt(out.f_energy * out.g_energy);
  out.bound_applicable = out.f_energy > 0.0 && out.g_energy > 0.0;
  out.holds = out.partials.back() <= out.bound + 1e-9 * std::max(1.0, out.bound);
  return out;
}

double hankel_schatten_probe(const FourierSymbol& phi, double p, int n) {
  return schatten_norm(hankel_matrix(phi, n), p).value;
}

}  // namespace hh
