#include <cmath>
#include <limits>
#include <numbers>

#include "hh/besov.hpp"
#include "hh/operator.hpp"
#include "support.hpp"

using namespace hh;
using hh::test::sym;

namespace {

const double kPi = std::numbers::pi;
const double kInf = std::numeric_limits<double>::infinity();

/// f(k) = c_k for k = 1..n, with an unknown tail.
FourierSymbol series(int n, auto coeff, double tail = kInf) {
  std::map<int, cplx> c;
  for (int k = 1; k <= n; ++k) c[k] = coeff(k);
  return FourierSymbol(c, tail);
}

/// Polar closed form: integral of |F'|^2 over |z| < R is pi sum k |f(k)|^2 R^{2k}.
double dirichlet(const FourierSymbol& f, double radius) {
  double s = 0.0;
  for (int k = 1; k <= f.band(); ++k) s += kPi * k * std::norm(f.coeff(k)) * std::pow(radius, 2 * k);
  return s;
}

}  // namespace

TEST(ClassifyTrend, Rules) {
  EXPECT_EQ(classify_trend({1, 2}), Verdict::Inconclusive);
  EXPECT_EQ(classify_trend({1, 2, 2.5}), Verdict::Converging);
  EXPECT_EQ(classify_trend({1, 2, 3}), Verdict::Diverging);
  EXPECT_EQ(classify_trend({1, 2, 4}), Verdict::Diverging);
  EXPECT_EQ(classify_trend({1, 2, 2.7}), Verdict::Inconclusive);
  EXPECT_EQ(classify_trend({0, 0, 0}), Verdict::Converging);
}

TEST(Seminorm, Examples) {
  auto rep = analytic_besov_seminorm(symbols::monomial(1), 2.0, {0.5, 1.0});
  EXPECT_NEAR(rep.seminorm_partial, kPi, 1e-10);
  EXPECT_NEAR(rep.trend[0], kPi / 4, 1e-10);
  rep = analytic_besov_seminorm(symbols::constant(3.0), 2.0, {0.5, 0.9, 1.0});
  EXPECT_EQ(rep.seminorm_partial, 0.0);
  EXPECT_HH_ERROR(analytic_besov_seminorm(symbols::monomial(-1), 2.0, {1.0}), ErrorKind::Domain);
  EXPECT_HH_ERROR(analytic_besov_seminorm(symbols::monomial(1), 0.5, {1.0}), ErrorKind::Range);
}

TEST(Seminorm, MonomialIdentity) {
  for (int k = 1; k <= 10; ++k)
    EXPECT_NEAR(analytic_besov_seminorm(symbols::monomial(k), 2.0, {1.0}).seminorm_partial, kPi * k, 1e-6) << k;
}

TEST(Seminorm, PolarClosedFormAtInteriorRadii) {
  const auto f = sym({{1, cplx(0.3, 0.1)}, {2, -0.5}, {5, cplx(0, 0.25)}});
  const std::vector<double> radii{0.3, 0.6, 0.9, 1.0};
  const auto rep = analytic_besov_seminorm(f, 2.0, radii);
  for (std::size_t i = 0; i < radii.size(); ++i) EXPECT_NEAR(rep.trend[i], dirichlet(f, radii[i]), 1e-9);
}

TEST(Seminorm, OtherExponents) {
  // p = 1 uses |F''|: for z^2 it is 2, integrating to 2 pi.
  EXPECT_NEAR(analytic_besov_seminorm(symbols::monomial(2), 1.0, {1.0}).seminorm_partial, 2 * kPi, 1e-6);
  // p = 3 for z: integral of (1 - rho^2) over the disk is pi / 2.
  EXPECT_NEAR(analytic_besov_seminorm(symbols::monomial(1), 3.0, {1.0}).seminorm_partial, kPi / 2, 1e-8);
  // p = 1.5 for z: weight (1 - rho^2)^{-1/2} integrates to 2 pi.
  EXPECT_NEAR(analytic_besov_seminorm(symbols::monomial(1), 1.5, {1.0}).seminorm_partial, 2 * kPi, 1e-6);
}

TEST(Seminorm, AddingCoefficientsNeverDecreasesPartials) {
  const auto f = sym({{1, 0.5}, {3, 0.2}});
  const auto g = sym({{1, 0.5}, {3, 0.2}, {4, cplx(0.1, -0.3)}});
  const std::vector<double> radii{0.25, 0.5, 0.75, 1.0};
  const auto a = analytic_besov_seminorm(f, 2.0, radii), b = analytic_besov_seminorm(g, 2.0, radii);
  for (std::size_t i = 0; i < radii.size(); ++i) EXPECT_GE(b.trend[i], a.trend[i]);
  for (std::size_t i = 1; i < radii.size(); ++i) EXPECT_GE(a.trend[i], a.trend[i - 1]);
}

TEST(BandTrend, HarmonicFamilyDiverges) {
  const auto f = series(40, [](int k) { return 1.0 / k; });
  const auto rep = besov_band_trend(f, 2.0, {5, 10, 20, 40});
  double h = 0.0;
  for (int k = 1; k <= 40; ++k) h += 1.0 / k;
  EXPECT_NEAR(rep.seminorm_partial, kPi * h, 1e-6);
  EXPECT_EQ(rep.verdict, Verdict::Diverging);
  EXPECT_EQ(rep.basis, "band");
  EXPECT_HH_ERROR(besov_band_trend(f, 2.0, {10, 5}), ErrorKind::Range);
}

TEST(BandTrend, CubicFamilyConverges) {
  const auto rep = besov_band_trend(series(40, [](int k) { return std::pow(k, -3.0); }), 2.0, {5, 10, 20, 40});
  EXPECT_EQ(rep.verdict, Verdict::Converging);
}

TEST(Membership, Examples) {
  auto m = besov_membership(sym({{1, 1.0}, {2, 0.3}}), 2.0);
  EXPECT_EQ(m.g_report.seminorm_partial, 0.0);
  EXPECT_EQ(m.g_report.verdict, Verdict::Converging);

  m = besov_membership(sym({{1, 1.0}, {-1, 1.0}}), 2.0);
  EXPECT_NEAR(m.f_report.seminorm_partial, kPi, 1e-8);
  EXPECT_NEAR(m.g_report.seminorm_partial, kPi, 1e-8);
  EXPECT_EQ(m.f_report.verdict, Verdict::Converging);

  m = besov_membership(symbols::constant(2.0), 2.0);
  EXPECT_EQ(m.f_report.seminorm_partial, 0.0);
  EXPECT_EQ(m.g_report.seminorm_partial, 0.0);
}

TEST(Membership, TruncatedHarmonicSeriesIsFlagged) {
  const auto m = besov_membership(series(40, [](int k) { return 1.0 / k; }), 2.0);
  EXPECT_EQ(m.f_report.verdict, Verdict::Diverging);
}

TEST(Sufficiency, Examples) {
  const auto phi = sym({{1, 1.0}, {2, cplx(0.4, 0.2)}, {-1, 0.2}});
  EXPECT_EQ(almost_normal_sufficient(phi, 2.0, 2.0).verdict, Sufficiency::Met);
  EXPECT_EQ(almost_normal_sufficient(phi, 3.0, 1.5).verdict, Sufficiency::Met);
  const auto bounded = almost_normal_sufficient(phi, 1.0, kInf);
  EXPECT_EQ(bounded.verdict, Sufficiency::Met);
  EXPECT_TRUE(bounded.imag_bounded_only);

  const auto harmonic = series(40, [](int k) { return 1.0 / k; });
  EXPECT_EQ(almost_normal_sufficient(harmonic, 2.0, 2.0).verdict, Sufficiency::NotMet);

  EXPECT_HH_ERROR(almost_normal_sufficient(phi, 3.0, 1.4), ErrorKind::Conjugate);
  EXPECT_HH_ERROR(almost_normal_sufficient(phi, 1.0, 2.0), ErrorKind::Conjugate);
}

TEST(JacobianIntegrability, Examples) {
  auto j = jacobian_integrability(sym({{1, 1.0}, {-1, 0.5}}), {0.5, 1.0});
  EXPECT_NEAR(j.partials.back(), 0.75 * kPi, 1e-8);
  EXPECT_NEAR(j.bound, kPi, 1e-8);
  EXPECT_TRUE(j.bound_applicable);
  EXPECT_TRUE(j.holds);

  j = jacobian_integrability(sym({{1, 1.0}, {2, 0.5}}), {1.0});
  EXPECT_NEAR(j.partials.back(), dirichlet(sym({{1, 1.0}, {2, 0.5}}), 1.0), 1e-8);
  EXPECT_FALSE(j.bound_applicable);

  j = jacobian_integrability(symbols::constant(1.0), {1.0});
  EXPECT_EQ(j.partials.back(), 0.0);
}

TEST(JacobianIntegrability, BoundIsReportedNotAssumed) {
  // F = z, G = 0.1 z: |J| integrates to 0.99 pi, far above 2 |F'| |G'| = 0.2 pi.
  const auto j = jacobian_integrability(sym({{1, 1.0}, {-1, 0.1}}), {1.0});
  EXPECT_NEAR(j.partials.back(), 0.99 * kPi, 1e-8);
  EXPECT_NEAR(j.bound, 0.2 * kPi, 1e-8);
  EXPECT_FALSE(j.holds);
}

TEST(HankelProbe, Examples) {
  EXPECT_EQ(hankel_schatten_probe(sym({{1, 1.0}, {3, 2.0}}), 2.0, 5), 0.0);
  for (double p : {1.0, 2.0, 4.0}) EXPECT_NEAR(hankel_schatten_probe(symbols::monomial(-1), p, 4), 1.0, 1e-14);
}

TEST(HankelProbe, HilbertSchmidtIdentity) {
  std::mt19937 rng(61);
  for (int band = 1; band <= 6; ++band) {
    const auto phi = hh::test::random_symbol(rng, band);
    double oracle = 0.0;
    for (int k = 1; k <= band; ++k) oracle += k * std::norm(phi.coeff(-k));
    const double hs = schatten_norm(hankel_matrix(phi, band + 2), 2.0).value;
    EXPECT_NEAR(hs * hs, oracle, 1e-12);
  }
}

TEST(HankelProbe, GrowthTracksTheBesovSide) {
  // Hilbert-Schmidt norms of N x N blocks for f(-k) = k^{-s}: sum_k k^{1-2s}
  // diverges for s = 0.6 and converges for s = 1.5.
  auto increments = [](double s) {
    std::vector<double> norms;
    for (int n : {16, 32, 64, 128}) {
      std::map<int, cplx> c;
      for (int k = 1; k <= 2 * n; ++k) c[-k] = std::pow(k, -s);
      norms.push_back(hankel_schatten_probe(FourierSymbol(c), 2.0, n));
    }
    return std::vector<double>{norms[1] - norms[0], norms[2] - norms[1], norms[3] - norms[2]};
  };
  const auto slow = increments(0.6), fast = increments(1.5);
  EXPECT_GT(slow[2], slow[1]);
  EXPECT_GT(slow[1], slow[0]);
  EXPECT_LT(fast[2], 0.75 * fast[1]);
  EXPECT_LT(fast[1], 0.75 * fast[0]);
}
