#include <cmath>
#include <numbers>
#include <random>

#include "hh/measure.hpp"
#include "support.hpp"

using namespace hh;
using hh::test::random_symbol_l1;
using hh::test::sym;

namespace {

const cplx I(0, 1);
const double kPi = std::numbers::pi;
const auto X = BivariatePolynomial::x();
const auto Y = BivariatePolynomial::y();

}  // namespace

TEST(Density, ShiftIsIndicatorOfDisk) {
  const auto d = hh_density(symbols::monomial(1), 1.0, GridSpec::square(2.0, 200));
  for (int j = 0; j < 200; j += 3)
    for (int i = 0; i < 200; i += 3)
      if (const auto v = d.value(i, j)) {
        const bool inside = std::hypot(d.multiplicity.grid.x(i), d.multiplicity.grid.y(j)) < 1.0;
        EXPECT_EQ(*v, inside ? 1.0 / (2 * kPi * I) : cplx{});
      }
}

TEST(Density, ConstantSymbolVanishes) {
  const auto d = hh_density(symbols::constant(cplx(0.3, 0.2)), 1.0, GridSpec::square(1.0, 50));
  for (int v : d.multiplicity.values) EXPECT_EQ(v, 0);
  EXPECT_EQ(total_variation(d).value, 0.0);
}

TEST(Density, ConjugateShiftIsNegative) {
  const auto d = hh_density(symbols::monomial(-1), 1.0, GridSpec::square(2.0, 40));
  const auto v = d.value(20, 20);
  ASSERT_TRUE(v.has_value());
  EXPECT_NEAR(std::abs(*v + 1.0 / (2 * kPi * I)), 0.0, 1e-16);
}

TEST(Density, PropagatesTail) {
  const auto d = hh_density(sym({{1, 1.0}}, 0.01), 0.9, GridSpec::square(1.5, 20));
  EXPECT_DOUBLE_EQ(d.tail_note, 0.01 * 0.81);
  EXPECT_DOUBLE_EQ(d.r_used, 0.9);
}

TEST(TraceFormula, Shift) {
  const auto rep = trace_formula_check(symbols::monomial(1), X, Y, GridSpec::square(1.5, 400));
  EXPECT_NEAR(std::abs(rep.lhs + 0.5 * I), 0.0, 1e-12);
  EXPECT_LE(std::abs(rep.rhs + 0.5 * I), 1e-3);
  EXPECT_NEAR(rep.abs_err, std::abs(rep.lhs - rep.rhs), 1e-14);
  EXPECT_GT(rep.masked_area_fraction, 0.0);
  EXPECT_EQ(rep.grid.nx, 400);
}

TEST(TraceFormula, EqualPolynomialsGiveExactZeros) {
  const auto p = X * X * Y + 3.0 * X;
  const auto rep = trace_formula_check(sym({{1, 1.0}, {-1, 0.3}}), p, p, GridSpec::square(1.8, 100));
  EXPECT_NEAR(std::abs(rep.lhs), 0.0, 1e-12);
  EXPECT_EQ(rep.rhs, cplx{});
}

TEST(TraceFormula, GeneralSymbolQuadratic) {
  const auto phi = sym({{1, 1.0}, {2, 0.4}, {-1, 0.2}});
  const auto rep = trace_formula_check(phi, X * X, Y, default_box(phi));
  EXPECT_LT(rep.abs_err, 5e-3);
}

TEST(TraceFormula, SmoothedSymbolUsesPhiR) {
  const auto phi = symbols::monomial(1);
  const auto rep = trace_formula_check(phi, X, Y, GridSpec::square(1.5, 400), 0.9);
  EXPECT_NEAR(std::abs(rep.lhs + 0.405 * I), 0.0, 1e-12);
  EXPECT_LE(rep.abs_err, 2e-3);
}

TEST(TraceFormula, Errors) {
  EXPECT_HH_ERROR(trace_formula_check(symbols::monomial(1), X, Y, GridSpec::square(0.9, 50)), ErrorKind::Range);
  EXPECT_HH_ERROR(trace_formula_check(sym({{1, 1.0}}, 1e-3), X, Y, GridSpec::square(1.5, 50)), ErrorKind::Tail);
  // Curve radius 1/sqrt 2 passes through all four cell centers of a 2x2 grid.
  EXPECT_HH_ERROR(trace_formula_check(symbols::monomial(1, std::sqrt(0.5)), X, Y, GridSpec::square(1.0, 2)),
                  ErrorKind::MaskCoverage);
}

TEST(TraceFormula, ResidualOverRandomSuite) {
  std::mt19937 rng(41);
  const std::vector<std::pair<BivariatePolynomial, BivariatePolynomial>> pairs = {
      {X, Y}, {X * X, Y}, {X, Y * Y}, {X * Y, X}, {X + 0.5 * Y, X * X}};
  for (int t = 0; t < 6; ++t) {
    const auto phi = random_symbol_l1(rng, 1 + t % 3, 1.2);
    for (const auto& [p, q] : pairs) {
      const auto rep = trace_formula_check(phi, p, q, default_box(phi, 300));
      EXPECT_LE(rep.abs_err, std::max(5e-3, 3 * rep.quad_err_estimate)) << p.to_string() << " " << q.to_string();
    }
  }
}

TEST(TotalVariation, Examples) {
  EXPECT_NEAR(total_variation(hh_density(symbols::monomial(1), 1.0, GridSpec::square(1.5, 400))).value, 0.5, 2e-3);
  EXPECT_NEAR(total_variation(hh_density(symbols::monomial(2), 1.0, GridSpec::square(1.5, 400))).value, 1.0, 2e-3);
  const auto tv = total_variation(hh_density(symbols::monomial(1), 1.0, GridSpec::square(1.5, 100)));
  EXPECT_LT(tv.valid_only, tv.value);
  EXPECT_GT(tv.masked_area_fraction, 0.0);
}

TEST(BrownBound, Examples) {
  auto b = brown_bound_check(symbols::monomial(1), 1.0, GridSpec::square(1.5, 400));
  EXPECT_NEAR(b.tv, 0.5, 2e-3);
  EXPECT_NEAR(b.bound, 0.5, 1e-14);
  EXPECT_TRUE(b.ok);

  b = brown_bound_check(sym({{1, cplx(0.3, 0.4)}, {-1, cplx(0.3, -0.4)}}), 1.0, GridSpec::square(1.5, 100));
  EXPECT_EQ(b.tv, 0.0);
  EXPECT_NEAR(b.bound, 0.0, 1e-15);
  EXPECT_TRUE(b.ok);

  b = brown_bound_check(sym({{1, 1.0}, {-1, 0.5}}), 1.0, GridSpec::square(2.0, 400));
  EXPECT_NEAR(b.tv, 0.375, 2e-3);
  EXPECT_NEAR(b.bound, 0.375, 1e-14);
  EXPECT_TRUE(b.ok);
}

TEST(BrownBound, HoldsOnRandomSymbols) {
  std::mt19937 rng(42);
  for (int t = 0; t < 6; ++t) {
    const auto phi = random_symbol_l1(rng, 1 + t % 3, 1.0);
    for (double r : {0.5, 1.0}) EXPECT_TRUE(brown_bound_check(phi, r, default_box(phi, 200)).ok);
  }
}

TEST(HyponormalEquality, AnalyticSymbols) {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 4; ++t) {
    std::map<int, cplx> c;
    for (int k = 0; k <= 3; ++k) c[k] = {u(rng), u(rng)};
    const FourierSymbol f(c);
    const auto comm = self_commutator(f, 3);
    double oracle = 0.0;  // direct diagonal sum of k |f(k)|^2
    for (int k = 1; k <= 3; ++k) oracle += k * std::norm(c[k]);
    const double trace_norm = schatten_norm(comm.entries, 1.0);
    EXPECT_NEAR(trace_norm, oracle, 1e-12);
    EXPECT_NEAR(comm.entries.trace().real(), oracle, 1e-12);
    EXPECT_GE(Eigen::SelfAdjointEigenSolver<Matrix>(comm.entries).eigenvalues().minCoeff(), -1e-12);

    const auto d = hh_density(f, 1.0, default_box(f, 300));
    for (std::size_t k = 0; k < d.multiplicity.values.size(); ++k)
      if (d.multiplicity.valid[k]) {
        EXPECT_GE(d.multiplicity.values[k], 0);
      }
    const auto fine = total_variation(hh_density(f, 1.0, default_box(f, 600))).value;
    const auto tv = total_variation(d).value;
    EXPECT_NEAR(2 * tv, trace_norm, 2e-3 + 2 * std::abs(fine - tv));
  }
}

TEST(IndexCheck, Examples) {
  auto c = index_check(symbols::monomial(1), 0.0);
  EXPECT_EQ(c.wind, 1);
  EXPECT_NEAR(std::abs(c.density_value - 1.0 / (2 * kPi * I)), 0.0, 1e-16);
  EXPECT_TRUE(c.ok);

  c = index_check(symbols::monomial(1), 3.0);
  EXPECT_EQ(c.wind, 0);
  EXPECT_EQ(c.density_value, cplx{});
  EXPECT_TRUE(c.ok);

  c = index_check(symbols::monomial(2), 0.3);
  EXPECT_EQ(c.wind, 2);
  EXPECT_NEAR(std::abs(c.density_value - 2.0 / (2 * kPi * I)), 0.0, 1e-16);
  EXPECT_TRUE(c.ok);

  EXPECT_HH_ERROR(index_check(symbols::monomial(1), 1.0), ErrorKind::WindingUndefined);
}

TEST(SmoothedMomentProbe, Shift) {
  const auto t = main_theorem_probe(symbols::monomial(1), X, Y, {0.9, 0.99}, GridSpec::square(1.5, 400));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_NEAR(std::abs(t.rows[0].moment + 0.405 * I), 0.0, 2e-3);
  EXPECT_NEAR(std::abs(t.rows[1].moment + 0.49005 * I), 0.0, 2e-3);
  EXPECT_NEAR(std::abs(t.rows[1].lhs_smoothed + 0.49005 * I), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(t.lhs + 0.5 * I), 0.0, 1e-12);
  EXPECT_FALSE(t.rows[0].difference.has_value());
  EXPECT_TRUE(t.rows[1].difference.has_value());
}

TEST(SmoothedMomentProbe, EqualPolynomialsGiveZeros) {
  const auto t = main_theorem_probe(sym({{1, 1.0}, {-2, 0.3}}), X * Y, X * Y, {0.5, 0.8}, GridSpec::square(1.8, 100));
  for (const auto& row : t.rows) EXPECT_EQ(row.moment, cplx{});
}

TEST(SmoothedMomentProbe, TruncationCarriesTail) {
  std::map<int, cplx> c;
  double tail = 0.0;
  for (int k = 1; k <= 20; ++k) c[k] = std::pow(k, -3.0);
  for (int k = 21; k < 100000; ++k) tail += std::pow(k, -3.0);
  const auto t = main_theorem_probe(FourierSymbol(c, tail), X, Y, {0.9, 0.99, 0.999}, default_box(FourierSymbol(c), 300));
  EXPECT_DOUBLE_EQ(t.tail_bound, tail);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_LT(*t.rows[2].difference, *t.rows[1].difference);
}
