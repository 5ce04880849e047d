#pragma once

#include <cmath>
#include <map>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "hh/errors.hpp"
#include "hh/symbol.hpp"

#define EXPECT_HH_ERROR(expr, expected_kind)                              \
  do {                                                                    \
    try {                                                                 \
      (void)(expr);                                                       \
      ADD_FAILURE() << "expected " << hh::to_string(expected_kind);       \
    } catch (const hh::Error& e) {                                        \
      EXPECT_EQ(e.kind(), expected_kind) << e.what();                     \
    }                                                                     \
  } while (0)

namespace hh::test {

inline FourierSymbol sym(std::map<int, cplx> c, double tail = 0.0) { return FourierSymbol(c, tail); }

/// Random finite-band symbol with coefficients uniform in the unit disk.
inline FourierSymbol random_symbol(std::mt19937& rng, int band) {
  std::uniform_real_distribution<double> rad(0.0, 1.0), ang(0.0, 2 * M_PI);
  std::map<int, cplx> c;
  for (int k = -band; k <= band; ++k) c[k] = std::polar(std::sqrt(rad(rng)), ang(rng));
  return FourierSymbol(c);
}

/// Scaled so that sum |c| = l1.
inline FourierSymbol random_symbol_l1(std::mt19937& rng, int band, double l1) {
  const auto s = random_symbol(rng, band);
  return cplx(l1 / s.l1_norm()) * s;
}

/// Dense Toeplitz block straight from the coefficient table.
inline Eigen::MatrixXcd dense_toeplitz(const FourierSymbol& phi, int n) {
  Eigen::MatrixXcd t(n, n);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) t(m, k) = phi.coeff(m - k);
  return t;
}

/// Dense Hankel block: row l-1 holds phi^(-l-n).
inline Eigen::MatrixXcd dense_hankel(const FourierSymbol& phi, int rows, int cols) {
  Eigen::MatrixXcd h(rows, cols);
  for (int l = 1; l <= rows; ++l)
    for (int n = 0; n < cols; ++n) h(l - 1, n) = phi.coeff(-l - n);
  return h;
}

}  // namespace hh::test
