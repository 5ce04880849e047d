#include "hh/gallery.hpp"

#include <cmath>

#include "hh/errors.hpp"
#include "hh/operator.hpp"

namespace hh {

WeightedShiftSpec::WeightedShiftSpec(int window_, std::vector<double> weights_, double minus, double plus)
    : window(window_), weights(std::move(weights_)), alpha_minus(minus), alpha_plus(plus) {
  if (window < 0 || weights.size() != static_cast<std::size_t>(2 * window + 1))
    throw Error(ErrorKind::Domain, "weight table must cover the window [-W, W]");
  for (double w : weights)
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorKind::Domain, "weights must be finite and nonnegative");
  if (!(minus >= 0.0) || !(plus >= 0.0)) throw Error(ErrorKind::Domain, "limits must be nonnegative");
}

double WeightedShiftSpec::alpha(int n) const noexcept {
  if (n < -window) return alpha_minus;
  if (n > window) return alpha_plus;
  return weights[static_cast<std::size_t>(n + window)];
}

WeightedShiftSpec WeightedShiftSpec::single_jump(double alpha_minus, double alpha_plus) {
  return WeightedShiftSpec(0, {alpha_plus}, alpha_minus, alpha_plus);
}

double shift_almost_normality(const WeightedShiftSpec& spec) {
  double s = 0.0;
  for (int n = -spec.window - 1; n <= spec.window; ++n) {
    const double a = spec.alpha(n), b = spec.alpha(n + 1);
    s += std::abs(a * a - b * b);
  }
  return s;
}

Eigen::VectorXd shift_self_commutator_diagonal(const WeightedShiftSpec& spec, int lo, int hi) {
  Eigen::VectorXd d(hi - lo + 1);
  for (int n = lo; n <= hi; ++n) {
    const double a = spec.alpha(n), b = spec.alpha(n - 1);
    d(n - lo) = a * a - b * b;
  }
  return d;
}

Eigen::MatrixXd shift_self_commutator(const WeightedShiftSpec& spec, int lo, int hi) {
  if (hi < lo) throw Error(ErrorKind::Range, "empty index window");
  const int first = lo - 1;
  const int size = hi - lo + 3;
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(size, size);
  for (int c = 0; c + 1 < size; ++c) w(c + 1, c) = spec.alpha(first + c);
  const Eigen::MatrixXd comm = w.transpose() * w - w * w.transpose();
  return comm.block(1, 1, size - 2, size - 2);
}

double shift_hh_total_variation(const WeightedShiftSpec& spec) {
  if (spec.alpha_minus > spec.alpha_plus)
    throw Error(ErrorKind::Order, "only alpha_minus <= alpha_plus is treated");
  return (spec.alpha_plus * spec.alpha_plus - spec.alpha_minus * spec.alpha_minus) / 2.0;
}

WeightedShiftSpec perturbed_spec(const WeightedShiftSpec& spec, int k) {
  const int window = std::max(k + 1, spec.window);
  std::vector<double> w(static_cast<std::size_t>(2 * window + 1));
  for (int n = -window; n <= window; ++n) {
    double v = spec.alpha(n);
    if (n >= 0 && n <= k) v = spec.alpha_plus;
    else if (n < 0 && n >= -k) v = spec.alpha_minus;
    w[static_cast<std::size_t>(n + window)] = v;
  }
  return WeightedShiftSpec(window, std::move(w), spec.alpha_minus, spec.alpha_plus);
}

PerturbationNorm perturbation_family_norm(const WeightedShiftSpec& spec, int k) {
  if (k < spec.window) throw Error(ErrorKind::Window, "k must be at least the window half-width");
  auto sq = [](double v) { return v * v; };
  const double ap = sq(spec.alpha_plus), am = sq(spec.alpha_minus);

  double closed = std::abs(ap - am) + std::abs(ap - sq(spec.alpha(k + 1))) + std::abs(am - sq(spec.alpha(-k - 1)));
  // Remaining jumps of the original weights, outside the perturbed block; they vanish past the window.
  for (int n = -spec.window - 1; n <= -k - 2; ++n) closed += std::abs(sq(spec.alpha(n)) - sq(spec.alpha(n + 1)));
  for (int n = k + 1; n <= spec.window; ++n) closed += std::abs(sq(spec.alpha(n)) - sq(spec.alpha(n + 1)));

  const Eigen::MatrixXd comm = shift_self_commutator(perturbed_spec(spec, k), -k - 2, k + 2);
  return {closed, schatten_norm(comm, 1.0)};
}

double inverse_square_tail(int n) {
  // Recurrence up to x >= 20, then the asymptotic series of the trigamma function at x = n + 1.
  double x = n + 1.0, acc = 0.0;
  while (x < 20.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double x2 = x * x;
  const double series = 1.0 / x + 1.0 / (2.0 * x2) +
                        (1.0 / 6.0 - (1.0 / 30.0 - (1.0 / 42.0 - 1.0 / (30.0 * x2)) / x2) / x2) / (x2 * x);
  return acc + series;
}

CesaroCommutator cesaro_commutator(int n) {
  if (n < 4) throw Error(ErrorKind::Range, "Cesaro truncation needs N >= 4");
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m < n; ++m) c.row(m).head(m + 1).setConstant(1.0 / (m + 1));
  const int inner = n / 2;

  // C C^* is exact on the leading block because C is lower triangular. C^* C
  // misses sum_{k>=N} C_km C_kn = sum_{k>=N} 1/(k+1)^2 in every entry.
  Eigen::MatrixXd ctc = (c.transpose() * c).topLeftCorner(inner, inner);
  ctc.array() += inverse_square_tail(n);
  const Eigen::MatrixXd cct = (c * c.transpose()).topLeftCorner(inner, inner);

  CesaroCommutator out;
  out.inner_block = ctc - cct;
  out.trace_partial = out.inner_block.trace();
  out.min_eigenvalue = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(out.inner_block, Eigen::EigenvaluesOnly)
                           .eigenvalues()
                           .minCoeff();
  out.psd_check = out.min_eigenvalue >= -1e-10;
  return out;
}

std::vector<double> hilbert_schmidt_tail_norms(const Eigen::MatrixXcd& t) {
  std::vector<double> norms;
  const Index d = t.cols();
  for (Index n = 0; n <= d; ++n) {
    Eigen::MatrixXcd tail = t;
    tail.leftCols(n).setZero();
    norms.push_back(schatten_norm(tail.adjoint() * tail - tail * tail.adjoint(), 1.0));
  }
  return norms;
}

}  // namespace hh
