#pragma once

#include <vector>

#include <Eigen/Dense>

namespace hh {

/// Bilateral weighted shift W e_n = alpha_n e_{n+1} with weights given on
/// the window [-W, W] and constant limits outside it.
struct WeightedShiftSpec {
  int window = 0;
  std::vector<double> weights;  // alpha_{-W}, ..., alpha_W
  double alpha_minus = 0.0;
  double alpha_plus = 1.0;

  WeightedShiftSpec() = default;
  WeightedShiftSpec(int window, std::vector<double> weights, double alpha_minus, double alpha_plus);

  double alpha(int n) const noexcept;

  /// alpha_n = alpha_minus for n < 0 and alpha_plus for n >= 0.
  static WeightedShiftSpec single_jump(double alpha_minus, double alpha_plus);
};

/// sum_n |alpha_n^2 - alpha_{n+1}^2|; finite exactly when W is almost normal.
double shift_almost_normality(const WeightedShiftSpec& spec);

/// Diagonal of [W^*, W] on indices lo..hi: alpha_n^2 - alpha_{n-1}^2.
Eigen::VectorXd shift_self_commutator_diagonal(const WeightedShiftSpec& spec, int lo, int hi);

/// Dense [W^*, W] on indices lo..hi, assembled from a truncation one index
/// wider on each side.
Eigen::MatrixXd shift_self_commutator(const WeightedShiftSpec& spec, int lo, int hi);

/// ||P_W|| = (alpha_plus^2 - alpha_minus^2) / 2; OrderError when alpha_minus > alpha_plus.
double shift_hh_total_variation(const WeightedShiftSpec& spec);

/// Weights beta^k: alpha_plus on [0, k], alpha_minus on [-k, -1], alpha elsewhere.
WeightedShiftSpec perturbed_spec(const WeightedShiftSpec& spec, int k);

struct PerturbationNorm {
  double closed_form;
  double matrix_value;
};

/// Trace norm of the self-commutator of the beta^k shift, in closed form and
/// from the windowed matrix on [-k-2, k+2]. Requires k >= W.
PerturbationNorm perturbation_family_norm(const WeightedShiftSpec& spec, int k);

struct CesaroCommutator {
  double trace_partial;
  bool psd_check;
  double min_eigenvalue;
  Eigen::MatrixXd inner_block;
};

/// [C_0^*, C_0] on the leading N/2 x N/2 block, assembled from the N x N
/// truncation of the Cesaro matrix (C_0)_{mn} = 1/(m+1), n <= m.
CesaroCommutator cesaro_commutator(int n);

/// ||[(T(1-P_n))^*, T(1-P_n)]||_1 for n = 0 .. dim(T), P_n the projection
/// onto the first n basis vectors.
std::vector<double> hilbert_schmidt_tail_norms(const Eigen::MatrixXcd& t);

/// sum_{k >= n} 1/(k+1)^2.
double inverse_square_tail(int n);

}  // namespace hh
