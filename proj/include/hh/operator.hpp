#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hh/errors.hpp"
#include "hh/polynomial.hpp"
#include "hh/symbol.hpp"

namespace hh {

using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Top-left N x N block of an operator on H^2 in the basis e_0, e_1, ...
struct TruncatedMatrix {
  Matrix entries;
  std::string provenance;
  /// Size of the top-left block known to coincide with the infinite operator.
  std::optional<Index> exact_block;
  bool self_adjoint = false;

  Index dim() const noexcept { return entries.rows(); }
};

/// Nonempty word over the letters X = T_{Re phi}, Y = T_{Im phi}.
class NCWord {
 public:
  enum class Letter { X, Y };

  explicit NCWord(std::vector<Letter> letters);
  /// Parses a string such as "XYX".
  static NCWord parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  Index length() const noexcept { return static_cast<Index>(letters_.size()); }

 private:
  std::vector<Letter> letters_;
};

/// Entries phi^(m - n).
TruncatedMatrix toeplitz_matrix(const FourierSymbol& phi, Index n);

/// Row l-1 enumerates e_{-l}: entry (l-1, n) = phi^(-l-n).
TruncatedMatrix hankel_matrix(const FourierSymbol& phi, Index n);

/// [T_phi^*, T_phi] from the coefficient sums
/// entry(m,n) = sum_{l>0} f^(m+l) conj(f^(n+l)) - g^(m+l) conj(g^(n+l)).
TruncatedMatrix self_commutator(const FourierSymbol& phi, Index n);

/// Exact top-left block of the product of Toeplitz letters.
TruncatedMatrix word_matrix(const FourierSymbol& phi, const NCWord& w, Index n);

/// Exact top-left block of p(X, Y), monomials x^i y^j ordered as X^i Y^j.
TruncatedMatrix polynomial_matrix(const FourierSymbol& phi, const BivariatePolynomial& p, Index n);

struct CommutatorTrace {
  cplx value;
  Index truncation;   // N used for the reported trace
  double stabilization_gap;  // |tr at N - tr at 2N|
};

/// tr [p(X,Y), q(X,Y)] for a finite-band symbol, exact up to rounding.
/// Throws StabilizationError if the trace moves by more than 1e-10
/// (relative once above 1) when the truncation is doubled.
CommutatorTrace commutator_trace(const FourierSymbol& phi, const BivariatePolynomial& p,
                                 const BivariatePolynomial& q, Index min_truncation = 0);

/// Support size bound of [p(X,Y), q(X,Y)] used by commutator_trace.
Index commutator_truncation(const FourierSymbol& phi, const BivariatePolynomial& p,
                            const BivariatePolynomial& q);

template <typename Derived>
double schatten_norm(const Eigen::MatrixBase<Derived>& a, double p) {
  if (!(p >= 1.0)) throw Error(ErrorKind::Range, "Schatten exponent must be >= 1");
  if (a.size() == 0) return 0.0;
  const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic,
                                                         Eigen::Dynamic>>(a).singularValues();
  if (p == 1.0) return sv.sum();
  if (p == 2.0) return sv.norm();
  return sv.array().pow(p).sum() == 0.0 ? 0.0 : std::pow(sv.array().pow(p).sum(), 1.0 / p);
}

struct SchattenNorm {
  double value;
  /// Set when the matrix is larger than its exact block: the value is then
  /// the norm of a compression, a lower bound for the operator.
  bool lower_bound;
};

/// Schatten norm on the exact block of a truncation.
SchattenNorm schatten_norm(const TruncatedMatrix& a, double p);

/// tr(A B) without forming the product.
template <typename A, typename B>
auto trace_of_product(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

/// diag(1, r, r^2, ..., r^{n-1}).
TruncatedMatrix diag_r(double r, Index n);

/// Embeds A shifted down the diagonal by l - 1 places (l >= 2).
TruncatedMatrix shift_conjugate(const TruncatedMatrix& a, Index l);

struct ExtractingR {
  cplx lhs;
  cplx rhs;
};

/// Both sides of tr([T_{phi_r}^*, T_{phi_r}] X)
///   = r^2 tr(C R X R) - sum_{l>=2} r^{2l-2} (1 - r^2) tr(C shift(R X R, l)),
/// C = [T_phi^*, T_phi], for a finite corner X.
ExtractingR extracting_r_check(const FourierSymbol& phi, const Matrix& x, double r);

}  // namespace hh
