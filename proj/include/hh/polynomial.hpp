#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace hh {

/// Real polynomial p(x, y) = sum c_ij x^i y^j with exact coefficient arithmetic.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::map<Exponents, double> coeffs);

  static BivariatePolynomial x() { return BivariatePolynomial({{{1, 0}, 1.0}}); }
  static BivariatePolynomial y() { return BivariatePolynomial({{{0, 1}, 1.0}}); }
  static BivariatePolynomial constant(double c) { return BivariatePolynomial({{{0, 0}, c}}); }
  static BivariatePolynomial monomial(int i, int j, double c = 1.0) {
    return BivariatePolynomial({{{i, j}, c}});
  }

  /// Parses "poly:x^2*y+3*x"; the "poly:" prefix is optional, terms are
  /// joined by + or -, each term is coeff*x^i*y^j with any factor omitted.
  static BivariatePolynomial parse(std::string_view text);

  const std::map<Exponents, double>& terms() const noexcept { return coeffs_; }
  double coeff(int i, int j) const noexcept;

  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  double operator()(double x, double y) const noexcept;

  BivariatePolynomial dx() const;
  BivariatePolynomial dy() const;

  std::string to_string() const;

  friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(double s, const BivariatePolynomial& a);
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) = default;

 private:
  void prune();

  std::map<Exponents, double> coeffs_;
};

/// J(p,q) = p_x q_y - q_x p_y.
BivariatePolynomial jacobian_bracket(const BivariatePolynomial& p, const BivariatePolynomial& q);

}  // namespace hh
