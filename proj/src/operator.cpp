#include "hh/operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hh {

NCWord::NCWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(ErrorKind::Domain, "word must be nonempty");
}

NCWord NCWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  for (char ch : text) {
    if (ch == 'X' || ch == 'x') letters.push_back(Letter::X);
    else if (ch == 'Y' || ch == 'y') letters.push_back(Letter::Y);
    else throw Error(ErrorKind::Schema, "word letters must be X or Y");
  }
  return NCWord(std::move(letters));
}

namespace {

void require_dim(Index n) {
  if (n < 1) throw Error(ErrorKind::Range, "truncation size must be >= 1");
}

void require_exact(const FourierSymbol& phi) {
  if (!phi.exact())
    throw Error(ErrorKind::Tail, "operation needs an exact finite-band symbol (tail_bound = 0)");
}

Matrix toeplitz_block(const FourierSymbol& phi, Index n) {
  Matrix t = Matrix::Zero(n, n);
  const Index k = phi.band();
  for (Index m = 0; m < n; ++m)
    for (Index c = std::max<Index>(0, m - k); c <= std::min(n - 1, m + k); ++c)
      t(m, c) = phi.coeff(static_cast<int>(m - c));
  return t;
}

}  // namespace

TruncatedMatrix toeplitz_matrix(const FourierSymbol& phi, Index n) {
  require_dim(n);
  return {toeplitz_block(phi, n), "toeplitz", n, phi.is_real()};
}

TruncatedMatrix hankel_matrix(const FourierSymbol& phi, Index n) {
  require_dim(n);
  Matrix h = Matrix::Zero(n, n);
  for (Index row = 0; row < n; ++row)
    for (Index col = 0; col < n; ++col) h(row, col) = phi.coeff(static_cast<int>(-(row + 1) - col));
  return {std::move(h), "hankel", n, false};
}

TruncatedMatrix self_commutator(const FourierSymbol& phi, Index n) {
  require_dim(n);
  const auto [f, g] = analytic_split(phi);
  const int k = phi.band();
  // Column vectors u_m = (f^(m+l))_{l>=1}; entry(m,n) = <u_m, u_n> - <v_m, v_n>.
  const Index support = std::min<Index>(n, k);
  Matrix c = Matrix::Zero(n, n);
  for (Index m = 0; m < support; ++m) {
    for (Index col = 0; col < support; ++col) {
      cplx s{};
      for (int l = 1; l <= k; ++l) {
        const int a = static_cast<int>(m) + l, b = static_cast<int>(col) + l;
        s += f.coeff(a) * std::conj(f.coeff(b)) - g.coeff(a) * std::conj(g.coeff(b));
      }
      c(m, col) = s;
    }
  }
  return {std::move(c), "self_commutator", n, true};
}

TruncatedMatrix word_matrix(const FourierSymbol& phi, const NCWord& w, Index n) {
  require_dim(n);
  require_exact(phi);
  const Index m = n + w.length() * phi.band();
  const Matrix x = toeplitz_block(phi.real_part(), m);
  const Matrix y = toeplitz_block(phi.imag_part(), m);
  Matrix prod = Matrix::Identity(m, m);
  for (auto letter : w.letters()) prod = prod * (letter == NCWord::Letter::X ? x : y);
  return {prod.topLeftCorner(n, n), "word", n, false};
}

TruncatedMatrix polynomial_matrix(const FourierSymbol& phi, const BivariatePolynomial& p, Index n) {
  require_dim(n);
  require_exact(phi);
  const int deg = std::max(p.degree(), 0);
  const Index m = n + deg * phi.band();
  const Matrix x = toeplitz_block(phi.real_part(), m);
  const Matrix y = toeplitz_block(phi.imag_part(), m);

  std::vector<Matrix> xp{Matrix::Identity(m, m)}, yp{Matrix::Identity(m, m)};
  for (int i = 1; i <= deg; ++i) {
    xp.push_back(xp.back() * x);
    yp.push_back(yp.back() * y);
  }
  Matrix acc = Matrix::Zero(m, m);
  for (const auto& [e, c] : p.terms()) acc += c * (xp[e.first] * yp[e.second]);
  return {acc.topLeftCorner(n, n), "polynomial", n, false};
}

Index commutator_truncation(const FourierSymbol& phi, const BivariatePolynomial& p,
                            const BivariatePolynomial& q) {
  const Index dp = std::max(p.degree(), 0), dq = std::max(q.degree(), 0);
  return std::max<Index>(1, (dp + dq + 2) * phi.band());
}

CommutatorTrace commutator_trace(const FourierSymbol& phi, const BivariatePolynomial& p,
                                 const BivariatePolynomial& q, Index min_truncation) {
  require_exact(phi);
  const Index dp = std::max(p.degree(), 0), dq = std::max(q.degree(), 0);
  const Index n = std::max(commutator_truncation(phi, p, q), min_truncation);

  auto trace_at = [&](Index size) {
    const Index m = size + (dp + dq) * phi.band();
    const Matrix pm = polynomial_matrix(phi, p, m).entries;
    const Matrix qm = polynomial_matrix(phi, q, m).entries;
    const cplx pq = trace_of_product(pm.topRows(size), qm.leftCols(size));
    const cplx qp = trace_of_product(qm.topRows(size), pm.leftCols(size));
    return pq - qp;
  };

  const cplx t1 = trace_at(n);
  const cplx t2 = trace_at(2 * n);
  const double gap = std::abs(t1 - t2);
  if (gap > 1e-10 * std::max(1.0, std::abs(t1)))
    throw Error(ErrorKind::Stabilization,
                "commutator trace changed by " + std::to_string(gap) + " between N and 2N");
  return {t1, n, gap};
}

SchattenNorm schatten_norm(const TruncatedMatrix& a, double p) {
  const Index exact = std::min(a.exact_block.value_or(0), a.dim());
  return {schatten_norm(a.entries.topLeftCorner(exact, exact), p), exact < a.dim()};
}

TruncatedMatrix diag_r(double r, Index n) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::Range, "R needs r in (0,1)");
  require_dim(n);
  Eigen::VectorXcd d(n);
  for (Index i = 0; i < n; ++i) d(i) = std::pow(r, static_cast<double>(i));
  return {d.asDiagonal().toDenseMatrix(), "diag_r", n, true};
}

TruncatedMatrix shift_conjugate(const TruncatedMatrix& a, Index l) {
  if (l < 2) throw Error(ErrorKind::Range, "shift index must be >= 2");
  const Index off = l - 1;
  Matrix s = Matrix::Zero(a.dim() + off, a.dim() + off);
  s.bottomRightCorner(a.dim(), a.dim()) = a.entries;
  std::optional<Index> exact;
  if (a.exact_block && *a.exact_block == a.dim()) exact = s.rows();
  return {std::move(s), a.provenance + "^(" + std::to_string(l) + ")", exact, a.self_adjoint};
}

ExtractingR extracting_r_check(const FourierSymbol& phi, const Matrix& x, double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::Range, "r must lie in (0,1)");
  require_exact(phi);
  if (x.rows() != x.cols() || x.rows() < 1) throw Error(ErrorKind::Domain, "corner must be square");
  if (!x.allFinite()) throw Error(ErrorKind::Domain, "corner has non-finite entries");
  const Index d = x.rows();
  const Index k = phi.band();

  const Matrix smoothed = self_commutator(poisson_smooth(phi, r), d).entries;
  const cplx lhs = trace_of_product(smoothed, x);

  const Matrix c = self_commutator(phi, d + k).entries;
  const Matrix rr = diag_r(r, d).entries;
  const TruncatedMatrix rxr{rr * x * rr, "RXR", d, false};

  const double r2 = r * r;
  cplx rhs = r2 * trace_of_product(c.topLeftCorner(d, d), rxr.entries);
  // The commutator vanishes outside its k x k corner, so shifts with l - 1 >= k contribute nothing.
  for (Index l = 2; l - 1 < k; ++l) {
    const TruncatedMatrix shifted = shift_conjugate(rxr, l);
    const Index size = shifted.dim();
    rhs -= std::pow(r, 2.0 * l - 2.0) * (1.0 - r2) *
           trace_of_product(c.topLeftCorner(size, size), shifted.entries);
  }
  return {lhs, rhs};
}

}  // namespace hh
