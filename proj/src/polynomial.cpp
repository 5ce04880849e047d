#include "hh/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "hh/errors.hpp"

namespace hh {

BivariatePolynomial::BivariatePolynomial(std::map<Exponents, double> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (const auto& [e, c] : coeffs_) {
    if (e.first < 0 || e.second < 0) throw Error(ErrorKind::Domain, "negative exponent in polynomial");
    if (!std::isfinite(c)) throw Error(ErrorKind::Domain, "non-finite polynomial coefficient");
  }
  prune();
}

void BivariatePolynomial::prune() {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0.0; });
}

double BivariatePolynomial::coeff(int i, int j) const noexcept {
  const auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? 0.0 : it->second;
}

int BivariatePolynomial::degree() const noexcept {
  int d = -1;
  for (const auto& [e, c] : coeffs_) d = std::max(d, e.first + e.second);
  return d;
}

double BivariatePolynomial::operator()(double x, double y) const noexcept {
  double s = 0.0;
  for (const auto& [e, c] : coeffs_) s += c * std::pow(x, e.first) * std::pow(y, e.second);
  return s;
}

BivariatePolynomial BivariatePolynomial::dx() const {
  std::map<Exponents, double> d;
  for (const auto& [e, c] : coeffs_)
    if (e.first > 0) d[{e.first - 1, e.second}] += c * e.first;
  return BivariatePolynomial(std::move(d));
}

BivariatePolynomial BivariatePolynomial::dy() const {
  std::map<Exponents, double> d;
  for (const auto& [e, c] : coeffs_)
    if (e.second > 0) d[{e.first, e.second - 1}] += c * e.second;
  return BivariatePolynomial(std::move(d));
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  auto c = a.coeffs_;
  for (const auto& [e, v] : b.coeffs_) c[e] += v;
  return BivariatePolynomial(std::move(c));
}

BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  return a + (-1.0) * b;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  std::map<BivariatePolynomial::Exponents, double> c;
  for (const auto& [ea, va] : a.coeffs_)
    for (const auto& [eb, vb] : b.coeffs_) c[{ea.first + eb.first, ea.second + eb.second}] += va * vb;
  return BivariatePolynomial(std::move(c));
}

BivariatePolynomial operator*(double s, const BivariatePolynomial& a) {
  auto c = a.coeffs_;
  for (auto& [e, v] : c) v *= s;
  return BivariatePolynomial(std::move(c));
}

BivariatePolynomial jacobian_bracket(const BivariatePolynomial& p, const BivariatePolynomial& q) {
  return p.dx() * q.dy() - q.dx() * p.dy();
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::Schema, "cannot parse polynomial '" + std::string(text) + "': " + why);
}

int parse_exponent(std::string_view factor, std::string_view text) {
  if (factor.size() == 1) return 1;
  if (factor.size() < 3 || factor[1] != '^') parse_fail(text, "bad factor '" + std::string(factor) + "'");
  int e = 0;
  const auto digits = factor.substr(2);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || e < 0)
    parse_fail(text, "bad exponent in '" + std::string(factor) + "'");
  return e;
}

}  // namespace

BivariatePolynomial BivariatePolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  std::string_view body = s;
  if (body.starts_with("poly:")) body.remove_prefix(5);
  if (body.empty()) parse_fail(text, "empty expression");

  std::map<Exponents, double> coeffs;
  std::size_t pos = 0;
  while (pos < body.size()) {
    double sign = 1.0;
    while (pos < body.size() && (body[pos] == '+' || body[pos] == '-')) {
      if (body[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    // A term ends at the next + or - that does not follow an exponent marker 'e'.
    while (end < body.size()) {
      const char ch = body[end];
      if ((ch == '+' || ch == '-') && end > pos && body[end - 1] != 'e' && body[end - 1] != 'E') break;
      ++end;
    }
    const std::string_view term = body.substr(pos, end - pos);
    if (term.empty()) parse_fail(text, "empty term");

    double c = sign;
    int i = 0, j = 0;
    std::size_t fpos = 0;
    while (fpos <= term.size()) {
      const std::size_t star = std::min(term.find('*', fpos), term.size());
      const std::string_view factor = term.substr(fpos, star - fpos);
      if (factor.empty()) parse_fail(text, "empty factor");
      if (factor[0] == 'x') {
        i += parse_exponent(factor, text);
      } else if (factor[0] == 'y') {
        j += parse_exponent(factor, text);
      } else {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(factor.data(), factor.data() + factor.size(), v);
        if (ec != std::errc{} || ptr != factor.data() + factor.size())
          parse_fail(text, "bad coefficient '" + std::string(factor) + "'");
        c *= v;
      }
      fpos = star + 1;
    }
    coeffs[{i, j}] += c;
    pos = end;
  }
  return BivariatePolynomial(std::move(coeffs));
}

std::string BivariatePolynomial::to_string() const {
  if (coeffs_.empty()) return "poly:0";
  std::string out = "poly:";
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", c);
    if (!first) out += '+';
    first = false;
    out += buf;
    if (e.first > 0) out += "*x^" + std::to_string(e.first);
    if (e.second > 0) out += "*y^" + std::to_string(e.second);
  }
  return out;
}

}  // namespace hh
