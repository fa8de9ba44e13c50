#include <cmath>
#include <sstream>

#include "cesaro/averaging.hpp"

namespace cesaro::summation {

namespace {

std::vector<cplx> to_complex(const RationalPolynomial& p) {
  std::vector<cplx> v;
  for (const auto& c : p.coeffs()) v.emplace_back(scale::to_double(c), 0.0);
  if (v.empty()) v.push_back(0.0);
  return v;
}

std::string fmt(cplx v) {
  std::ostringstream os;
  os.precision(12);
  if (v.imag() == 0) {
    os << v.real();
  } else {
    os << "(" << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i)";
  }
  return os.str();
}

}  // namespace

OperatorPolynomial::OperatorPolynomial() : c_{1.0}, exact_(RationalPolynomial::constant(1)) {}

OperatorPolynomial::OperatorPolynomial(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
  while (c_.size() > 1 && c_.back() == cplx(0.0)) c_.pop_back();
  if (c_.empty()) c_.push_back(0.0);
}

OperatorPolynomial::OperatorPolynomial(const RationalPolynomial& exact) : c_(to_complex(exact)), exact_(exact) {}

OperatorPolynomial OperatorPolynomial::power(int m) {
  if (m < 0) throw Error(ErrorKind::domain, "OperatorPolynomial::power: negative exponent", m);
  return OperatorPolynomial(RationalPolynomial::monomial(1, m));
}

OperatorPolynomial OperatorPolynomial::linear(cplx scale, cplx root) {
  auto a = exact_rational(scale), b = exact_rational(root);
  if (a && b) return linear(*a, *b);
  return OperatorPolynomial(std::vector<cplx>{-scale * root, scale});
}

OperatorPolynomial OperatorPolynomial::linear(const Rational& scale, const Rational& root) {
  return OperatorPolynomial(RationalPolynomial({-scale * root, scale}));
}

cplx OperatorPolynomial::at(cplx P) const {
  cplx acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * P + c_[i];
  return acc;
}

bool OperatorPolynomial::regular(double tol) const {
  if (exact_) return (*exact_)(Rational(1)) == 1;
  return std::abs(at(1.0) - 1.0) <= tol;
}

std::string OperatorPolynomial::to_string() const {
  if (exact_) return exact_->pretty("P");
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == cplx(0.0)) continue;
    if (!first) os << " + ";
    os << fmt(c_[i]);
    if (i > 0) os << "*P" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

OperatorPolynomial operator*(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  if (a.exact_ && b.exact_) return OperatorPolynomial(*a.exact_ * *b.exact_);
  std::vector<cplx> out(a.c_.size() + b.c_.size() - 1, 0.0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return OperatorPolynomial(std::move(out));
}

std::optional<Rational> exact_rational(cplx v) {
  if (v.imag() != 0 || !std::isfinite(v.real())) return std::nullopt;
  double scaled = std::ldexp(v.real(), 20);
  if (std::abs(scaled) > 9e15 || scaled != std::floor(scaled)) return std::nullopt;
  return Rational(static_cast<long long>(scaled), 1LL << 20);
}

OperatorPolynomial regular_poly(cplx x, Mode mode, std::optional<bool> with_power) {
  bool add_power = with_power.value_or(mode == Mode::theorem2);
  // Both forms are ((d + 1)/d)(P - 1/(d + 1)) with d = 1 - s or d = delta.
  cplx d = (mode == Mode::theorem2) ? 1.0 - x : x;
  const char* what = (mode == Mode::theorem2) ? "regular_poly: s = 1" : "regular_poly: delta = 0";
  if (std::abs(d) < 1e-14) throw Error(ErrorKind::pole, std::string(what) + " makes the factor (d+1)/d singular");
  if (std::abs(d + 1.0) < 1e-14)
    throw Error(ErrorKind::degenerate, "regular_poly: factor (P - 1/(d + 1)) is undefined for d = -1 (s = 2 or delta = -1)");
  OperatorPolynomial q;
  if (auto dr = exact_rational(d)) {
    Rational one(1);
    q = OperatorPolynomial::linear((*dr + one) / *dr, one / (*dr + one));
  } else {
    q = OperatorPolynomial::linear((d + 1.0) / d, 1.0 / (d + 1.0));
  }
  if (!add_power) return q;
  double re = (mode == Mode::theorem2) ? -x.real() : x.real();
  int m = static_cast<int>(std::floor(re)) + 1;
  if (m < 0) m = 0;
  return q * OperatorPolynomial::power(m);
}

OperatorPolynomial discrete_poly(int n) {
  if (n < 0) throw Error(ErrorKind::domain, "discrete_poly: n < 0", n);
  OperatorPolynomial q = OperatorPolynomial::power(n + 1);
  for (int d = 1; d <= n; ++d) q = q * OperatorPolynomial::linear(Rational(d + 1, d), Rational(1, d + 1));
  return q;
}

IdentityCheck operator_identity_check(int n) {
  if (n < 0 || n > 14) throw Error(ErrorKind::domain, "operator_identity_check: n outside 0..14", n);
  auto lin = [](int i) { return RationalPolynomial({Rational(-1, i), Rational(1)}); };
  RationalPolynomial lhs;
  for (int j = 0; j <= n; ++j) {
    RationalPolynomial t = RationalPolynomial::monomial(1, j);
    for (int i = 1; i <= n - j; ++i) t = t * lin(i);
    lhs += t;
  }
  RationalPolynomial rhs = RationalPolynomial::constant(n + 1);
  for (int i = 2; i <= n + 1; ++i) rhs = rhs * lin(i);
  IdentityCheck out{lhs == rhs, -1, lhs, rhs};
  if (!out.equal) {
    int top = std::max(lhs.degree(), rhs.degree());
    for (int i = 0; i <= top; ++i)
      if (lhs.coeff(i) != rhs.coeff(i)) {
        out.differing_degree = i;
        break;
      }
  }
  return out;
}

}  // namespace cesaro::summation
