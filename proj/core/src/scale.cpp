#include "cesaro/scale.hpp"

#include <json.hpp>

#include <mutex>
#include <sstream>

namespace cesaro::scale {

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  BigInt num(text.substr(0, slash));
  BigInt den(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::domain, "parse_rational: zero denominator");
  return Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

RationalPolynomial RationalPolynomial::derivative() const {
  std::vector<Rational> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<int>(i));
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::antiderivative() const {
  std::vector<Rational> a(c_.size() + 1);
  for (size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / static_cast<int>(i + 1);
  return RationalPolynomial(std::move(a));
}

Rational RationalPolynomial::integral01() const {
  Rational acc = 0;
  for (size_t i = 0; i < c_.size(); ++i) acc += c_[i] / static_cast<int>(i + 1);
  return acc;
}

RationalPolynomial RationalPolynomial::shifted(const Rational& c) const {
  // Horner in polynomial arithmetic: p(x + c).
  RationalPolynomial result;
  RationalPolynomial lin({c, Rational(1)});
  for (size_t i = c_.size(); i-- > 0;) {
    result = result * lin;
    result += constant(c_[i]);
  }
  return result;
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

double RationalPolynomial::eval(double x) const {
  double acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
  return acc;
}

cplx RationalPolynomial::eval(cplx x) const {
  cplx acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& k) {
  for (auto& x : c_) x *= k;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return RationalPolynomial(std::move(out));
}

std::vector<double> RationalPolynomial::to_doubles() const {
  std::vector<double> v;
  for (const auto& x : c_) v.push_back(to_double(x));
  return v;
}

std::vector<std::string> RationalPolynomial::to_strings() const {
  std::vector<std::string> v;
  for (const auto& x : c_) v.push_back(to_string(x));
  return v;
}

std::string RationalPolynomial::to_json() const { return nlohmann::json(to_strings()).dump(); }

RationalPolynomial RationalPolynomial::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<Rational> v;
  for (const auto& e : j) v.push_back(parse_rational(e.get<std::string>()));
  return RationalPolynomial(std::move(v));
}

std::string RationalPolynomial::pretty(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rational a = abs(c_[i]);
    os << (c_[i] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = (a == 1 && i > 0);
    if (!unit) os << (denominator(a) == 1 ? numerator(a).str() : "(" + to_string(a) + ")");
    if (i > 0) os << (unit ? "" : "*") << var << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os.str();
}

std::vector<Rational> bernoulli_numbers(int n_max) {
  if (n_max < 0) throw Error(ErrorKind::domain, "bernoulli_numbers: n_max < 0");
  std::vector<Rational> B(static_cast<size_t>(n_max) + 1);
  B[0] = 1;
  for (int m = 1; m <= n_max; ++m) {
    if (m > 1 && m % 2 == 1) continue;  // B_{2n+1} = 0
    Rational acc = 0;
    BigInt c = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      acc += Rational(c) * B[static_cast<size_t>(k)];
      c = c * (m + 1 - k) / (k + 1);
    }
    B[static_cast<size_t>(m)] = -acc / (m + 1);
  }
  return B;
}

RationalPolynomial bernoulli_poly(int n) {
  if (n < 0) throw Error(ErrorKind::domain, "bernoulli_poly: n < 0");
  auto B = bernoulli_numbers(n);
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  BigInt binom = 1;  // C(n, j)
  for (int j = 0; j <= n; ++j) {
    c[static_cast<size_t>(n - j)] = Rational(binom) * B[static_cast<size_t>(j)];
    binom = binom * (n - j) / (j + 1);
  }
  return RationalPolynomial(std::move(c));
}

const char* to_string(Kind k) {
  switch (k) {
    case Kind::q: return "q";
    case Kind::q_tilde: return "q-tilde";
    case Kind::q_check: return "q-check";
    case Kind::bernoulli_periodised: return "bernoulli-periodised";
  }
  return "?";
}

ScaleFamily::ScaleFamily(Kind kind, std::vector<RationalPolynomial> members) : kind_(kind), m_(std::move(members)) {}

int ScaleFamily::start() const {
  return (kind_ == Kind::q || kind_ == Kind::q_tilde) ? 1 : 0;
}

const RationalPolynomial& ScaleFamily::member(int n) const {
  if (n < start() || n > n_max()) throw Error(ErrorKind::range, "ScaleFamily::member: index out of range", n);
  return m_[static_cast<size_t>(n - start())];
}

Rational ScaleFamily::derivative_constant(int n) const {
  switch (kind_) {
    case Kind::q: return 1;
    case Kind::q_tilde: return n;
    case Kind::q_check:
    case Kind::bernoulli_periodised: return n + 1;
  }
  return 0;
}

double ScaleFamily::eval_periodic(int n, double X) const {
  double alpha = X - std::floor(X);
  return member(n).eval(alpha);
}

ScaleFamily build_scale(Kind kind, int n_max) {
  int start = (kind == Kind::q || kind == Kind::q_tilde) ? 1 : 0;
  if (n_max < start) throw Error(ErrorKind::domain, "build_scale: n_max below the family start", n_max);
  std::vector<RationalPolynomial> members;
  if (kind == Kind::bernoulli_periodised) {
    for (int n = 0; n <= n_max; ++n) members.push_back(bernoulli_poly(n));
    return ScaleFamily(kind, std::move(members));
  }
  // q_1 .. q_{top}; q-check_n = n! q_{n+1} needs one more.
  int top = (kind == Kind::q_check) ? n_max + 1 : n_max;
  std::vector<RationalPolynomial> q;
  q.push_back(RationalPolynomial({Rational(-1, 2), Rational(1)}));
  while (static_cast<int>(q.size()) < top) {
    RationalPolynomial next = q.back().antiderivative();
    next -= RationalPolynomial::constant(next.integral01());
    q.push_back(std::move(next));
  }
  Rational fact = 1;
  for (int n = 1; n <= top; ++n) {
    const auto& qn = q[static_cast<size_t>(n - 1)];
    switch (kind) {
      case Kind::q: members.push_back(qn); break;
      case Kind::q_tilde: members.push_back(qn * fact); break;  // (n-1)! q_n
      case Kind::q_check:
        members.push_back(qn * fact);  // q-check_{n-1} = (n-1)! q_n
        break;
      default: break;
    }
    fact *= n;
  }
  return ScaleFamily(kind, std::move(members));
}

RationalPolynomial sum_powers_poly(int n) {
  if (n < 1) throw Error(ErrorKind::domain, "sum_powers_poly: n < 1");
  RationalPolynomial Bn = bernoulli_poly(n);
  RationalPolynomial p = Bn.shifted(1) - RationalPolynomial::constant(Bn(Rational(1)));
  return p * Rational(1, n);
}

namespace {

struct QcheckCache {
  std::mutex mu;
  std::vector<RationalPolynomial> exact;
  std::vector<std::vector<double>> approx;

  void ensure(int n) {
    if (static_cast<int>(exact.size()) > n) return;
    auto fam = build_scale(Kind::q_check, std::max(n, 2 * static_cast<int>(exact.size()) + 8));
    exact.clear();
    approx.clear();
    for (int i = 0; i <= fam.n_max(); ++i) {
      exact.push_back(fam.member(i));
      approx.push_back(exact.back().to_doubles());
    }
  }
};

QcheckCache& qcache() {
  static QcheckCache c;
  return c;
}

}  // namespace

RationalPolynomial qcheck(int n) {
  if (n < 0) throw Error(ErrorKind::domain, "qcheck: negative index", n);
  auto& c = qcache();
  std::lock_guard<std::mutex> lock(c.mu);
  c.ensure(n);
  return c.exact[static_cast<size_t>(n)];
}

std::vector<double> qcheck_coeffs(int n) {
  if (n < 0) throw Error(ErrorKind::domain, "qcheck: negative index", n);
  auto& c = qcache();
  std::lock_guard<std::mutex> lock(c.mu);
  c.ensure(n);
  return c.approx[static_cast<size_t>(n)];
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

double qcheck_periodic(int n, double X) { return horner(qcheck_coeffs(n), X - std::floor(X)); }

Rational qcheck_at_half(int n) { return qcheck(n)(Rational(1, 2)); }

Rational zeta_one_minus(int n) {
  if (n < 1) throw Error(ErrorKind::domain, "zeta_one_minus: n < 1");
  auto B = bernoulli_numbers(n);
  Rational v = B[static_cast<size_t>(n)] / n;
  return (n % 2 == 1) ? v : Rational(-v);
}

}  // namespace cesaro::scale
