#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cesaro/special.hpp"

namespace cesaro::formal {

// Truncated Laurent expansion in the fabric parameter eps, orders -2..2.
// valid_through() is the highest order that is known exactly; orders above it
// were lost to truncation somewhere upstream.
class EpsLaurent {
public:
  static constexpr int kMin = -2;
  static constexpr int kMax = 2;

  EpsLaurent() { c_.fill(0.0); }
  static EpsLaurent constant(cplx v);
  static EpsLaurent zero() { return {}; }

  cplx operator[](int order) const;
  void set(int order, cplx v);  // throws order_overflow outside kMin..kMax

  int valid_through() const { return valid_; }
  void limit_validity(int order) { valid_ = std::min(valid_, order); }
  // Lowest order with a non-zero coefficient, kMax + 1 when identically zero.
  int low() const;
  bool is_zero() const { return low() > kMax; }

  EpsLaurent& operator+=(const EpsLaurent& o);
  EpsLaurent& operator-=(const EpsLaurent& o);
  EpsLaurent& operator*=(cplx k);
  friend EpsLaurent operator+(EpsLaurent a, const EpsLaurent& b) { return a += b; }
  friend EpsLaurent operator-(EpsLaurent a, const EpsLaurent& b) { return a -= b; }
  friend EpsLaurent operator*(EpsLaurent a, cplx k) { return a *= k; }
  friend EpsLaurent operator*(const EpsLaurent& a, const EpsLaurent& b);

private:
  std::array<cplx, 5> c_;
  int valid_ = kMax;
};

// exp(eps * L) through order 2.
EpsLaurent exp_eps(cplx L);
// Expansion of 1/Gamma(a + eps * slope) around eps = 0.
EpsLaurent rgamma_eps(cplx a, int slope);
// C(rho, j + eps) = Gamma(rho + 1) / (Gamma(j + eps + 1) Gamma(rho - j - eps + 1)).
EpsLaurent binom_eps(cplx rho, long long j);
// tau^{w + slope eps} (ln tau)^log_power, i.e. zeta(-w - slope eps) or its
// negated s-derivative.
EpsLaurent tau_eps(cplx w, int slope, int log_power);

// c * tau^{w + tau_slope eps} (ln tau)^{log_tau} * v^{p + var_slope eps}, v the
// subject variable. has_tau = false marks a plain number (no tau factor at all,
// which is different from tau^0 = zeta(0)).
struct TauMonomial {
  EpsLaurent scalar = EpsLaurent::constant(1.0);
  bool has_tau = true;
  cplx tau_power = 0.0;
  int tau_slope = 0;
  int log_tau = 0;
  cplx var_power = 0.0;
  int var_slope = 0;

  bool same_shape(const TauMonomial& o) const;
};

enum class Subject { alpha, z, k };
const char* to_string(Subject s);

// Which binomial produced a series; used by subject changes and by the
// accelerated evaluation at the edge of the disc of convergence.
enum class BinomialKind {
  alpha_minus_tau,  // (alpha - tau)^rho = e^{i pi rho} (tau - alpha)^rho, subject alpha
  tau_minus_alpha,  // (tau - alpha)^rho, subject alpha
  z_plus_tau,       // (z + tau)^rho, ascending powers of z (Taylor form)
  k_plus_tau,       // (k + tau)^rho, descending powers of k (asymptotic form)
};

struct BinomialOrigin {
  BinomialKind kind;
  cplx rho;
};

struct IndexedTerm {
  long long j;
  TauMonomial m;
};

class TauSeries {
public:
  TauSeries(Subject subject, long long j_min, long long j_max);
  static TauSeries identity(Subject subject);

  Subject subject() const { return subject_; }
  long long j_min() const { return j_min_; }
  long long j_max() const { return j_max_; }
  const std::vector<IndexedTerm>& terms() const { return terms_; }
  const std::optional<BinomialOrigin>& origin() const { return origin_; }
  void set_origin(BinomialOrigin o) { origin_ = o; }
  // True when every index above j_max is identically zero (not merely a
  // stand-alone zero), so products need no partners beyond it.
  bool right_complete() const { return right_complete_; }
  void set_right_complete(bool v) { right_complete_ = v; }

  // Adds a term, merging with an existing monomial of identical shape at the
  // same index. Zero scalars are kept (stand-alone zeros).
  void add(long long j, const TauMonomial& m);
  std::vector<const TauMonomial*> at(long long j) const;

  std::string to_json() const;

private:
  Subject subject_;
  long long j_min_, j_max_;
  std::vector<IndexedTerm> terms_;
  std::optional<BinomialOrigin> origin_;
  bool right_complete_ = false;
};

// Two-sided binomial expansions with every index in [j_min, j_max]
// materialised. Index j carries the fabric index nu = j + eps.
//   alpha: (alpha - tau)^rho = sum e^{i pi (rho - j)} C(rho, nu) tau^{rho - nu} alpha^nu
//   z:     (z + tau)^rho     = sum C(rho, nu) tau^{rho - nu} z^nu
//   k:     (k + tau)^rho     = sum C(rho, nu) k^{rho - nu} tau^nu
// For z and k pass rho = -s. rho must not be a negative integer.
TauSeries expand_binomial(Subject subject, cplx rho, long long j_min, long long j_max);
// (tau - alpha)^rho without the e^{i pi rho} phase.
TauSeries expand_tau_minus_alpha(cplx rho, long long j_min, long long j_max);
// ln(tau - alpha) = ln tau - sum_{l=1}^{L} tau^{-l} alpha^l / l (one-sided).
TauSeries log_series(long long L);
// Rebuilds a z/k binomial with the other subject over a new index range.
TauSeries change_subject(const TauSeries& s, long long j_min, long long j_max);

// Cauchy product without evaluation. Output indices run from
// a.j_min + b.j_min up to the largest index for which every pair inside both
// materialised ranges is present; asking for more raises a range error.
TauSeries multiply(const TauSeries& a, const TauSeries& b,
                   std::optional<long long> out_max = std::nullopt);

struct EvalOptions {
  // Split zeta(.) = 1 + (zeta(.) - 1) on the regular right part of a binomial
  // series and sum the "1" part in closed form. Defaults to on when the series
  // has a descending-tau binomial origin and |at| >= 0.5.
  std::optional<bool> accelerate;
  double pole_tol = 1e-9;
};

// Laurent sum of all terms at the given subject value, before the pole check.
EpsLaurent evaluate_laurent(const TauSeries& s, cplx at, const EvalOptions& opt = {});
// Order-0 value; raises uncancelled_singularity if a negative order survives.
cplx evaluate(const TauSeries& s, cplx at, const EvalOptions& opt = {});

// Coefficient of v^p (ln v)^q after resolution of the fabric.
struct Coefficient {
  cplx power;
  int log_power;
  cplx value;
};
std::vector<Coefficient> coefficients(const TauSeries& s);
// Resolved value of a single index, without the subject power.
cplx coefficient_at(const TauSeries& s, long long j);

// q-check_rho(alpha) for rho not a negative integer, with the coefficients of
// the accelerated form cached:
//   e^{i pi rho} (1 - alpha)^rho + sum_j e^{i pi (rho - j)} C(rho, j) (zeta(j - rho) - 1) alpha^j
class QcheckEvaluator {
public:
  explicit QcheckEvaluator(cplx rho);
  cplx rho() const { return rho_; }
  cplx operator()(double alpha) const;
  cplx eval(cplx alpha) const;
  // Same value with 1 - alpha supplied by the caller, exact near alpha = 1.
  cplx eval_complement(double alpha, double one_minus_alpha) const;
  int truncation() const { return static_cast<int>(c_.size()) - 1; }
  double tail_bound(double alpha) const;

private:
  cplx rho_;
  cplx phase_;
  std::optional<int> integer_;
  std::vector<double> poly_;
  std::vector<cplx> c_;
};

cplx qcheck_rho(cplx rho, double alpha);
// Plain partial sums of e^{i pi (rho - j)} C(rho, j) zeta(j - rho) alpha^j,
// stopped when a term drops below 1e-13 of the partial sum.
struct SeriesValue {
  cplx value;
  int terms;
  double tail_bound;
};
SeriesValue qcheck_rho_direct(cplx rho, double alpha, int max_terms = 200000);

struct DrhoOptions {
  long long j_min = -40;
  bool left_tail = true;  // closed form for the indices below j_min
  double tol = 1e-16;     // output truncation: alpha^m / m below tol
};

// d/drho q-check_rho(alpha) at rho = n in {0, 1} through the formal pipeline:
// i pi q-check_n + (-1)^n (tau - alpha)^n ln(tau - alpha).
cplx drho_qcheck(int n, double alpha, const DrhoOptions& opt = {});
// The same derivative from its closed form.
cplx drho_qcheck_closed(int n, double alpha);

}  // namespace cesaro::formal
