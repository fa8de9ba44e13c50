#include "cesaro/formal.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "cesaro/scale.hpp"

namespace cesaro::formal {

using special::as_integer;

bool TauMonomial::same_shape(const TauMonomial& o) const {
  return has_tau == o.has_tau && tau_power == o.tau_power && tau_slope == o.tau_slope && log_tau == o.log_tau &&
         var_power == o.var_power && var_slope == o.var_slope;
}

const char* to_string(Subject s) {
  switch (s) {
    case Subject::alpha: return "alpha";
    case Subject::z: return "z";
    case Subject::k: return "k";
  }
  return "?";
}

TauSeries::TauSeries(Subject subject, long long j_min, long long j_max)
    : subject_(subject), j_min_(j_min), j_max_(j_max) {
  if (j_min > j_max) throw Error(ErrorKind::contract, "TauSeries: j_min > j_max");
}

TauSeries TauSeries::identity(Subject subject) {
  TauSeries s(subject, 0, 0);
  TauMonomial one;
  one.has_tau = false;
  s.add(0, one);
  s.right_complete_ = true;
  return s;
}

void TauSeries::add(long long j, const TauMonomial& m) {
  if (j < j_min_ || j > j_max_) throw Error(ErrorKind::range, "TauSeries::add: index outside the series range", j);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), j,
                             [](const IndexedTerm& t, long long v) { return t.j < v; });
  for (auto p = it; p != terms_.end() && p->j == j; ++p) {
    if (p->m.same_shape(m)) {
      p->m.scalar += m.scalar;
      return;
    }
  }
  auto end = it;
  while (end != terms_.end() && end->j == j) ++end;
  terms_.insert(end, IndexedTerm{j, m});
}

std::vector<const TauMonomial*> TauSeries::at(long long j) const {
  std::vector<const TauMonomial*> out;
  for (const auto& t : terms_)
    if (t.j == j) out.push_back(&t.m);
  return out;
}

namespace {

nlohmann::json cjson(cplx v) { return nlohmann::json::array({v.real(), v.imag()}); }

}  // namespace

std::string TauSeries::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : terms_) {
    nlohmann::json orders = nlohmann::json::object();
    for (int o = EpsLaurent::kMin; o <= EpsLaurent::kMax; ++o)
      if (t.m.scalar[o] != cplx(0.0)) orders[std::to_string(o)] = cjson(t.m.scalar[o]);
    terms.push_back({{"j", t.j},
                     {"scalar", {{"orders", orders}, {"valid_through", t.m.scalar.valid_through()}}},
                     {"has_tau", t.m.has_tau},
                     {"tau_power", cjson(t.m.tau_power)},
                     {"tau_slope", t.m.tau_slope},
                     {"log_exponent", t.m.log_tau},
                     {"alpha_power", cjson(t.m.var_power)},
                     {"alpha_slope", t.m.var_slope}});
  }
  nlohmann::json j = {{"subject", to_string(subject_)}, {"j_min", j_min_}, {"j_max", j_max_}, {"terms", terms}};
  return j.dump(2);
}

namespace {

TauSeries build_binomial(BinomialKind kind, cplx rho, long long j_min, long long j_max) {
  if (j_min > 0 || j_max < 0) throw Error(ErrorKind::contract, "expand_binomial: need j_min <= 0 <= j_max");
  Subject subject = (kind == BinomialKind::z_plus_tau)   ? Subject::z
                    : (kind == BinomialKind::k_plus_tau) ? Subject::k
                                                         : Subject::alpha;
  TauSeries s(subject, j_min, j_max);
  cplx phase = (kind == BinomialKind::alpha_minus_tau) ? special::exp_i_pi(rho) : cplx(1.0);
  for (long long j = j_min; j <= j_max; ++j) {
    TauMonomial m;
    cplx sign = 1.0;
    if (kind == BinomialKind::alpha_minus_tau || kind == BinomialKind::tau_minus_alpha)
      sign = (j % 2 == 0) ? 1.0 : -1.0;
    m.scalar = binom_eps(rho, j) * (phase * sign);
    double jd = static_cast<double>(j);
    if (kind == BinomialKind::k_plus_tau) {
      m.tau_power = jd;
      m.tau_slope = 1;
      m.var_power = rho - jd;
      m.var_slope = -1;
    } else {
      m.tau_power = rho - jd;
      m.tau_slope = -1;
      m.var_power = jd;
      m.var_slope = 1;
    }
    s.add(j, m);
  }
  s.set_origin({kind, rho});
  return s;
}

}  // namespace

TauSeries expand_binomial(Subject subject, cplx rho, long long j_min, long long j_max) {
  switch (subject) {
    case Subject::alpha: return build_binomial(BinomialKind::alpha_minus_tau, rho, j_min, j_max);
    case Subject::z: return build_binomial(BinomialKind::z_plus_tau, rho, j_min, j_max);
    case Subject::k: return build_binomial(BinomialKind::k_plus_tau, rho, j_min, j_max);
  }
  throw Error(ErrorKind::contract, "expand_binomial: unknown subject");
}

TauSeries expand_tau_minus_alpha(cplx rho, long long j_min, long long j_max) {
  return build_binomial(BinomialKind::tau_minus_alpha, rho, j_min, j_max);
}

TauSeries log_series(long long L) {
  if (L < 1) throw Error(ErrorKind::contract, "log_series: L >= 1 required");
  TauSeries s(Subject::alpha, 0, L);
  TauMonomial lt;
  lt.log_tau = 1;
  s.add(0, lt);
  for (long long l = 1; l <= L; ++l) {
    TauMonomial m;
    m.scalar = EpsLaurent::constant(-1.0 / static_cast<double>(l));
    m.tau_power = -static_cast<double>(l);
    m.var_power = static_cast<double>(l);
    s.add(l, m);
  }
  return s;
}

TauSeries change_subject(const TauSeries& s, long long j_min, long long j_max) {
  if (!s.origin()) throw Error(ErrorKind::contract, "change_subject: series has no binomial origin");
  switch (s.origin()->kind) {
    case BinomialKind::z_plus_tau: return build_binomial(BinomialKind::k_plus_tau, s.origin()->rho, j_min, j_max);
    case BinomialKind::k_plus_tau: return build_binomial(BinomialKind::z_plus_tau, s.origin()->rho, j_min, j_max);
    default: throw Error(ErrorKind::contract, "change_subject: only (z + tau)^rho series change subject");
  }
}

TauSeries multiply(const TauSeries& a, const TauSeries& b, std::optional<long long> out_max) {
  if (a.subject() != b.subject()) throw Error(ErrorKind::contract, "multiply: subjects differ");
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  long long lo = a.j_min() + b.j_min();
  long long hi_a = a.right_complete() ? kInf : a.j_max() + b.j_min();
  long long hi_b = b.right_complete() ? kInf : b.j_max() + a.j_min();
  long long hi_complete = std::min(hi_a, hi_b);
  if (hi_complete == kInf) hi_complete = a.j_max() + b.j_max();
  long long hi = out_max.value_or(hi_complete);
  if (hi > hi_complete)
    throw Error(ErrorKind::range, "multiply: output index needs partner terms outside the materialised ranges", hi);
  if (hi < lo) throw Error(ErrorKind::contract, "multiply: empty output range");
  TauSeries out(a.subject(), lo, hi);
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      long long j = ta.j + tb.j;
      if (j > hi) continue;
      TauMonomial m;
      m.scalar = ta.m.scalar * tb.m.scalar;
      m.has_tau = ta.m.has_tau || tb.m.has_tau;
      m.tau_power = ta.m.tau_power + tb.m.tau_power;
      m.tau_slope = ta.m.tau_slope + tb.m.tau_slope;
      m.log_tau = ta.m.log_tau + tb.m.log_tau;
      if (m.log_tau > 1) throw Error(ErrorKind::contract, "multiply: (ln tau)^2 is not supported", j);
      m.var_power = ta.m.var_power + tb.m.var_power;
      m.var_slope = ta.m.var_slope + tb.m.var_slope;
      out.add(j, m);
    }
  }
  out.set_right_complete(a.right_complete() && b.right_complete());
  return out;
}

namespace {

bool tau_singular(const TauMonomial& m) {
  return m.has_tau && as_integer(-m.tau_power - 1.0, 1e-12) == 0LL;
}

struct TauCache {
  std::map<std::tuple<double, double, int, int>, EpsLaurent> values;
  const EpsLaurent& get(const TauMonomial& m) {
    auto key = std::make_tuple(m.tau_power.real(), m.tau_power.imag(), m.tau_slope, m.log_tau);
    auto it = values.find(key);
    if (it != values.end()) return it->second;
    return values.emplace(key, tau_eps(m.tau_power, m.tau_slope, m.log_tau)).first->second;
  }
};

// scalar * tau-part; nullopt for a stand-alone zero whose partner is regular.
std::optional<EpsLaurent> resolve(const TauMonomial& m, TauCache& cache, bool minus_one) {
  if (m.scalar.low() >= 1 && m.scalar.valid_through() >= 1 && !tau_singular(m)) return std::nullopt;
  if (!m.has_tau) return m.scalar;
  EpsLaurent t = cache.get(m);
  if (minus_one && m.log_tau == 0) t.set(0, t[0] - 1.0);
  return m.scalar * t;
}

struct Accumulated {
  EpsLaurent sum;
  double pole_scale = 0;
  long long first_pole_index = 0;
  bool any_pole = false;
};

Accumulated accumulate(const TauSeries& s, cplx at, const EvalOptions& opt) {
  Accumulated acc;
  TauCache cache;
  bool accel = false;
  long long j_split = 0;
  const auto& origin = s.origin();
  if (origin && origin->kind != BinomialKind::k_plus_tau) {
    accel = opt.accelerate.value_or(std::abs(at) >= 0.5);
    double start = std::ceil(origin->rho.real() + 1.5);
    j_split = std::max<long long>({0, s.j_min(), static_cast<long long>(std::max(start, 0.0))});
    if (j_split > s.j_max()) accel = false;
  }
  for (const auto& t : s.terms()) {
    auto prod = resolve(t.m, cache, accel && t.j >= j_split);
    if (!prod) continue;
    if (prod->valid_through() < 0)
      throw Error(ErrorKind::contract, "evaluate: fabric expansion too short at index", t.j);
    EpsLaurent factor;
    if (at == cplx(0.0)) {
      if (t.m.var_power.real() > 0) continue;
      if (t.m.var_power != cplx(0.0) || (t.m.var_slope != 0 && prod->low() < 0))
        throw Error(ErrorKind::domain, "evaluate: subject power singular at 0", t.j);
      factor = EpsLaurent::constant(1.0);
    } else {
      factor = exp_eps(static_cast<double>(t.m.var_slope) * special::log(at)) * special::cpow(at, t.m.var_power);
    }
    EpsLaurent term = *prod * factor;
    for (int o = EpsLaurent::kMin; o < 0; ++o) {
      if (term[o] != cplx(0.0)) {
        if (!acc.any_pole) acc.first_pole_index = t.j;
        acc.any_pole = true;
        acc.pole_scale += std::abs(term[o]);
      }
    }
    acc.sum += term;
  }
  if (accel) {
    // sum_{j >= j_split} phase C(rho, j) (sigma at)^j in closed form; at the
    // boundary point 1 + sigma at = 0 the analytic continuation in rho is 0.
    const cplx rho = origin->rho;
    const double sigma = (origin->kind == BinomialKind::z_plus_tau) ? 1.0 : -1.0;
    const cplx phase = (origin->kind == BinomialKind::alpha_minus_tau) ? special::exp_i_pi(rho) : cplx(1.0);
    cplx base = 1.0 + sigma * at;
    cplx full = (base == cplx(0.0)) ? cplx(0.0) : special::cpow(base, rho);
    cplx head = 0.0, c = 1.0, p = 1.0;
    for (long long j = 0; j < j_split; ++j) {
      head += c * p;
      c *= (rho - static_cast<double>(j)) / static_cast<double>(j + 1);
      p *= sigma * at;
    }
    acc.sum += EpsLaurent::constant(phase * (full - head));
  }
  return acc;
}

}  // namespace

EpsLaurent evaluate_laurent(const TauSeries& s, cplx at, const EvalOptions& opt) {
  return accumulate(s, at, opt).sum;
}

cplx evaluate(const TauSeries& s, cplx at, const EvalOptions& opt) {
  Accumulated acc = accumulate(s, at, opt);
  double residual = std::abs(acc.sum[-1]) + std::abs(acc.sum[-2]);
  if (acc.any_pole && residual > opt.pole_tol * std::max(acc.pole_scale, 1e-300))
    throw Error(ErrorKind::uncancelled_singularity, "evaluate: eps-pole survives, first pole at index",
                acc.first_pole_index);
  if (!acc.any_pole && residual != 0.0)
    throw Error(ErrorKind::uncancelled_singularity, "evaluate: eps-pole survives");
  if (acc.sum.valid_through() < 0) throw Error(ErrorKind::contract, "evaluate: order 0 not determined");
  return acc.sum[0];
}

std::vector<Coefficient> coefficients(const TauSeries& s) {
  // (power re, power im, log power) -> orders -2..0
  std::map<std::tuple<double, double, int>, std::array<cplx, 3>> acc;
  std::map<std::tuple<double, double, int>, double> scale;
  TauCache cache;
  for (const auto& t : s.terms()) {
    auto prod = resolve(t.m, cache, false);
    if (!prod) continue;
    if (prod->valid_through() < 0)
      throw Error(ErrorKind::contract, "coefficients: fabric expansion too short at index", t.j);
    double slope = t.m.var_slope;
    double fact = 1.0;
    for (int q = 0; q <= 2; ++q) {
      if (q > 0) fact *= q;
      double w = std::pow(slope, q) / fact;
      auto key = std::make_tuple(t.m.var_power.real(), t.m.var_power.imag(), q);
      for (int o = -2; o <= 0; ++o) {
        cplx v = (*prod)[o - q] * w;
        if (v == cplx(0.0)) continue;
        acc[key][static_cast<size_t>(o + 2)] += v;
        if (o < 0) scale[key] += std::abs(v);
      }
    }
  }
  std::vector<Coefficient> out;
  for (const auto& [key, orders] : acc) {
    double pole = std::abs(orders[0]) + std::abs(orders[1]);
    if (pole > 1e-9 * std::max(scale[key], 1e-300))
      throw Error(ErrorKind::uncancelled_singularity, "coefficients: eps-pole survives in a coefficient");
    auto [re, im, q] = key;
    if (q > 0 && std::abs(orders[2]) < 1e-14) continue;
    out.push_back({cplx(re, im), q, orders[2]});
  }
  return out;
}

cplx coefficient_at(const TauSeries& s, long long j) {
  TauCache cache;
  cplx v = 0.0;
  for (const auto& t : s.terms()) {
    if (t.j != j) continue;
    auto prod = resolve(t.m, cache, false);
    if (!prod) continue;
    if (prod->low() < 0) throw Error(ErrorKind::uncancelled_singularity, "coefficient_at: eps-pole at index", j);
    if (prod->valid_through() < 0) throw Error(ErrorKind::contract, "coefficient_at: order 0 not determined", j);
    v += (*prod)[0];
  }
  return v;
}

QcheckEvaluator::QcheckEvaluator(cplx rho) : rho_(rho), phase_(special::exp_i_pi(rho)) {
  if (auto n = as_integer(rho, 0.0)) {
    if (*n < 0) throw Error(ErrorKind::domain, "qcheck_rho: negative integer rho is distributional", *n);
    integer_ = static_cast<int>(*n);
    poly_ = scale::qcheck_coeffs(static_cast<int>(*n));
    return;
  }
  cplx c = 1.0;  // C(rho, j)
  double biggest = 0;
  for (int j = 0; j < 600; ++j) {
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    cplx v = phase_ * sign * c * (special::zeta(static_cast<double>(j) - rho) - 1.0);
    c_.push_back(v);
    biggest = std::max(biggest, std::abs(v));
    if (j > rho.real() + 2 && std::abs(v) < 1e-18 * biggest) break;
    c *= (rho - static_cast<double>(j)) / static_cast<double>(j + 1);
  }
}

cplx QcheckEvaluator::eval(cplx alpha) const {
  if (integer_) {
    cplx acc = 0.0;
    for (size_t i = poly_.size(); i-- > 0;) acc = acc * alpha + poly_[i];
    return acc;
  }
  cplx base = 1.0 - alpha;
  if (base == cplx(0.0) && rho_.real() <= 0)
    throw Error(ErrorKind::domain, "qcheck_rho: (1 - alpha)^rho singular at alpha = 1");
  cplx acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * alpha + c_[i];
  cplx head = (base == cplx(0.0)) ? cplx(0.0) : special::cpow(base, rho_);
  return phase_ * head + acc;
}

cplx QcheckEvaluator::eval_complement(double alpha, double one_minus_alpha) const {
  if (integer_ || !(one_minus_alpha > 0 && one_minus_alpha <= 1)) return (*this)(alpha);
  cplx acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * alpha + c_[i];
  return phase_ * special::cpow(cplx(one_minus_alpha), rho_) + acc;
}

cplx QcheckEvaluator::operator()(double alpha) const {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorKind::domain, "qcheck_rho: alpha outside [0, 1)");
  return eval(alpha);
}

double QcheckEvaluator::tail_bound(double alpha) const {
  if (integer_ || c_.empty()) return 0.0;
  double a = std::abs(alpha);
  return 2.0 * std::abs(c_.back()) * std::pow(a, static_cast<double>(c_.size()));
}

cplx qcheck_rho(cplx rho, double alpha) { return QcheckEvaluator(rho)(alpha); }

SeriesValue qcheck_rho_direct(cplx rho, double alpha, int max_terms) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorKind::domain, "qcheck_rho: alpha outside [0, 1)");
  if (auto n = as_integer(rho, 0.0)) {
    if (*n < 0) throw Error(ErrorKind::domain, "qcheck_rho: negative integer rho is distributional", *n);
    return {scale::horner(scale::qcheck_coeffs(static_cast<int>(*n)), alpha), static_cast<int>(*n) + 1, 0.0};
  }
  cplx phase = special::exp_i_pi(rho);
  cplx c = 1.0, sum = 0.0;
  double ap = 1.0;
  int small = 0;
  for (int j = 0; j < max_terms; ++j) {
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    cplx term = phase * sign * c * special::zeta(static_cast<double>(j) - rho) * ap;
    sum += term;
    bool tiny = std::abs(term) < 1e-13 * std::abs(sum);
    small = (tiny && j > rho.real() + 1) ? small + 1 : 0;
    if (small >= 3 || (alpha == 0.0 && j > 0)) {
      double tail = (alpha == 0.0) ? 0.0 : std::abs(term) * alpha / (1.0 - alpha);
      return {sum, j + 1, tail};
    }
    c *= (rho - static_cast<double>(j)) / static_cast<double>(j + 1);
    ap *= alpha;
  }
  throw Error(ErrorKind::range, "qcheck_rho_direct: no convergence within max_terms", max_terms);
}

namespace {

// sum_{i > I} n! (i - 1)! / (n + 1 + i)!, the left stand-alone zeros of
// (tau - alpha)^n beyond -I paired with the log series.
double left_tail(int n, long long I) {
  double lg = std::lgamma(n + 1.0) + std::lgamma(static_cast<double>(I) + 1.0) -
              std::lgamma(static_cast<double>(I + n) + 2.0);
  return std::exp(lg) / (n + 1.0);
}

}  // namespace

cplx drho_qcheck(int n, double alpha, const DrhoOptions& opt) {
  if (n < 0 || n > 4) throw Error(ErrorKind::contract, "drho_qcheck: n must lie in 0..4", n);
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorKind::domain, "drho_qcheck: alpha outside [0, 1)");
  if (opt.j_min > 0) throw Error(ErrorKind::contract, "drho_qcheck: j_min must be <= 0");
  long long M = n + 3;
  if (alpha > 0.0) M = std::max<long long>(M, static_cast<long long>(std::ceil(std::log(opt.tol) / std::log(alpha))));
  M = std::min<long long>(M, 20000);
  TauSeries A = expand_tau_minus_alpha(static_cast<double>(n), opt.j_min, M);
  TauSeries B = log_series(M - opt.j_min);
  TauSeries prod = multiply(A, B, M);
  EvalOptions eo;
  eo.accelerate = false;
  cplx bracket = evaluate(prod, alpha, eo);
  if (opt.left_tail && opt.j_min < 0) bracket += left_tail(n, -opt.j_min) * std::pow(alpha, n + 1);
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  cplx q = scale::horner(scale::qcheck_coeffs(n), alpha);
  return cplx(0.0, special::pi) * q + sign * bracket;
}

cplx drho_qcheck_closed(int n, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorKind::domain, "drho_qcheck_closed: alpha outside [0, 1)");
  const double g = special::euler_gamma;
  // sum_{j>=2} (zeta(j) - 1) alpha^j w_j, the remaining part summed in closed form
  auto accelerated = [&](auto weight) {
    double acc = 0, ap = alpha * alpha;
    for (int j = 2; j < 400 && ap > 0; ++j) {
      double t = (special::zeta(static_cast<double>(j)).real() - 1.0) * ap * weight(j);
      acc += t;
      if (std::abs(t) < 1e-19) break;
      ap *= alpha;
    }
    return acc;
  };
  double L = std::log1p(-alpha);
  cplx ipi(0.0, special::pi);
  if (n == 0) {
    double S = accelerated([](int j) { return 1.0 / j; }) + (-L - alpha);
    return ipi * (alpha - 0.5) - special::zeta_deriv(0.0) - g * alpha - S;
  }
  if (n == 1) {
    double S = accelerated([&](int j) { return alpha / (static_cast<double>(j) * (j + 1.0)); }) +
               ((1.0 - alpha) * L + alpha - 0.5 * alpha * alpha);
    double q1 = 0.5 * alpha * alpha - 0.5 * alpha + 1.0 / 12.0;
    return ipi * q1 + special::zeta_deriv(-1.0) - (0.5 + special::zeta_deriv(0.0)) * alpha +
           (0.5 - 0.5 * g) * alpha * alpha - S;
  }
  throw Error(ErrorKind::contract, "drho_qcheck_closed: closed form known for n = 0, 1 only", n);
}

}  // namespace cesaro::formal
