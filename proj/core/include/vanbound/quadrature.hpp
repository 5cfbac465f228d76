#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <type_traits>

#include "vanbound/errors.hpp"

namespace vanbound {

struct QuadratureSpec {
  std::int64_t panels = 64;        // initial subinterval count, must be even
  double tol = 1e-10;              // absolute tolerance on the refinement difference
  int max_doublings = 22;
  double truncation_radius = 500;  // X: integrate decaying integrands over [-X, X]
  double decay_exponent = 4;       // p: |f(x)| <= C|x|^-p for |x| >= X
  double small_arg_threshold = 1e-4;  // switch closed forms to series below this
};

struct QuadResult {
  double value = 0;
  double est_error = 0;
  std::int64_t panels_used = 0;
};

void validate(const QuadratureSpec& spec);

namespace detail {

inline double mag(double x) { return std::fabs(x); }
inline double mag(long double x) { return static_cast<double>(std::fabs(x)); }
template <class T>
double mag(const std::complex<T>& z) {
  return static_cast<double>(std::abs(z));
}

inline double to_double(double x) { return x; }
inline double to_double(long double x) { return static_cast<double>(x); }
template <class T>
double to_double(const std::complex<T>& z) {
  return static_cast<double>(z.real());
}

inline bool finite_sample(double x) { return std::isfinite(x); }
inline bool finite_sample(long double x) { return std::isfinite(static_cast<double>(x)); }
template <class T>
bool finite_sample(const std::complex<T>& z) {
  return finite_sample(z.real()) && finite_sample(z.imag());
}

// Kahan-compensated accumulator; works for real and complex value types.
template <class V>
struct Compensated {
  V sum{};
  V carry{};
  void add(V x) {
    V y = x - carry;
    V t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  V total() const { return sum; }
};

// Composite Simpson with weights 1,4,2,...,4,1 over s subintervals. The value
// type is whatever the integrand returns (double, long double, or complex).
template <class F>
auto simpson_sum(F&& f, double a, double b, std::int64_t s) {
  using V = std::decay_t<std::invoke_result_t<F&, double>>;
  if (s < 2 || (s % 2) != 0) throw std::invalid_argument("simpson: subinterval count must be even and >= 2");
  if (!(a <= b)) throw std::invalid_argument("simpson: requires a <= b");
  const double h = (b - a) / static_cast<double>(s);
  Compensated<V> acc;
  for (std::int64_t j = 0; j <= s; ++j) {
    const double x = (j == s) ? b : a + static_cast<double>(j) * h;
    V fx = f(x);
    if (!finite_sample(fx)) throw std::domain_error("simpson: non-finite sample");
    const double w = (j == 0 || j == s) ? 1.0 : ((j % 2) ? 4.0 : 2.0);
    acc.add(fx * V(w));
  }
  return acc.total() * V(h / 3.0);
}

// Gauss-Legendre panels for smooth oscillatory integrands: one 20-point rule
// resolves several oscillation cycles per panel to near long-double accuracy,
// where 4th-order Simpson would need millions of nodes for the same target.
inline constexpr int kGaussOrder = 20;

struct GaussRule {
  long double node[kGaussOrder];    // roots of P_n on (-1, 1), descending
  long double weight[kGaussOrder];
};

inline const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    GaussRule r{};
    constexpr int n = kGaussOrder;
    constexpr long double pi = 3.141592653589793238462643383279502884L;
    for (int i = 0; i < n; ++i) {
      long double x = std::cos(pi * (static_cast<long double>(i) + 0.75L) /
                               (static_cast<long double>(n) + 0.5L));
      long double p1 = 0, dp = 0;
      for (int it = 0; it < 80; ++it) {
        long double p0 = 1.0L;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          const long double p2 =
              ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / static_cast<long double>(k);
          p0 = p1;
          p1 = p2;
        }
        dp = static_cast<long double>(n) * (x * p1 - p0) / (x * x - 1.0L);
        const long double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-19L * (1.0L + std::fabs(x))) break;
      }
      r.node[i] = x;
      r.weight[i] = 2.0L / ((1.0L - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

// Composite Gauss-Legendre over s equal panels.
template <class F>
auto gauss_sum(F&& f, double a, double b, std::int64_t s) {
  using V = std::decay_t<std::invoke_result_t<F&, double>>;
  if (s < 1) throw std::invalid_argument("gauss: panel count must be >= 1");
  if (!(a <= b)) throw std::invalid_argument("gauss: requires a <= b");
  const GaussRule& gr = gauss_rule();
  const long double h =
      (static_cast<long double>(b) - static_cast<long double>(a)) / static_cast<long double>(s);
  Compensated<V> acc;
  for (std::int64_t j = 0; j < s; ++j) {
    const long double mid = static_cast<long double>(a) + (static_cast<long double>(j) + 0.5L) * h;
    for (int q = 0; q < kGaussOrder; ++q) {
      const double x = static_cast<double>(mid + 0.5L * h * gr.node[q]);
      V fx = f(x);
      if (!finite_sample(fx)) throw std::domain_error("gauss: non-finite sample");
      acc.add(fx * V(gr.weight[q]));
    }
  }
  return acc.total() * V(0.5L * h);
}

template <class V>
struct AdaptiveValue {
  V value{};
  double est_error = 0;
  std::int64_t panels_used = 0;
  bool converged = true;
};

// Doubles the panel count until successive composite-Simpson values differ by
// less than spec.tol. Never throws for slow convergence: the caller decides
// whether a non-converged estimate is still usable (the public wrapper turns
// it into ToleranceNotReached, the moment engine folds it into est_error).
template <class F>
auto adaptive_simpson_value(F&& f, double a, double b, const QuadratureSpec& spec) {
  using V = std::decay_t<std::invoke_result_t<F&, double>>;
  validate(spec);
  if (a == b) return AdaptiveValue<V>{V{}, 0.0, spec.panels, true};
  std::int64_t s = spec.panels;
  V prev = simpson_sum(f, a, b, s);
  V cur = prev;
  double err = 0;
  for (int d = 1; d <= spec.max_doublings; ++d) {
    s *= 2;
    cur = simpson_sum(f, a, b, s);
    err = mag(cur - prev);
    if (err < spec.tol) return AdaptiveValue<V>{cur, err, s, true};
    prev = cur;
  }
  return AdaptiveValue<V>{cur, err, s, false};
}

// Same doubling protocol as adaptive_simpson_value, on Gauss-Legendre panels.
template <class F>
auto adaptive_gauss_value(F&& f, double a, double b, const QuadratureSpec& spec) {
  using V = std::decay_t<std::invoke_result_t<F&, double>>;
  validate(spec);
  if (a == b) return AdaptiveValue<V>{V{}, 0.0, spec.panels, true};
  std::int64_t s = std::max<std::int64_t>(spec.panels, 1);
  V prev = gauss_sum(f, a, b, s);
  V cur = prev;
  double err = 0;
  for (int d = 1; d <= spec.max_doublings; ++d) {
    s *= 2;
    cur = gauss_sum(f, a, b, s);
    err = mag(cur - prev);
    if (err < spec.tol) return AdaptiveValue<V>{cur, err, s, true};
    prev = cur;
  }
  return AdaptiveValue<V>{cur, err, s, false};
}

template <class V>
struct DecayingValue {
  V value{};
  double est_error = 0;
  std::int64_t panels_used = 0;
  double tail_bound = 0;
  bool converged = true;
};

// Tail bound 2 C X^(1-p)/(p-1) past the truncation radius, with C inferred
// from samples at |x| in {X, 2X, 4X}. Throws DecayCheckFailed when the
// samples contradict the claimed exponent badly enough to matter.
template <class F>
double decay_tail_bound(F&& f, const QuadratureSpec& spec) {
  const double X = spec.truncation_radius;
  const double p = spec.decay_exponent;
  if (!(p >= 2)) throw std::invalid_argument("integrate_decaying: decay exponent must be >= 2");
  double c[3];
  for (int k = 0; k < 3; ++k) {
    const double x = X * static_cast<double>(1 << k);
    const double m = std::max(mag(f(x)), mag(f(-x)));
    c[k] = m * std::pow(x, p);
  }
  const double tail_of = 2.0 / (p - 1.0) * std::pow(X, 1.0 - p);
  // Growth of the inferred constant across a doubling means the claimed decay
  // exponent is too optimistic; only reject when the resulting tail matters.
  if (c[2] > 8.0 * std::max(c[0], c[1]) && c[2] * tail_of > 0.1 * spec.tol)
    throw DecayCheckFailed("integrate_decaying: samples inconsistent with claimed decay exponent");
  return std::max(c[0], std::max(c[1], c[2])) * tail_of;
}

// Gauss-panel variant of integrate_decaying_value, for smooth oscillatory
// integrands (the moment engine's inner transforms).
template <class F>
auto integrate_decaying_gauss_value(F&& f, const QuadratureSpec& spec) {
  using V = std::decay_t<std::invoke_result_t<F&, double>>;
  validate(spec);
  const double X = spec.truncation_radius;
  const double tail = decay_tail_bound(f, spec);
  QuadratureSpec inner = spec;
  inner.tol = std::max(spec.tol - tail, 0.05 * spec.tol);
  auto r = adaptive_gauss_value(f, -X, X, inner);
  const bool ok = r.converged && r.est_error + tail <= spec.tol;
  return DecayingValue<V>{r.value, r.est_error + tail, r.panels_used, tail, ok};
}

// Truncates an integral over the whole line to [-X, X] and folds a tail bound
// 2 C X^(1-p)/(p-1) into the error estimate, with C estimated from samples at
// |x| in {X, 2X, 4X}.
template <class F>
auto integrate_decaying_value(F&& f, const QuadratureSpec& spec) {
  using V = std::decay_t<std::invoke_result_t<F&, double>>;
  validate(spec);
  const double X = spec.truncation_radius;
  const double tail = decay_tail_bound(f, spec);

  QuadratureSpec inner = spec;
  // A tail at or above tol leaves no budget for the truncated integral; keep
  // refining toward a floor so the returned estimate is still the best
  // available, and report non-convergence through the flag.
  inner.tol = std::max(spec.tol - tail, 0.05 * spec.tol);
  auto r = adaptive_simpson_value(f, -X, X, inner);
  const bool ok = r.converged && r.est_error + tail <= spec.tol;
  return DecayingValue<V>{r.value, r.est_error + tail, r.panels_used, tail, ok};
}

}  // namespace detail

template <class F>
double simpson(F&& f, double a, double b, std::int64_t s) {
  return detail::to_double(detail::simpson_sum(f, a, b, s));
}

template <class F>
QuadResult adaptive_simpson(F&& f, double a, double b, const QuadratureSpec& spec) {
  const auto r = detail::adaptive_simpson_value(f, a, b, spec);
  if (!r.converged)
    throw ToleranceNotReached("adaptive Simpson: tolerance not reached within doubling budget",
                              detail::to_double(r.value), r.est_error);
  return QuadResult{detail::to_double(r.value), r.est_error, r.panels_used};
}

template <class F>
QuadResult integrate_decaying(F&& f, const QuadratureSpec& spec) {
  const auto r = detail::integrate_decaying_value(f, spec);
  if (!r.converged)
    throw ToleranceNotReached("integrate_decaying: tolerance not reached (truncation tail included)",
                              detail::to_double(r.value), r.est_error);
  return QuadResult{detail::to_double(r.value), r.est_error, r.panels_used};
}

}  // namespace vanbound
