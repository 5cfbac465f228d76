#include "vanbound/moments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "vanbound/errors.hpp"

namespace vanbound {

namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;
constexpr long double kTwoPiL = 2.0L * kPiL;

using CL = std::complex<long double>;

long double ipow_ld(long double base, int e) {
  long double r = 1.0L;
  for (int j = 0; j < e; ++j) r *= base;
  return r;
}

CL ipow_cl(CL base, int e) {
  CL r(1.0L, 0.0L);
  for (int j = 0; j < e; ++j) r *= base;
  return r;
}

CL exp_i(long double t) { return CL(std::cos(t), std::sin(t)); }

// Binomial coefficient, exact in the 64-bit mantissa for the m <= 64 we need.
long double binom_ld(int n, int k) {
  long double r = 1.0L;
  for (int j = 1; j <= k; ++j) r = r * static_cast<long double>(n - k + j) / static_cast<long double>(j);
  return r;
}

// Primitive integrals of e^{iwu} and u e^{iwu} over [lo, hi], with series
// fallbacks where the closed forms cancel.
CL E0(long double w, long double lo, long double hi) {
  if (std::fabs(w) < 1e-2L) {
    CL acc(0.0L, 0.0L);
    CL iwk(1.0L, 0.0L);
    long double hik = hi, lok = lo, fact = 1.0L;
    for (int k = 0; k <= 16; ++k) {
      hik *= (k == 0) ? 1.0L : hi;  // hi^{k+1}
      lok *= (k == 0) ? 1.0L : lo;
      fact *= static_cast<long double>(k + 1);
      const CL term = iwk * ((hik - lok) / fact);
      acc += term;
      if (std::abs(term) < 1e-25L) break;
      iwk *= CL(0.0L, w);
    }
    return acc;
  }
  const CL iw(0.0L, w);
  return (exp_i(w * hi) - exp_i(w * lo)) / iw;
}

CL E1(long double w, long double lo, long double hi) {
  if (std::fabs(w) < 1e-2L) {
    CL acc(0.0L, 0.0L);
    CL iwk(1.0L, 0.0L);
    long double hik = hi * hi, lok = lo * lo, fact = 1.0L;
    for (int k = 0; k <= 16; ++k) {
      if (k > 0) {
        hik *= hi;  // hi^{k+2}
        lok *= lo;
        fact *= static_cast<long double>(k);
      }
      const CL term = iwk * ((hik - lok) / (static_cast<long double>(k + 2) * fact));
      acc += term;
      if (std::abs(term) < 1e-25L) break;
      iwk *= CL(0.0L, w);
    }
    return acc;
  }
  const CL iw(0.0L, w);
  const long double w2 = w * w;
  const auto anti = [&](long double u) { return exp_i(w * u) * (u / iw + 1.0L / w2); };
  return anti(hi) - anti(lo);
}

void require_tf(const TestFunction& tf) {
  if (!(tf.v > 0) || !std::isfinite(tf.v)) {
    throw std::invalid_argument("test function support v must be positive and finite");
  }
}

// |phi(x)| <= envelope_constant / x^2 wherever the moment integrals are
// truncated (all x for the naive pair, |x| >= 2/v for the optimal pairs).
long double envelope_constant(const TestFunction& tf) {
  const long double v = tf.v;
  if (tf.kind == TfKind::Naive) return 1.0L / (kPiL * v * kPiL * v);
  const detail::F0ParamsL p = detail::f0_params_ld(group_of(tf.kind));
  const long double amp =
      (2.0L / p.b) * (std::fabs(std::cos(p.a)) + 2.0L * std::fabs(std::sin(p.a)));
  const long double a1 = amp / (kTwoPiL - 0.5L);
  const long double s = 0.5L * v;
  return (a1 / s) * (a1 / s);
}

// Snap a truncation radius onto the grid X = (K + delta)/v, scanning a few
// offsets so that the decay-check samples at X, 2X, 4X avoid the zero sets of
// both oscillatory factors (sin(2 pi x) from the kernel, sin(pi v x) from the
// test-function envelope).
double aligned_radius(double x_need, double v, double cap) {
  long long k = static_cast<long long>(std::ceil(x_need * v));
  long long k_max = static_cast<long long>(std::floor(cap * v)) - 1;
  if (k_max < 2) k_max = 2;
  if (k > k_max) k = k_max;
  if (k < 2) k = 2;
  constexpr double offsets[] = {1.0 / 3.0, 0.37, 0.30, 0.41};
  for (double delta : offsets) {
    const double x = (static_cast<double>(k) + delta) / v;
    bool good = true;
    for (int j = 0; j < 3 && good; ++j) {
      const double xs = x * static_cast<double>(1 << j);
      if (std::fabs(std::sin(2.0 * std::numbers::pi * xs)) < 0.25 ||
          std::fabs(std::sin(std::numbers::pi * v * xs)) < 0.40) {
        good = false;
      }
    }
    if (good) return x;
  }
  return (static_cast<double>(k) + 1.0 / 3.0) / v;
}

std::int64_t seed_panels(double radius, std::int64_t at_least) {
  std::int64_t s = static_cast<std::int64_t>(32.0 * radius);
  s = std::max<std::int64_t>(s, at_least);
  s = std::max<std::int64_t>(s, 64);
  s = std::min<std::int64_t>(s, 1 << 17);
  if (s % 2) ++s;
  return s;
}

detail::Estimated tight_sigma(GroupKind group) {
  // sigma^2 = 2 int |y| phi_hat^2 dy = 4 int_0^2 y phi_hat(y)^2 dy for the
  // base optimal pair; the value is dilation-invariant.
  const auto f = [&](double y) -> long double {
    const long double h = detail::phi_hat_base_closed(group, y);
    return static_cast<long double>(y) * h * h;
  };
  QuadratureSpec spec;
  spec.panels = 64;  // keeps the kink at y = 1 on a panel boundary
  spec.tol = 1e-17;
  spec.max_doublings = 26;
  const auto r = detail::adaptive_simpson_value(f, 0.0, 2.0, spec);
  return {4.0L * r.value, 4.0 * r.est_error};
}

long double tight_beta(GroupKind group) {
  const auto f = [&](double y) -> long double {
    return static_cast<long double>(y) * detail::phi_hat_base_closed(group, y);
  };
  QuadratureSpec spec;
  spec.panels = 64;
  spec.tol = 1e-17;
  spec.max_doublings = 26;
  const auto r = detail::adaptive_simpson_value(f, 0.0, 2.0, spec);
  return 4.0L * kPiL * r.value;
}

}  // namespace

std::uint64_t double_factorial(int n) {
  if (n < -1) throw std::invalid_argument("double factorial requires n >= -1");
  std::uint64_t r = 1;
  for (int k = n; k >= 2; k -= 2) {
    if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(k), &r)) {
      throw std::overflow_error("double factorial exceeds 64 bits");
    }
  }
  return r;
}

namespace detail {

std::complex<long double> inner_transform_fast(const TestFunction& tf, long double x) {
  if (tf.kind == TfKind::Naive) {
    const long double th = kTwoPiL * static_cast<long double>(tf.v) * x;
    if (std::fabs(th) < 0.5L) {
      // 2(1-cos th)/th^2 and 2(th - sin th)/th^2 as alternating series.
      // Direct evaluation loses ~th^-2 digits to cancellation, which the
      // moment sums amplify by large binomial factors, so the switchover
      // has to happen while the series still converges in a few terms.
      const long double t2 = th * th;
      long double re = 0.0L, im = 0.0L;
      long double pw = 1.0L;      // th^{2j}
      long double f2 = 2.0L;      // (2j+2)!
      long double f3 = 6.0L;      // (2j+3)!
      long double sgn = 1.0L;
      for (int j = 0; j < 16; ++j) {
        const long double tre = sgn * 2.0L * pw / f2;
        const long double tim = sgn * 2.0L * pw * th / f3;
        re += tre;
        im += tim;
        if (std::fabs(tre) + std::fabs(tim) < 1e-23L) break;
        pw *= t2;
        sgn = -sgn;
        f2 *= (2.0L * j + 3.0L) * (2.0L * j + 4.0L);
        f3 *= (2.0L * j + 4.0L) * (2.0L * j + 5.0L);
      }
      return CL(re, im);
    }
    const long double half = 0.5L * th * th;
    return CL((1.0L - std::cos(th)) / half, (th - std::sin(th)) / half);
  }
  // Dilation sends I1 for support v to the base kernel at (v/2) x.
  const GroupKind g = group_of(tf.kind);
  const long double mu = kTwoPiL * 0.5L * static_cast<long double>(tf.v) * x;
  CL acc(0.0L, 0.0L);
  for (const TrigTerm& t : ac_terms(g)) {
    const CL fp = t.p0 * E0(mu + t.s, t.lo, t.hi) + t.p1 * E1(mu + t.s, t.lo, t.hi);
    const CL fm = t.p0 * E0(mu - t.s, t.lo, t.hi) + t.p1 * E1(mu - t.s, t.lo, t.hi);
    const CL eq = exp_i(t.q);
    if (t.is_sin) {
      acc += (eq * fp - std::conj(eq) * fm) * CL(0.0L, -0.5L);
    } else {
      acc += (eq * fp + std::conj(eq) * fm) * 0.5L;
    }
  }
  return 2.0L * acc;
}

long double i1_slope_coeff(const TestFunction& tf) {
  if (tf.kind == TfKind::Naive) return kTwoPiL * static_cast<long double>(tf.v) / 3.0L;
  static const long double even = tight_beta(GroupKind::SOEven);
  static const long double odd = tight_beta(GroupKind::SOOdd);
  const long double base = (tf.kind == TfKind::OptimalEven) ? even : odd;
  return 0.5L * static_cast<long double>(tf.v) * base;
}

Estimated sigma_sq_tight(TfKind kind) {
  if (kind == TfKind::Naive) return {1.0L / 3.0L, 0.0};
  static const Estimated even = tight_sigma(GroupKind::SOEven);
  static const Estimated odd = tight_sigma(GroupKind::SOOdd);
  return (kind == TfKind::OptimalEven) ? even : odd;
}

Estimated R_reduced_full(int m, int i, const TestFunction& tf, const QuadratureSpec& spec) {
  validate(spec);
  require_tf(tf);
  if (m < 1 || i < 1 || i > m) {
    throw std::invalid_argument("R(m, i): requires 1 <= i <= m");
  }
  const long double phi0 = phi_zero_ld(tf.kind);
  const long double beta = i1_slope_coeff(tf);
  const long double ce = envelope_constant(tf);
  const long double pref = ipow_ld(2.0L, m - 1);
  const long double outer_sign = (m % 2 == 1) ? 1.0L : -1.0L;

  Compensated<long double> acc;
  double est = 0;
  for (int l = 0; l < i; ++l) {
    const int k = m - l;  // phi power; the integrand decays like x^{-(2k+1)}
    const long double bin = binom_ld(m, l);
    const double amp = static_cast<double>(pref * bin) * static_cast<double>(i);
    const double tol_l = std::clamp(0.25 * spec.tol / amp, 1e-18, 1e-9);

    // Truncation radius from tail(X) ~ ce^k phi0^l X^{-2k} / (2 pi k).
    const double tail_scale =
        static_cast<double>(ipow_ld(ce, k) * ipow_ld(std::fabs(phi0), l)) /
        (2.0 * std::numbers::pi * k);
    double x_need = std::pow(tail_scale / (0.1 * tol_l), 1.0 / (2.0 * k));
    x_need = std::max({x_need, 6.0, 2.5 / tf.v});
    const double radius = aligned_radius(x_need, tf.v, spec.truncation_radius);
    const double tail_at = tail_scale * std::pow(radius, -2.0 * k);
    const double tol_eff = std::max(tol_l, 2.0 * tail_at);

    const auto h = [&](double xd) -> long double {
      const long double x = static_cast<long double>(xd);
      if (std::fabs(x) < 1e-10L) {
        return ipow_ld(phi0, m) +
               static_cast<long double>(l) * ipow_ld(phi0, m - 1) * beta / kTwoPiL;
      }
      long double val = ipow_ld(tf_phi_ld(tf, x), k);
      if (l > 0) {
        const CL z = ipow_cl(inner_transform_fast(tf, x), l) * exp_i(kTwoPiL * x);
        val *= z.imag();
      } else {
        val *= std::sin(kTwoPiL * x);
      }
      return val / (kTwoPiL * x);
    };

    QuadratureSpec sub = spec;
    sub.tol = tol_eff;
    sub.truncation_radius = radius;
    sub.decay_exponent = 2.0 * k + 1.0;
    // The integrand is entire with at most ~4 oscillation cycles per unit x,
    // so ~3 Gauss panels per unit reach near long-double accuracy; the
    // doubling pass only confirms. Past a few doublings the panel error is
    // far below evaluation noise, so more refinement cannot move the result:
    // stop there and let est_error carry whatever the noise floor was.
    sub.panels = std::clamp<std::int64_t>(
        static_cast<std::int64_t>(3.0 * radius) + 8, 32, std::int64_t{1} << 15);
    sub.panels += sub.panels % 2;  // spec validation expects even counts
    sub.max_doublings = std::min(spec.max_doublings, 6);
    const auto tl = integrate_decaying_gauss_value(h, sub);

    const long double sgn_l = (l % 2 == 1) ? -1.0L : 1.0L;
    acc.add(sgn_l * bin * (-0.5L * ipow_ld(phi0, m) + tl.value));
    est += static_cast<double>(pref * bin) * tl.est_error;
  }
  return {pref * outer_sign * acc.total(), est};
}

Estimated R_bruteforce_full(int m, int i, const TestFunction& tf, const QuadratureSpec& spec) {
  validate(spec);
  require_tf(tf);
  if (m < 1 || i < 1 || i > m) {
    throw std::invalid_argument("R(m, i): requires 1 <= i <= m");
  }
  if (i > 3) {
    throw DimensionTooLarge("brute-force R is limited to i <= 3 (outer dimension l <= 2)");
  }
  const double v = tf.v;
  const long double phi0 = phi_zero_ld(tf.kind);
  const double phi0d = static_cast<double>(phi0);
  const long double ce = envelope_constant(tf);
  const long double pref = ipow_ld(2.0L, m - 1);
  const long double outer_sign = (m % 2 == 1) ? 1.0L : -1.0L;

  Compensated<long double> acc;
  double est = 0;
  for (int l = 0; l < i; ++l) {
    const int k = m - l;
    const long double bin = binom_ld(m, l);
    const double amp =
        static_cast<double>(pref * bin) * static_cast<double>(i) *
        static_cast<double>(ipow_ld(2.0L, l) * ipow_ld(std::fabs(phi0), l));
    const double tol_g = std::clamp(0.05 * spec.tol / amp, 1e-12, 1e-8);

    const double tail_scale =
        static_cast<double>(ipow_ld(ce, k)) / (2.0 * std::numbers::pi * k);
    double radius = std::pow(tail_scale / (0.1 * tol_g), 1.0 / (2.0 * k));
    radius = std::clamp(radius, std::max(6.0, 2.5 / v), spec.truncation_radius);
    const double tail_g = tail_scale * std::pow(radius, -2.0 * k);

    // G(sigma) = int phi^{m-l}(x) sin(2 pi x (1 + sigma)) / (2 pi x) dx,
    // computed as twice the half-line integral and cached on the sigma grid
    // shared by both outer resolutions.
    std::map<long long, std::pair<double, double>> g_cache;
    constexpr int kFine = 64;
    const auto g_at = [&](long long fine_idx) -> std::pair<double, double> {
      const auto it = g_cache.find(fine_idx);
      if (it != g_cache.end()) return it->second;
      const double sigma =
          static_cast<double>(fine_idx) * v / static_cast<double>(l * kFine == 0 ? 1 : kFine);
      const double freq = 2.0 * std::numbers::pi * (1.0 + sigma);
      const auto f = [&](double x) -> double {
        if (std::fabs(x) < 1e-12) return std::pow(phi0d, k) * (1.0 + sigma);
        double ph = 1.0;
        const double p1 = tf_phi(tf, x);
        for (int j = 0; j < k; ++j) ph *= p1;
        return ph * std::sin(freq * x) / (2.0 * std::numbers::pi * x);
      };
      QuadratureSpec sub = spec;
      sub.tol = tol_g;
      sub.panels = seed_panels(radius * (1.0 + sigma), spec.panels);
      const auto r = adaptive_simpson_value(f, 0.0, radius, sub);
      const std::pair<double, double> out{2.0 * to_double(r.value),
                                          2.0 * r.est_error + tail_g};
      g_cache.emplace(fine_idx, out);
      return out;
    };

    long double t_l = 0.0L;
    double est_t = 0;
    if (l == 0) {
      const auto g0 = g_at(0);
      t_l = static_cast<long double>(g0.first);
      est_t = g0.second;
    } else {
      // Tensor-product Simpson over [0, v]^l at two resolutions; evenness of
      // phi_hat folds the full cube down with weight 2^l.
      double vals[2] = {0, 0};
      double g_est_max = 0;
      for (int ri = 0; ri < 2; ++ri) {
        const int p = (ri == 0) ? 32 : 64;
        const double h = v / p;
        const long long stride = kFine / p;
        std::vector<double> w(p + 1), ph(p + 1);
        for (int j = 0; j <= p; ++j) {
          w[j] = (j == 0 || j == p) ? 1.0 : ((j % 2) ? 4.0 : 2.0);
          ph[j] = tf_phi_hat(tf, static_cast<double>(j) * h);
        }
        Compensated<double> sum;
        if (l == 1) {
          for (int j = 0; j <= p; ++j) {
            const auto g = g_at(j * stride);
            sum.add(w[j] * ph[j] * g.first);
            g_est_max = std::max(g_est_max, g.second);
          }
        } else {
          for (int j1 = 0; j1 <= p; ++j1) {
            for (int j2 = 0; j2 <= p; ++j2) {
              const auto g = g_at((j1 + j2) * stride);
              sum.add(w[j1] * w[j2] * ph[j1] * ph[j2] * g.first);
              g_est_max = std::max(g_est_max, g.second);
            }
          }
        }
        vals[ri] = sum.total() * std::pow(h / 3.0, l) * std::pow(2.0, l);
      }
      t_l = static_cast<long double>(vals[1]);
      est_t = std::fabs(vals[1] - vals[0]) / 15.0 +
              std::pow(2.0, l) * std::pow(phi0d, l) * g_est_max;
    }

    const long double sgn_l = (l % 2 == 1) ? -1.0L : 1.0L;
    acc.add(sgn_l * bin * (-0.5L * ipow_ld(phi0, m) + t_l));
    est += static_cast<double>(pref * bin) * est_t;
  }
  return {pref * outer_sign * acc.total(), est};
}

namespace {

struct SKey {
  int kind;
  int n;
  int a;
  double v;
  double tol;
  double radius;
  std::int64_t panels;
  int max_doublings;
  bool operator<(const SKey& o) const {
    return std::tie(kind, n, a, v, tol, radius, panels, max_doublings) <
           std::tie(o.kind, o.n, o.a, o.v, o.tol, o.radius, o.panels, o.max_doublings);
  }
};

std::map<SKey, Estimated> s_cache;            // NOLINT: guarded by s_cache_mutex
std::mutex s_cache_mutex;

}  // namespace

Estimated S_value_full(int n, int a, const TestFunction& tf, const QuadratureSpec& spec) {
  validate(spec);
  require_tf(tf);
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("S(n, a): n must be even and >= 2");
  if (a < 1 || a > n) throw std::invalid_argument("S(n, a): requires 1 <= a <= n");

  const SKey key{static_cast<int>(tf.kind), n,          a,
                 tf.v,                      spec.tol,   spec.truncation_radius,
                 spec.panels,               spec.max_doublings};
  {
    std::lock_guard<std::mutex> lock(s_cache_mutex);
    const auto it = s_cache.find(key);
    if (it != s_cache.end()) return it->second;
  }

  const Estimated s2 = sigma_sq_tight(tf.kind);
  Compensated<long double> acc;
  double est = 0;
  for (int l = 0; 2 * l <= a - 1; ++l) {
    long double coeff = 1.0L;
    for (int j = 0; j < 2 * l; ++j) coeff *= static_cast<long double>(n - j);
    for (int j = 1; j <= l; ++j) coeff /= static_cast<long double>(j);
    const Estimated r = R_reduced_full(n - 2 * l, a - 2 * l, tf, spec);
    const long double pw = ipow_ld(0.5L * s2.value, l);
    acc.add(coeff * r.value * pw);
    est += static_cast<double>(coeff) *
           (static_cast<double>(pw) * r.est_error +
            (l > 0 ? static_cast<double>(std::fabs(r.value) * l *
                                         ipow_ld(0.5L * s2.value, l - 1)) *
                         0.5 * s2.est_error
                   : 0.0));
  }
  const Estimated out{acc.total(), est};
  {
    std::lock_guard<std::mutex> lock(s_cache_mutex);
    s_cache.emplace(key, out);
  }
  return out;
}

}  // namespace detail

std::complex<double> inner_transform(const TestFunction& tf, double x,
                                     const QuadratureSpec& spec) {
  validate(spec);
  require_tf(tf);
  if (tf.kind == TfKind::Naive) {
    const std::complex<long double> z =
        detail::inner_transform_fast(tf, static_cast<long double>(x));
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
  }
  // Defining integral 2 int_0^v phi_hat(y) e^{2 pi i x y} dy, split at the
  // kink of the autocorrelation (y = v/2 after dilation).
  const auto f = [&](double y) {
    const double t = 2.0 * std::numbers::pi * x * y;
    return tf_phi_hat(tf, y) * std::complex<double>(std::cos(t), std::sin(t));
  };
  QuadratureSpec inner = spec;
  inner.tol = spec.tol / 2.0;
  const double waves = std::fabs(x) * tf.v;
  if (waves > 4.0) {
    std::int64_t s = static_cast<std::int64_t>(4.0 * waves);
    inner.panels = std::max(inner.panels, s + (s % 2));
  }
  const auto r1 = detail::adaptive_simpson_value(f, 0.0, tf.v / 2.0, inner);
  const auto r2 = detail::adaptive_simpson_value(f, tf.v / 2.0, tf.v, inner);
  if (!r1.converged || !r2.converged) {
    throw ToleranceNotReached("inner transform: quadrature tolerance not reached",
                              (r1.value + r2.value).real() * 2.0,
                              r1.est_error + r2.est_error);
  }
  return 2.0 * (r1.value + r2.value);
}

ReductionKernel reduction_kernel(const TestFunction& tf, double x,
                                 const QuadratureSpec& spec) {
  return {x, tf.v, inner_transform(tf, x, spec)};
}

double R_reduced(int m, int i, const TestFunction& tf, const QuadratureSpec& spec) {
  return static_cast<double>(detail::R_reduced_full(m, i, tf, spec).value);
}

double R_bruteforce(int m, int i, const TestFunction& tf, const QuadratureSpec& spec) {
  return static_cast<double>(detail::R_bruteforce_full(m, i, tf, spec).value);
}

double S_value(int n, int a, const TestFunction& tf, const QuadratureSpec& spec) {
  return static_cast<double>(detail::S_value_full(n, a, tf, spec).value);
}

MomentValue centered_moment(int n, const TestFunction& tf, GroupKind group,
                            const QuadratureSpec& spec) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("centered moment: n must be even and >= 2");
  }
  if (group == GroupKind::O) {
    throw std::invalid_argument("centered moment: the correction sign needs SO(even) or SO(odd)");
  }
  require_tf(tf);
  if (tf.v > (2.0 / n) * (1.0 + 1e-12)) {
    throw SupportTooWide("centered moment: requires supp(phi_hat) within [-2/n, 2/n]");
  }
  const detail::Estimated s2 = detail::sigma_sq_tight(tf.kind);
  const detail::Estimated s = detail::S_value_full(n, n / 2, tf, spec);
  const int sign = (group == GroupKind::SOEven) ? +1 : -1;
  const double dfac = static_cast<double>(double_factorial(n - 1));
  const double main_term = dfac * static_cast<double>(ipow_ld(s2.value, n / 2));

  MomentValue mv;
  mv.n = n;
  mv.sigma_sq = static_cast<double>(s2.value);
  mv.S_value = static_cast<double>(s.value);
  mv.group_sign = sign;
  mv.total = main_term + sign * mv.S_value;
  mv.est_error = s.est_error +
                 dfac * (n / 2) * static_cast<double>(ipow_ld(s2.value, n / 2 - 1)) * s2.est_error;
  return mv;
}

}  // namespace vanbound
