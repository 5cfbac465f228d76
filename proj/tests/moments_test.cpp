#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "vanbound/moments.hpp"

using namespace vanbound;

namespace {

QuadratureSpec engine_spec() {
  QuadratureSpec spec;
  spec.tol = 1e-8;
  return spec;
}

// The reduced one-dimensional integrand of T_l, assembled from public pieces.
double t_integrand(int m, int l, const TestFunction& tf, double x,
                   const QuadratureSpec& spec) {
  const std::complex<double> i1 = inner_transform(tf, x, spec);
  std::complex<double> p(1.0, 0.0);
  for (int j = 0; j < l; ++j) p *= i1;
  const double t = 2.0 * std::numbers::pi * x;
  p *= std::complex<double>(std::cos(t), std::sin(t));
  return std::pow(tf_phi(tf, x), m - l) * p.imag() / t;
}

}  // namespace

TEST_SUITE_BEGIN("moments");

TEST_CASE("double factorial: values, conventions, and overflow") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(6) == 48);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(19) == 654729075ULL);
  CHECK(double_factorial(33) == 6332659870762850625ULL);
  CHECK_THROWS_AS(double_factorial(34), std::overflow_error);
  CHECK_THROWS_AS(double_factorial(35), std::overflow_error);
  CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
}

TEST_CASE("inner transform of the naive pair: closed values") {
  const QuadratureSpec spec = engine_spec();
  const TestFunction tf = make_test_function(TfKind::Naive, 1.0);
  const std::complex<double> at0 = inner_transform(tf, 0.0, spec);
  CHECK(at0.real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(at0.imag() == doctest::Approx(0.0).epsilon(1e-15));
  // x = 1/2, v = 1 puts the phase at pi: I1 = (4/pi^2, 2/pi).
  const std::complex<double> atHalf = inner_transform(tf, 0.5, spec);
  const double pi = std::numbers::pi;
  CHECK(atHalf.real() == doctest::Approx(4.0 / (pi * pi)).epsilon(1e-14));
  CHECK(atHalf.imag() == doctest::Approx(2.0 / pi).epsilon(1e-14));
}

TEST_CASE("inner transform is bounded by the transform mass and conj-symmetric") {
  const QuadratureSpec spec = engine_spec();
  for (double v : {1.0, 0.5, 1.0 / 7.0}) {
    const TestFunction tf = make_test_function(TfKind::Naive, v);
    for (double x : {0.01, 0.3, 1.7, 10.0, 100.0}) {
      const std::complex<double> z = inner_transform(tf, x, spec);
      CHECK(std::abs(z) <= 1.0 + 1e-15);
      const std::complex<double> zm = inner_transform(tf, -x, spec);
      CHECK(zm.real() == doctest::Approx(z.real()).epsilon(1e-14));
      CHECK(zm.imag() == doctest::Approx(-z.imag()).epsilon(1e-14));
    }
  }
  // Optimal pairs: same symmetry, bounded by phi(0) at matching support.
  const TestFunction opt = make_test_function(TfKind::OptimalEven, 2.0);
  for (double x : {0.1, 1.0, 5.0}) {
    const std::complex<double> z = inner_transform(opt, x, spec);
    CHECK(std::abs(z) <= opt.phi_zero + 1e-10);
    const std::complex<double> zm = inner_transform(opt, -x, spec);
    CHECK(zm.real() == doctest::Approx(z.real()).epsilon(1e-9));
    CHECK(zm.imag() == doctest::Approx(-z.imag()).epsilon(1e-9));
  }
}

TEST_CASE("fast inner transform agrees with the public quadrature path") {
  const QuadratureSpec spec = engine_spec();
  for (TfKind kind : {TfKind::OptimalEven, TfKind::OptimalOdd}) {
    const TestFunction tf = make_test_function(kind, 2.0);
    for (double x : {0.05, 0.9, 3.2}) {
      const std::complex<double> slow = inner_transform(tf, x, spec);
      const std::complex<long double> fast =
          detail::inner_transform_fast(tf, static_cast<long double>(x));
      CHECK(static_cast<double>(fast.real()) == doctest::Approx(slow.real()).epsilon(1e-9));
      CHECK(static_cast<double>(fast.imag()) == doctest::Approx(slow.imag()).epsilon(1e-9));
    }
  }
}

TEST_CASE("reduced integrand is even in x (realness of the assembled moment)") {
  const QuadratureSpec spec = engine_spec();
  const TestFunction tf = make_test_function(TfKind::Naive, 0.5);
  for (int l : {0, 1, 2}) {
    for (double x : {0.17, 0.9, 2.3}) {
      const double plus = t_integrand(3, l, tf, x, spec);
      const double minus = t_integrand(3, l, tf, -x, spec);
      CHECK(plus == doctest::Approx(minus).epsilon(1e-13));
    }
  }
}

TEST_CASE("reduction kernel records the evaluation point") {
  const QuadratureSpec spec = engine_spec();
  const TestFunction tf = make_test_function(TfKind::Naive, 1.0);
  const ReductionKernel k = reduction_kernel(tf, 0.5, spec);
  CHECK(k.x == 0.5);
  CHECK(k.v == 1.0);
  CHECK(k.i1.real() == doctest::Approx(4.0 / (std::numbers::pi * std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("R anchors against independently computed values") {
  const QuadratureSpec spec = engine_spec();
  // 35-digit arbitrary-precision recomputations of the reduced integrals.
  const TestFunction v1 = make_test_function(TfKind::Naive, 1.0);
  CHECK(R_reduced(2, 1, v1, spec) == doctest::Approx(1.0 / 12.0).epsilon(1e-10));

  const TestFunction vHalf = make_test_function(TfKind::Naive, 0.5);
  CHECK(R_reduced(4, 2, vHalf, spec) == doctest::Approx(4.0 / 105.0).epsilon(1e-10));

  const TestFunction vThird = make_test_function(TfKind::Naive, 1.0 / 3.0);
  CHECK(std::fabs(R_reduced(6, 3, vThird, spec) - 0.016330166746833413) < 1e-9);

  CHECK_THROWS_AS(R_reduced(2, 3, v1, spec), std::invalid_argument);
  CHECK_THROWS_AS(R_reduced(0, 0, v1, spec), std::invalid_argument);
}

TEST_CASE("reduced and brute-force R agree across the oracle matrix") {
  const QuadratureSpec spec = engine_spec();
  const int mi[6][2] = {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 2}};
  for (const auto& p : mi) {
    for (double v : {1.0, 0.5, 1.0 / 3.0}) {
      CAPTURE(p[0]);
      CAPTURE(p[1]);
      CAPTURE(v);
      const TestFunction tf = make_test_function(TfKind::Naive, v);
      const auto a = detail::R_reduced_full(p[0], p[1], tf, spec);
      const auto b = detail::R_bruteforce_full(p[0], p[1], tf, spec);
      const double diff = std::fabs(static_cast<double>(a.value - b.value));
      CHECK(diff <= a.est_error + b.est_error);
      CHECK(diff <= 1e-6);
    }
  }
  const TestFunction v1 = make_test_function(TfKind::Naive, 1.0);
  CHECK_THROWS_AS(R_bruteforce(8, 4, v1, spec), DimensionTooLarge);
}

TEST_CASE("S reduces to R at the lowest admissible orders") {
  const QuadratureSpec spec = engine_spec();
  const TestFunction v1 = make_test_function(TfKind::Naive, 1.0);
  CHECK(S_value(2, 1, v1, spec) == doctest::Approx(R_reduced(2, 1, v1, spec)).epsilon(1e-14));
  const TestFunction vHalf = make_test_function(TfKind::Naive, 0.5);
  CHECK(S_value(4, 2, vHalf, spec) == doctest::Approx(R_reduced(4, 2, vHalf, spec)).epsilon(1e-14));
  CHECK_THROWS_AS(S_value(3, 1, v1, spec), std::invalid_argument);
  CHECK_THROWS_AS(S_value(4, 5, v1, spec), std::invalid_argument);
}

TEST_CASE("S at the table supports matches 35-digit recomputations") {
  // Reference values from an independent arbitrary-precision evaluation of
  // the same integrals (35 significant digits, analytic truncation-tail
  // bounds below 2e-13). Tolerances track the measured accuracy of the
  // 80-bit engine: the binomial amplification inside R grows roughly as
  // 2^n C(n, n/2), so the achievable absolute error rises with the level
  // while the bounds stay insensitive (S is a ~1e-7 relative correction to
  // the Gaussian main term there).
  struct Case {
    int n;
    double s;
    double tol;
  };
  const Case cases[] = {
      {6, 0.017322230238896926, 1e-10},  {8, 0.0089490724834640177, 1e-11},
      {10, 0.0055072579717745533, 2e-11}, {12, 0.0037846312464723765, 2e-10},
      {14, 0.0027285439703616775, 2e-9},  {16, 0.0020360354860808183, 3e-8},
      {18, 0.0015787891392003444, 1e-6},  {20, 0.0012696883626176312, 1e-5},
  };
  const QuadratureSpec spec = engine_spec();
  for (const Case& c : cases) {
    CAPTURE(c.n);
    const TestFunction tf = make_test_function(TfKind::Naive, 2.0 / c.n);
    CHECK(std::fabs(S_value(c.n, c.n / 2, tf, spec) - c.s) < c.tol);
  }
}

TEST_CASE("centered moments split as Gaussian term plus a signed correction") {
  const QuadratureSpec spec = engine_spec();
  for (int n : {2, 4, 6}) {
    CAPTURE(n);
    const TestFunction tf = make_test_function(TfKind::Naive, 2.0 / n);
    const MomentValue even = centered_moment(n, tf, GroupKind::SOEven, spec);
    const MomentValue odd = centered_moment(n, tf, GroupKind::SOOdd, spec);
    const double s = S_value(n, n / 2, tf, spec);
    CHECK(even.group_sign == +1);
    CHECK(odd.group_sign == -1);
    // Opposite signs on the same correction: difference 2S, mean Gaussian.
    CHECK(even.total - odd.total == doctest::Approx(2.0 * s).epsilon(1e-12));
    const double gauss = static_cast<double>(double_factorial(n - 1)) *
                         std::pow(even.sigma_sq, n / 2);
    CHECK(0.5 * (even.total + odd.total) == doctest::Approx(gauss).epsilon(1e-12));
    CHECK(even.S_value == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("centered moment rejects bad orders and too-wide supports") {
  const QuadratureSpec spec = engine_spec();
  const TestFunction tf = make_test_function(TfKind::Naive, 0.5);
  CHECK_THROWS_AS(centered_moment(3, tf, GroupKind::SOEven, spec), std::invalid_argument);
  CHECK_THROWS_AS(centered_moment(0, tf, GroupKind::SOEven, spec), std::invalid_argument);
  CHECK_THROWS_AS(centered_moment(2, tf, GroupKind::O, spec), std::invalid_argument);
  // v = 0.5 exceeds 2/n for n = 6.
  CHECK_THROWS_AS(centered_moment(6, tf, GroupKind::SOEven, spec), SupportTooWide);
}

TEST_SUITE_END();
