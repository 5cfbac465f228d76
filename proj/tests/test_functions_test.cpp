#include <cmath>
#include <numbers>

#include "doctest.h"
#include "vanbound/test_functions.hpp"

using namespace vanbound;

namespace {
QuadratureSpec tight() {
  QuadratureSpec spec;
  spec.tol = 1e-12;
  return spec;
}
}  // namespace

TEST_SUITE_BEGIN("test-functions");

TEST_CASE("naive pair: squared sinc against the triangle transform") {
  CHECK(naive_phi(0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  // phi(1/(2v)) = (sin(pi/2)/(pi/2))^2 = 4/pi^2
  const double fourOverPiSq = 4.0 / (std::numbers::pi * std::numbers::pi);
  CHECK(naive_phi(0.5, 1.0) == doctest::Approx(fourOverPiSq).epsilon(1e-14));
  CHECK(naive_phi(1.0, 0.5) == doctest::Approx(fourOverPiSq).epsilon(1e-14));
  // phi vanishes at the nonzero integer multiples of 1/v.
  CHECK(std::fabs(naive_phi(3.0, 1.0)) < 1e-28);

  CHECK(naive_phi_hat(0.0, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(naive_phi_hat(0.5, 0.5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(naive_phi_hat(0.25, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(naive_phi_hat(0.7, 0.5) == 0.0);

  // The transform has unit mass at every support.
  for (double v : {2.0, 1.0, 0.25}) {
    const double mass = simpson([v](double y) { return naive_phi_hat(y, v); }, -v, v, 4096);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("window parameters for the optimal kernels are the frozen roots") {
  const F0Params even = f0_params(GroupKind::SOEven);
  CHECK(even.a == doctest::Approx(1.03539816339744831).epsilon(1e-14));
  CHECK(even.b == doctest::Approx(1.20994759561129715).epsilon(1e-14));
  const F0Params odd = f0_params(GroupKind::SOOdd);
  CHECK(odd.a == doctest::Approx(-0.535398163397448310).epsilon(1e-14));
  CHECK(odd.b == doctest::Approx(1.55982963017384408).epsilon(1e-14));
  // The two phases differ by pi/2 exactly.
  CHECK(even.a - odd.a == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK_THROWS_AS(f0_params(GroupKind::O), std::invalid_argument);
}

TEST_CASE("optimal pair values at the center are the frozen constants") {
  const TestFunction even = make_test_function(TfKind::OptimalEven, 2.0);
  const TestFunction odd = make_test_function(TfKind::OptimalOdd, 2.0);
  CHECK(even.phi_zero == doctest::Approx(1.33792000495143534).epsilon(1e-14));
  CHECK(odd.phi_zero == doctest::Approx(0.805024202871468363).epsilon(1e-14));
  CHECK(tf_phi_hat(even, 0.0) == doctest::Approx(0.683072621031174597).epsilon(1e-13));
  CHECK(tf_phi_hat(odd, 0.0) == doctest::Approx(0.411003640138340094).epsilon(1e-13));
}

TEST_CASE("fast pair evaluation agrees with the defining quadratures") {
  const QuadratureSpec spec = tight();
  for (GroupKind g : {GroupKind::SOEven, GroupKind::SOOdd}) {
    const TestFunction tf = make_test_function(optimal_kind_of(g), 2.0);
    for (double y : {0.0, 0.31, 1.0, 1.62, 1.97}) {
      CHECK(tf_phi_hat(tf, y) ==
            doctest::Approx(optimal_phi_hat(g, y, spec)).epsilon(1e-10));
    }
    CHECK(tf_phi_hat(tf, 2.3) == 0.0);
    for (double x : {0.0, 0.17, 0.5, 1.4, 3.7}) {
      const double byquad = optimal_phi(g, x, spec);
      CHECK(tf_phi(tf, x) == doctest::Approx(byquad).epsilon(5e-10));
    }
  }
  const TestFunction nv = make_test_function(TfKind::Naive, 0.5);
  for (double x : {0.0, 0.4, 1.9, 12.0}) {
    CHECK(tf_phi(nv, x) == doctest::Approx(naive_phi(x, 0.5)).epsilon(1e-14));
  }
}

TEST_CASE("closed-form autocorrelation matches its integral definition") {
  const QuadratureSpec spec = tight();
  for (GroupKind g : {GroupKind::SOEven, GroupKind::SOOdd}) {
    for (double y : {0.0, 0.2, 0.77, 1.0, 1.31, 1.9}) {
      const double closed = static_cast<double>(
          detail::phi_hat_base_closed(g, static_cast<long double>(y)));
      CHECK(closed == doctest::Approx(optimal_phi_hat(g, y, spec)).epsilon(1e-10));
    }
  }
}

TEST_CASE("sigma^2 is support-independent for the naive pair") {
  const QuadratureSpec spec = tight();
  for (double v : {2.0, 1.0, 2.0 / 3.0, 0.5, 0.2}) {
    const TestFunction tf = make_test_function(TfKind::Naive, v);
    CHECK(sigma_sq(tf, spec) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("sigma^2 of the optimal pairs matches the frozen values") {
  const QuadratureSpec spec = tight();
  const TestFunction even = make_test_function(TfKind::OptimalEven, 2.0);
  const TestFunction odd = make_test_function(TfKind::OptimalOdd, 2.0);
  CHECK(sigma_sq(even, spec) == doctest::Approx(0.597608024231942744).epsilon(1e-12));
  CHECK(sigma_sq(odd, spec) == doctest::Approx(0.215831499475073416).epsilon(1e-12));
}

TEST_CASE("kind helpers map between groups and pairs") {
  CHECK(!is_optimal(TfKind::Naive));
  CHECK(is_optimal(TfKind::OptimalEven));
  CHECK(group_of(TfKind::OptimalEven) == GroupKind::SOEven);
  CHECK(group_of(TfKind::OptimalOdd) == GroupKind::SOOdd);
  CHECK(optimal_kind_of(GroupKind::SOEven) == TfKind::OptimalEven);
  CHECK(optimal_kind_of(GroupKind::SOOdd) == TfKind::OptimalOdd);
  CHECK_THROWS_AS(optimal_kind_of(GroupKind::O), std::invalid_argument);
  CHECK_THROWS_AS(make_test_function(TfKind::Naive, -1.0), std::invalid_argument);
}

TEST_SUITE_END();
