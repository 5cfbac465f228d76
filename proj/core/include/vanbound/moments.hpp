#pragma once

#include <complex>
#include <cstdint>

#include "vanbound/quadrature.hpp"
#include "vanbound/test_functions.hpp"

namespace vanbound {

// n-th centered moment of the 1-level density sum, split into its Gaussian
// main term and the group-dependent correction S:
//   total = (n-1)!! * sigma_sq^{n/2}  +  group_sign * S_value.
struct MomentValue {
  int n = 0;
  double sigma_sq = 0;
  double S_value = 0;
  double total = 0;
  int group_sign = +1;
  double est_error = 0;
};

// Record of one kernel evaluation I1(x, v) used by the moment reduction.
// I2 is its complex conjugate, so it is never stored.
struct ReductionKernel {
  double x = 0;
  double v = 0;
  std::complex<double> i1;
};

// n(n-2)(n-4)... with 0!! = (-1)!! = 1; throws std::overflow_error once the
// product leaves 64 bits and std::invalid_argument for n < -1.
std::uint64_t double_factorial(int n);

// I1(x, v) = 2 int_0^v phi_hat(y) e^{2 pi i x y} dy. Closed form for the
// naive pair (series-guarded at small argument), quadrature of
// the defining integral for the optimal pairs.
std::complex<double> inner_transform(const TestFunction& tf, double x,
                                     const QuadratureSpec& spec);

ReductionKernel reduction_kernel(const TestFunction& tf, double x,
                                 const QuadratureSpec& spec);

// R(m, i; phi) through the reduction to 1-dimensional integrals:
//   R = 2^{m-1} (-1)^{m+1} sum_{l=0}^{i-1} (-1)^l C(m,l) (-phi(0)^m/2 + T_l),
//   T_l = int phi^{m-l}(x) Im(I1(x)^l e^{2 pi i x}) / (2 pi x) dx,
// each T_l integrated over the whole line with a decay-checked tail bound.
double R_reduced(int m, int i, const TestFunction& tf, const QuadratureSpec& spec);

// Same value straight from the multi-dimensional definition: the outer l
// phi_hat variables by tensor-product Simpson over [0, v]^l (weight 2^l by
// evenness), the inner oscillatory variable adaptively. Only feasible for
// i <= 3; serves as the independent oracle for R_reduced.
double R_bruteforce(int m, int i, const TestFunction& tf, const QuadratureSpec& spec);

// S(n, a; phi) = sum_{l=0}^{floor((a-1)/2)}
//                n! / ((n-2l)! l!) * R(n-2l, a-2l; phi) * (sigma_sq/2)^l.
double S_value(int n, int a, const TestFunction& tf, const QuadratureSpec& spec);

// The full even centered moment with the group's sign on S(n, n/2; phi).
// Requires supp(phi_hat) within [-2/n, 2/n], i.e. tf.v <= 2/n.
MomentValue centered_moment(int n, const TestFunction& tf, GroupKind group,
                            const QuadratureSpec& spec);

namespace detail {

// Long-double value with a double error estimate; the extended precision is
// what survives the 2^{m-1} C(m,l) amplification inside R and S.
struct Estimated {
  long double value = 0.0L;
  double est_error = 0;
};

std::complex<long double> inner_transform_fast(const TestFunction& tf, long double x);

// 4 pi int_0^v y phi_hat(y) dy — the slope of Im I1 at x = 0, needed for the
// removable singularity of the T_l integrands.
long double i1_slope_coeff(const TestFunction& tf);

Estimated sigma_sq_tight(TfKind kind);

Estimated R_reduced_full(int m, int i, const TestFunction& tf, const QuadratureSpec& spec);
Estimated R_bruteforce_full(int m, int i, const TestFunction& tf, const QuadratureSpec& spec);
Estimated S_value_full(int n, int a, const TestFunction& tf, const QuadratureSpec& spec);

}  // namespace detail

}  // namespace vanbound
