#pragma once

#include <vector>

#include "vanbound/moments.hpp"
#include "vanbound/quadrature.hpp"
#include "vanbound/test_functions.hpp"

namespace vanbound {

// Density kernel of a symmetry type, in the normalized form
//   W_hat(y) = delta_coeff * delta(y) + box_coeff * 1_{|y|<1} + const_coeff.
// The triples are pinned down by requiring the induced one-level g values to
// match both closed-form branches for the naive pair (a tested derivation).
struct SymmetryGroup {
  GroupKind kind = GroupKind::O;
  double delta_coeff = 1;
  double box_coeff = 0;
  double const_coeff = 0;
  int moment_sign = 0;  // +1 SO(even), -1 SO(odd), 0 marks "undefined" for O
};

SymmetryGroup symmetry_group(GroupKind kind);
int moment_sign(GroupKind kind);  // throws for O

struct BoundResult {
  GroupKind group = GroupKind::O;
  int rank = 0;
  int level = 0;  // 1 for one-level bounds, the even moment order n otherwise
  TfKind tf_kind = TfKind::Naive;
  double bound = 1;
  bool valid = false;
  double numerator = 0;
  double denom_base = 0;  // r phi(0) for level 1, r phi(0) - mu for moments
  double est_error = 0;
};

// mu(phi, F) = phi_hat(0) + (1/2) int_{-1}^{1} phi_hat(y) dy, defined for
// supp(phi_hat) within [-1, 1].
double mean_mu(const TestFunction& tf, const QuadratureSpec& spec);

// g_F(phi) = phi_hat(0) + box * int_{-1}^{1} phi_hat + const * phi(0).
// Naive pairs use the exact piecewise closed form; optimal pairs (defined at
// v = 2) integrate the closed-form autocorrelation.
double g_one_level(GroupKind group, const TestFunction& tf, const QuadratureSpec& spec);

// p_r <= g_F(phi) / (r phi(0)).
BoundResult one_level_bound(GroupKind group, int r, const TestFunction& tf,
                            const QuadratureSpec& spec);

// p_r <= ((n-1)!! sigma^n + sign * S(n, n/2)) / (r phi(0) - mu)^n for even n,
// with tf at support v = 2/n. Rows where r phi(0) <= mu carry the trivial
// bound 1 and valid = false.
BoundResult moment_bound(GroupKind group, int r, int n, const TestFunction& tf,
                         const QuadratureSpec& spec);

// Minimum over the admissible levels for one rank: level 1 with both the
// naive and the group's optimal pair, plus every even moment level up to
// max_level using tf kind `kind` at support 2/n. Ties keep the smaller level.
// SO(odd) rank 1 is the trivial row (level 0, bound 1).
BoundResult bound_at_least(GroupKind group, int r, TfKind kind,
                           const QuadratureSpec& spec, int max_level = 20);

std::vector<BoundResult> best_level_table(GroupKind group, const std::vector<int>& ranks,
                                          TfKind kind, const QuadratureSpec& spec,
                                          int max_level = 20);

// Full (rank x level) grid, ordered by (rank, level) regardless of the
// argument order or how many worker threads computed it; duplicate ranks or
// levels collapse. Levels are 1 or even; invalid cells are kept.
std::vector<BoundResult> bound_grid(GroupKind group, const std::vector<int>& ranks,
                                    const std::vector<int>& levels, TfKind kind,
                                    const QuadratureSpec& spec, int jobs = 1);

namespace detail {

Estimated mean_mu_full(const TestFunction& tf, const QuadratureSpec& spec);
Estimated g_one_level_full(GroupKind group, const TestFunction& tf,
                           const QuadratureSpec& spec);

}  // namespace detail

}  // namespace vanbound
