#include "vanbound/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "vanbound/errors.hpp"

namespace vanbound {

namespace {

double ipow_d(double base, int e) {
  double r = 1;
  for (int j = 0; j < e; ++j) r *= base;
  return r;
}

void require_even_level(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("moment level n must be even and >= 2");
  }
}

TfKind level_one_kind(GroupKind group, TfKind grid_kind) {
  if (grid_kind == TfKind::Naive) return TfKind::Naive;
  return optimal_kind_of(group);
}

}  // namespace

SymmetryGroup symmetry_group(GroupKind kind) {
  switch (kind) {
    case GroupKind::SOEven:
      return {kind, 1.0, +0.5, 0.0, +1};
    case GroupKind::SOOdd:
      return {kind, 1.0, -0.5, 1.0, -1};
    default:
      return {GroupKind::O, 1.0, 0.0, 0.5, 0};
  }
}

int moment_sign(GroupKind kind) {
  const int s = symmetry_group(kind).moment_sign;
  if (s == 0) {
    throw std::invalid_argument("the moment correction sign is undefined for the full orthogonal group");
  }
  return s;
}

namespace detail {

Estimated mean_mu_full(const TestFunction& tf, const QuadratureSpec& spec) {
  validate(spec);
  if (tf.v > 1.0 * (1.0 + 1e-12)) {
    throw SupportTooWide("mean_mu: requires supp(phi_hat) within [-1, 1]");
  }
  if (tf.kind == TfKind::Naive) {
    return {1.0L / static_cast<long double>(tf.v) + 0.5L, 0.0};
  }
  // supp(phi_hat) = [-v, v] lies inside [-1, 1], so the window integral is the
  // full integral; split at the autocorrelation kink y = v/2 and double by
  // evenness.
  QuadratureSpec inner = spec;
  inner.tol = spec.tol / 4.0;
  const auto f = [&](double y) { return tf_phi_hat(tf, y); };
  const QuadResult a = adaptive_simpson(f, 0.0, tf.v / 2.0, inner);
  const QuadResult b = adaptive_simpson(f, tf.v / 2.0, tf.v, inner);
  const long double integral = 2.0L * (static_cast<long double>(a.value) + b.value);
  return {static_cast<long double>(tf_phi_hat(tf, 0.0)) + 0.5L * integral,
          a.est_error + b.est_error};
}

Estimated g_one_level_full(GroupKind group, const TestFunction& tf,
                           const QuadratureSpec& spec) {
  validate(spec);
  const SymmetryGroup sg = symmetry_group(group);
  if (tf.kind == TfKind::Naive) {
    if (tf.v > 2.0 * (1.0 + 1e-12)) {
      throw SupportTooWide("one-level bound: naive pair requires v <= 2");
    }
    const long double v = tf.v;
    const long double window =
        (v <= 1.0L) ? 1.0L : 1.0L - (v - 1.0L) * (v - 1.0L) / (v * v);
    return {1.0L / v + static_cast<long double>(sg.box_coeff) * window +
                static_cast<long double>(sg.const_coeff),
            0.0};
  }
  if (std::fabs(tf.v - 2.0) > 1e-9) {
    throw SupportMismatch("one-level bound: optimal pairs are defined at support v = 2");
  }
  if (group != group_of(tf.kind)) {
    throw std::invalid_argument("one-level bound: test-function kind does not match the group");
  }
  QuadratureSpec inner = spec;
  inner.tol = spec.tol / 2.0;
  const auto f = [&](double y) { return tf_phi_hat(tf, y); };
  const QuadResult w = adaptive_simpson(f, 0.0, 1.0, inner);
  const long double window = 2.0L * static_cast<long double>(w.value);
  return {static_cast<long double>(tf_phi_hat(tf, 0.0)) +
              static_cast<long double>(sg.box_coeff) * window +
              static_cast<long double>(sg.const_coeff) * static_cast<long double>(tf.phi_zero),
          std::fabs(sg.box_coeff) * 2.0 * w.est_error};
}

}  // namespace detail

double mean_mu(const TestFunction& tf, const QuadratureSpec& spec) {
  return static_cast<double>(detail::mean_mu_full(tf, spec).value);
}

double g_one_level(GroupKind group, const TestFunction& tf, const QuadratureSpec& spec) {
  return static_cast<double>(detail::g_one_level_full(group, tf, spec).value);
}

BoundResult one_level_bound(GroupKind group, int r, const TestFunction& tf,
                            const QuadratureSpec& spec) {
  if (r < 1) throw std::invalid_argument("rank must be >= 1");
  const detail::Estimated g = detail::g_one_level_full(group, tf, spec);
  const double denom = static_cast<double>(r) * tf.phi_zero;

  BoundResult b;
  b.group = group;
  b.rank = r;
  b.level = 1;
  b.tf_kind = tf.kind;
  b.numerator = static_cast<double>(g.value);
  b.denom_base = denom;
  b.bound = static_cast<double>(g.value / denom);
  b.valid = true;
  b.est_error = g.est_error / denom;
  return b;
}

BoundResult moment_bound(GroupKind group, int r, int n, const TestFunction& tf,
                         const QuadratureSpec& spec) {
  if (r < 1) throw std::invalid_argument("rank must be >= 1");
  if (group == GroupKind::O) {
    throw std::invalid_argument("moment bounds need the sign-split groups SO(even)/SO(odd)");
  }
  require_even_level(n);
  const double v_expected = 2.0 / static_cast<double>(n);
  if (std::fabs(tf.v - v_expected) > 1e-9 * v_expected) {
    throw SupportMismatch("moment bound at level n needs a test function with support 2/n");
  }

  const MomentValue mv = centered_moment(n, tf, group, spec);
  const detail::Estimated mu = detail::mean_mu_full(tf, spec);
  const double denom = static_cast<double>(r) * tf.phi_zero - static_cast<double>(mu.value);

  BoundResult b;
  b.group = group;
  b.rank = r;
  b.level = n;
  b.tf_kind = tf.kind;
  b.numerator = mv.total;
  b.denom_base = denom;
  b.valid = denom > 0;
  if (b.valid) {
    const double dn = ipow_d(denom, n);
    b.bound = mv.total / dn;
    b.est_error = mv.est_error / dn +
                  static_cast<double>(n) * std::fabs(mv.total) / (dn * denom) * mu.est_error;
  } else {
    b.bound = 1.0;
    b.est_error = 0.0;
  }
  return b;
}

BoundResult bound_at_least(GroupKind group, int r, TfKind kind,
                           const QuadratureSpec& spec, int max_level) {
  if (r < 1) throw std::invalid_argument("rank must be >= 1");
  if (kind != TfKind::Naive && (group == GroupKind::O || optimal_kind_of(group) != kind)) {
    throw std::invalid_argument("bound_at_least: test-function kind does not match the group");
  }
  if (group == GroupKind::SOOdd && r == 1) {
    // Odd functional equations force a zero at the center: every form in the
    // family vanishes to order at least 1, so only the trivial bound holds.
    BoundResult b;
    b.group = group;
    b.rank = 1;
    b.level = 0;
    b.tf_kind = kind;
    b.bound = 1.0;
    b.valid = false;
    b.numerator = 1.0;
    b.denom_base = 0.0;
    b.est_error = 0.0;
    return b;
  }

  BoundResult best = one_level_bound(group, r, make_test_function(TfKind::Naive, 2.0), spec);
  const auto consider = [&best](const BoundResult& c) {
    if (c.bound < best.bound) best = c;
  };
  if (group != GroupKind::O) {
    consider(one_level_bound(group, r, make_test_function(optimal_kind_of(group), 2.0), spec));
    for (int n = 2; n <= max_level; n += 2) {
      const TestFunction tf = make_test_function(kind, 2.0 / static_cast<double>(n));
      const BoundResult c = moment_bound(group, r, n, tf, spec);
      if (c.valid) consider(c);
    }
  }
  return best;
}

std::vector<BoundResult> best_level_table(GroupKind group, const std::vector<int>& ranks,
                                          TfKind kind, const QuadratureSpec& spec,
                                          int max_level) {
  if (ranks.empty()) throw std::invalid_argument("rank list must not be empty");
  std::vector<BoundResult> out;
  out.reserve(ranks.size());
  for (int r : ranks) out.push_back(bound_at_least(group, r, kind, spec, max_level));
  return out;
}

std::vector<BoundResult> bound_grid(GroupKind group, const std::vector<int>& ranks,
                                    const std::vector<int>& levels, TfKind kind,
                                    const QuadratureSpec& spec, int jobs) {
  if (ranks.empty() || levels.empty()) {
    throw std::invalid_argument("grid needs at least one rank and one level");
  }
  // Canonical (rank, level) order, independent of the argument order and of
  // which worker computed a cell.
  std::vector<int> sorted_ranks(ranks);
  std::sort(sorted_ranks.begin(), sorted_ranks.end());
  sorted_ranks.erase(std::unique(sorted_ranks.begin(), sorted_ranks.end()),
                     sorted_ranks.end());
  std::vector<int> sorted_levels(levels);
  std::sort(sorted_levels.begin(), sorted_levels.end());
  sorted_levels.erase(std::unique(sorted_levels.begin(), sorted_levels.end()),
                      sorted_levels.end());
  std::vector<int> moment_levels;
  for (int lv : sorted_levels) {
    if (lv == 1) continue;
    require_even_level(lv);
    if (group == GroupKind::O) {
      throw std::invalid_argument("the full orthogonal group is available only at level 1");
    }
    moment_levels.push_back(lv);
  }

  // The expensive shared piece per level is S(n, n/2); warm its cache in
  // parallel, then assemble rows in the fixed (rank, level) order. Values do
  // not depend on which thread computed them.
  if (jobs > 1 && !moment_levels.empty()) {
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    const int workers =
        std::min<int>(jobs, static_cast<int>(moment_levels.size()));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t idx = next.fetch_add(1); idx < moment_levels.size();
             idx = next.fetch_add(1)) {
          const int n = moment_levels[idx];
          try {
            const TestFunction tf = make_test_function(kind, 2.0 / static_cast<double>(n));
            detail::S_value_full(n, n / 2, tf, spec);
          } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!first_error) first_error = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  std::vector<BoundResult> out;
  out.reserve(sorted_ranks.size() * sorted_levels.size());
  for (int r : sorted_ranks) {
    for (int lv : sorted_levels) {
      if (lv == 1) {
        const TfKind k1 = level_one_kind(group, kind);
        out.push_back(one_level_bound(group, r, make_test_function(k1, 2.0), spec));
      } else {
        const TestFunction tf = make_test_function(kind, 2.0 / static_cast<double>(lv));
        out.push_back(moment_bound(group, r, lv, tf, spec));
      }
    }
  }
  return out;
}

}  // namespace vanbound
