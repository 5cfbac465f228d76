#include "vanbound/quadrature.hpp"

namespace vanbound {

void validate(const QuadratureSpec& spec) {
  if (spec.panels < 2 || (spec.panels % 2) != 0)
    throw std::invalid_argument("quadrature: initial panel count must be even and >= 2");
  if (!(spec.tol > 0)) throw std::invalid_argument("quadrature: tolerance must be positive");
  if (spec.max_doublings < 1) throw std::invalid_argument("quadrature: need at least one doubling");
  if (!(spec.truncation_radius > 0)) throw std::invalid_argument("quadrature: truncation radius must be positive");
  if (!(spec.small_arg_threshold > 0)) throw std::invalid_argument("quadrature: small-argument threshold must be positive");
}

}  // namespace vanbound
