#include "ovmq/phase_quadrature.hpp"

#include <cmath>
#include <numbers>

#include "ovmq/errors.hpp"

namespace ovmq {

PhaseSpaceQuadrature::PhaseSpaceQuadrature(int n_radial, int n_angular)
    : radial_(gauss_laguerre(n_radial)), n_angular_(n_angular) {
  if (n_angular < 1) throw InvalidArgument("PhaseSpaceQuadrature: n_angular must be >= 1");
  double s = 0.0;
  for (int i = 0; i < n_radial; ++i)
    s += radial_.modified_weights[i] * std::exp(-radial_.nodes[i]);
  gaussian_norm_defect_ = std::abs(s - 1.0);
}

double PhaseSpaceQuadrature::gamma_node(int k) const {
  return (k + 0.5) * (2.0 * std::numbers::pi / n_angular_);
}

Complex PhaseSpaceQuadrature::node(int i, int k) const {
  const double r = std::sqrt(radial_.nodes[i]);
  const double g = gamma_node(k);
  return Complex(r * std::cos(g), r * std::sin(g));
}

}  // namespace ovmq
