#pragma once

#include "ovmq/fock.hpp"
#include "ovmq/rules.hpp"

namespace ovmq {

// Polar quadrature for integrals over the complex plane against d^2z/pi,
// written in action-angle variables z = sqrt(J) e^{i gamma}:
//   integral f d^2z/pi = int_0^inf dJ int_0^{2pi} dgamma/(2pi) f.
// Radial: Gauss-Laguerre in J with the e^{-J} weight restored through the
// modified weights (integrands are expected to supply at least e^{-J} decay;
// per-node terms stay bounded either way).  Angular: uniform midpoint nodes,
// spectrally accurate for smooth periodic integrands and exactly zero on
// Fourier modes 0 < |k| < n_angular.
class PhaseSpaceQuadrature {
 public:
  PhaseSpaceQuadrature(int n_radial, int n_angular);

  int n_radial() const { return static_cast<int>(radial_.nodes.size()); }
  int n_angular() const { return n_angular_; }
  int node_count() const { return n_radial() * n_angular_; }

  double j_node(int i) const { return radial_.nodes[i]; }
  double j_weight(int i) const { return radial_.modified_weights[i]; }
  double gamma_node(int k) const;

  Complex node(int i, int k) const;
  // weight of node (i, k) for the d^2z/pi measure
  double weight(int i) const { return radial_.modified_weights[i] / n_angular_; }

  const LaguerreRule& radial_rule() const { return radial_; }

  // |sum_k w_k e^{-|z_k|^2} - 1|, the construction self-test
  double gaussian_norm_defect() const { return gaussian_norm_defect_; }

 private:
  LaguerreRule radial_;
  int n_angular_;
  double gaussian_norm_defect_;
};

}  // namespace ovmq
