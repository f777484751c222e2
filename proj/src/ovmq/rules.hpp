#pragma once

#include <Eigen/Dense>

namespace ovmq {

// Plain Gauss rule: integrates f against the rule's weight function,
//   integral ~= sum_i weights[i] * f(nodes[i])
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

// Gauss-Laguerre on (0, inf) with weight e^{-x}.  `weights` are the plain
// Christoffel numbers; `modified_weights` carry the extra e^{x_i} factor so
// that sum_i modified_weights[i] * g(x_i) ~= integral_0^inf g(x) dx for
// integrands g that supply their own decay.  The modified weights are
// computed from the scaled polynomial recurrence (never as w_i * e^{x_i},
// which underflows long before the product does).
struct LaguerreRule : GaussRule {
  Eigen::VectorXd modified_weights;
};

LaguerreRule gauss_laguerre(int n);

// Gauss-Legendre on [-1, 1].
GaussRule gauss_legendre(int n);

// Gauss-Legendre mapped to [a, b].
GaussRule gauss_legendre(int n, double a, double b);

}  // namespace ovmq
