#include "ovmq/rules.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "ovmq/errors.hpp"

namespace ovmq {

namespace {

// Scaled Laguerre values e^{-x/2} L_k(x) for k = n and k = n-1, via the
// standard three-term recurrence (the e^{-x/2} factor commutes with it).
struct ScaledLaguerre {
  double ln;    // e^{-x/2} L_n(x)
  double lnm1;  // e^{-x/2} L_{n-1}(x)
};

ScaledLaguerre scaled_laguerre(int n, double x) {
  double lkm1 = std::exp(-0.5 * x);  // k = 0
  if (n == 0) return {lkm1, 0.0};
  double lk = (1.0 - x) * lkm1;  // k = 1
  for (int k = 1; k < n; ++k) {
    const double lkp1 = ((2 * k + 1 - x) * lk - k * lkm1) / (k + 1);
    lkm1 = lk;
    lk = lkp1;
  }
  return {lk, lkm1};
}

}  // namespace

LaguerreRule gauss_laguerre(int n) {
  if (n < 1) throw InvalidArgument("gauss_laguerre: order must be >= 1");

  // Golub-Welsch: nodes are eigenvalues of the Jacobi matrix
  // diag(1,3,5,...), offdiag(1,2,3,...).
  Eigen::VectorXd diag(n), subdiag(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + 1.0;
  for (int i = 0; i + 1 < n; ++i) subdiag[i] = static_cast<double>(i + 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, subdiag, Eigen::EigenvaluesOnly);

  LaguerreRule rule;
  rule.nodes = es.eigenvalues();
  rule.weights.resize(n);
  rule.modified_weights.resize(n);

  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[i];
    // Two Newton polish steps on L_n(x) = 0 using x L_n' = n (L_n - L_{n-1}).
    for (int it = 0; it < 2; ++it) {
      const auto l = scaled_laguerre(n, x);
      const double deriv = n * (l.ln - l.lnm1) / x;
      if (deriv != 0.0) x -= l.ln / deriv;
    }
    rule.nodes[i] = x;
    // Abramowitz & Stegun 25.4.45: w_i = x_i / ((n+1)^2 L_{n+1}(x_i)^2);
    // with scaled L the e^{x_i} factor is absorbed exactly.
    const auto lp1 = scaled_laguerre(n + 1, x);
    const double denom = (n + 1.0) * lp1.ln;
    rule.modified_weights[i] = x / (denom * denom);
    rule.weights[i] = rule.modified_weights[i] * std::exp(-x);
  }
  return rule;
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre: order must be >= 1");

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd subdiag(n > 1 ? n - 1 : 0);
  for (int i = 0; i + 1 < n; ++i) {
    const double k = i + 1.0;
    subdiag[i] = k / std::sqrt(4.0 * k * k - 1.0);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, subdiag, Eigen::EigenvaluesOnly);

  GaussRule rule;
  rule.nodes = es.eigenvalues();
  rule.weights.resize(n);

  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[i];
    double pn = 0.0, dpn = 0.0;
    for (int it = 0; it < 2; ++it) {
      // Recurrence for P_n and its derivative.
      double pkm1 = 1.0, pk = x;
      if (n == 1) pk = x;
      for (int k = 1; k < n; ++k) {
        const double pkp1 = ((2 * k + 1) * x * pk - k * pkm1) / (k + 1);
        pkm1 = pk;
        pk = pkp1;
      }
      pn = (n == 0) ? 1.0 : pk;
      dpn = n * (x * pn - pkm1) / (x * x - 1.0);
      if (dpn != 0.0) x -= pn / dpn;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dpn * dpn);
  }
  return rule;
}

GaussRule gauss_legendre(int n, double a, double b) {
  GaussRule base = gauss_legendre(n);
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * base.nodes[i];
    rule.weights[i] = half * base.weights[i];
  }
  return rule;
}

}  // namespace ovmq
