// Test-side oracles, independent of the implementation paths they check.
#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace oracles {

using Complex = std::complex<double>;

// Brute-force power series for e^{z a^dag - conj(z) a} |e_0>, evaluated on an
// enlarged space and truncated afterwards; checks the closed-form
// displacement column without going through any matrix code.
inline Eigen::VectorXcd series_displaced_vacuum(int dim, Complex z) {
  const int big = dim + 48 + static_cast<int>(8.0 * std::norm(z));
  Eigen::VectorXcd term = Eigen::VectorXcd::Zero(big);
  term[0] = 1.0;
  Eigen::VectorXcd acc = term;
  Eigen::VectorXcd next(big);
  for (int k = 1; k <= 400; ++k) {
    next.setZero();
    for (int n = 0; n + 1 < big; ++n) next[n + 1] += z * std::sqrt(n + 1.0) * term[n];
    for (int n = 1; n < big; ++n) next[n - 1] -= std::conj(z) * std::sqrt(double(n)) * term[n];
    term = next / double(k);
    acc += term;
    if (term.norm() < 1e-18 * acc.norm() && k > 8) break;
  }
  return acc.head(dim);
}

inline double gaussian_overlap_sq(Complex z, Complex zp) { return std::exp(-std::norm(z - zp)); }

inline double poisson_pn(double j, int n) {
  if (j == 0.0) return n == 0 ? 1.0 : 0.0;
  return std::exp(n * std::log(j) - std::lgamma(n + 1.0) - j);
}

// closed-form c_gamma for the power-exp wavelet (Gamma-integral identity)
inline double power_exp_c_gamma(double alpha, double lambda, double gamma) {
  return std::exp((gamma + 2.0) * std::log(lambda) + std::lgamma(2.0 * alpha - 1.0 - gamma) -
                  std::lgamma(2.0 * alpha + 1.0));
}

// K for the power-exp wavelet; the Gamma integrals collapse to alpha/2
// independent of lambda.
inline double power_exp_kinetic_k(double alpha) { return 0.5 * alpha; }

// truncated trace of the analytic Cahill-Glauber diagonal (geometric series)
inline double cg_trace_geometric(double s, int dim) {
  const double ratio = (s + 1.0) / (s - 1.0);
  double acc = 0.0, cur = 2.0 / (1.0 - s);
  for (int n = 0; n < dim; ++n) {
    acc += cur;
    cur *= ratio;
  }
  return acc;
}

}  // namespace oracles
