#include "ovmq/wh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ovmq/errors.hpp"
#include "ovmq/rules.hpp"

namespace ovmq {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_2pi(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  return y;
}

void check_finite(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NodeEvaluationError(std::string(what) + ": non-finite value at quadrature node");
}

// Real radial displacement matrix d(J) = D(sqrt(J)); the full operator at
// z = sqrt(J) e^{i gamma} factorizes as D(z) = Phi(gamma) d(J) Phi(gamma)^dag
// with Phi = diag(e^{i n gamma}).
Matrix radial_displacement(const FockSpace& space, double j) {
  return displacement(space, Complex(std::sqrt(j), 0.0)).mat;
}

// Discrete angular Fourier coefficients of f on the quadrature's midpoint
// grid at fixed radial node:  F[k] = (1/N) sum_j f(z_ij) e^{i k gamma_j},
// for k in [-(dim-1), dim-1] (stored at offset dim-1).
Vector angular_coefficients(const PhaseSpaceQuadrature& quad, int i, int dim,
                            const PhaseFunction& f, const char* what) {
  const int n = quad.n_angular();
  Vector coeff = Vector::Zero(2 * dim - 1);
  for (int jdx = 0; jdx < n; ++jdx) {
    const Complex fz = f(quad.node(i, jdx));
    check_finite(fz, what);
    const double g = quad.gamma_node(jdx);
    const Complex step = std::exp(kI * g);
    Complex ph = 1.0;  // e^{i k gamma}, k = 0
    coeff[dim - 1] += fz;
    for (int k = 1; k < dim; ++k) {
      ph *= step;
      coeff[dim - 1 + k] += fz * ph;
      coeff[dim - 1 - k] += fz * std::conj(ph);
    }
  }
  coeff /= static_cast<double>(n);
  return coeff;
}

// sum_k w_k f(z_k) Phi_k G(J_k) Phi_k^dag for diagonal seed operators:
// the angular phases factor out of the radial matrix, so each radial node
// costs one small matrix product plus an angular Fourier sum.
Matrix quantize_diagonal_seed(const FockSpace& space, const Vector& m_diag,
                              const PhaseSpaceQuadrature& quad, const PhaseFunction& f,
                              const char* what) {
  const int dim = space.dim;
  Matrix acc = Matrix::Zero(dim, dim);
  Matrix g(dim, dim);
  for (int i = 0; i < quad.n_radial(); ++i) {
    const Matrix d = radial_displacement(space, quad.j_node(i));
    g.noalias() = d * m_diag.asDiagonal() * d.transpose();
    const Vector coeff = angular_coefficients(quad, i, dim, f, what);
    const double w = quad.j_weight(i);
    for (int m = 0; m < dim; ++m)
      for (int n = 0; n < dim; ++n) acc(m, n) += w * g(m, n) * coeff[dim - 1 + m - n];
  }
  return acc;
}

Matrix quantize_generic_seed(const FockSpace& space, const Matrix& m,
                             const PhaseSpaceQuadrature& quad, const PhaseFunction& f,
                             const char* what) {
  const int dim = space.dim;
  Matrix acc = Matrix::Zero(dim, dim);
  Matrix tmp(dim, dim);
  for (int i = 0; i < quad.n_radial(); ++i) {
    for (int jdx = 0; jdx < quad.n_angular(); ++jdx) {
      const Complex z = quad.node(i, jdx);
      const Complex fz = f(z);
      check_finite(fz, what);
      const Matrix d = displacement(space, z).mat;
      tmp.noalias() = d * m;
      acc.noalias() += (quad.weight(i) * fz) * (tmp * d.adjoint());
    }
  }
  return acc;
}

bool is_numerically_diagonal(const Matrix& m) {
  const int dim = static_cast<int>(m.rows());
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      if (r != c && std::abs(m(r, c)) > 1e-13 * scale) return false;
  return true;
}

}  // namespace

FockOperator build_m(const FockSpace& space, const WeightFunction& w,
                     const PhaseSpaceQuadrature& quad) {
  if (w.is_cahill_glauber() && w.cg_s().real() >= 0.0)
    throw IntegrabilityError(
        "build_m: Cahill-Glauber weight with Re s >= 0 has no convergent quadrature; "
        "use cg_m_analytic");

  // M = sum_k w_k w(z_k) D(z_k); with D(z) = Phi d(J) Phi^dag the angular sum
  // reduces to Fourier coefficients of the weight.
  const int dim = space.dim;
  Matrix acc = Matrix::Zero(dim, dim);
  for (int i = 0; i < quad.n_radial(); ++i) {
    const Matrix d = radial_displacement(space, quad.j_node(i));
    const Vector coeff =
        angular_coefficients(quad, i, dim, [&](Complex z) { return w(z); }, "build_m");
    const double wi = quad.j_weight(i);
    for (int m = 0; m < dim; ++m)
      for (int n = 0; n < dim; ++n) acc(m, n) += wi * d(m, n) * coeff[dim - 1 + m - n];
  }
  return {std::move(acc), "M[" + w.label() + "]"};
}

FockOperator cg_m_analytic(const FockSpace& space, Complex s) {
  if (!(s.real() < 1.0)) throw InvalidArgument("cg_m_analytic: requires Re s < 1");
  const Complex ratio = (s + 1.0) / (s - 1.0);
  const Complex pref = 2.0 / (1.0 - s);
  Matrix m = Matrix::Zero(space.dim, space.dim);
  Complex cur = 1.0;
  for (int n = 0; n < space.dim; ++n) {
    m(n, n) = pref * cur;
    cur *= ratio;
  }
  return {std::move(m), "M_s"};
}

double thermal_s(double omega, double temperature) {
  if (!(omega > 0.0)) throw InvalidArgument("thermal_s: omega must be > 0");
  if (!(temperature >= 0.0)) throw InvalidArgument("thermal_s: temperature must be >= 0");
  if (temperature == 0.0) return -1.0;
  return -1.0 / std::tanh(omega / (2.0 * temperature));
}

BoltzmannRho boltzmann_rho(const FockSpace& space, double omega, double temperature) {
  if (!(omega > 0.0)) throw InvalidArgument("boltzmann_rho: omega must be > 0");
  if (!(temperature >= 0.0)) throw InvalidArgument("boltzmann_rho: temperature must be >= 0");
  const double x = temperature == 0.0 ? 0.0 : std::exp(-omega / temperature);
  Matrix rho = Matrix::Zero(space.dim, space.dim);
  double cur = 1.0;
  for (int n = 0; n < space.dim; ++n) {
    rho(n, n) = (1.0 - x) * cur;
    cur *= x;
  }
  return {FockOperator{std::move(rho), "rho_boltzmann"}, cur};
}

WHQuantizer::WHQuantizer(const FockSpace& space, WeightFunction weight,
                         PhaseSpaceQuadrature quad)
    : space_(space), weight_(std::move(weight)), quad_(std::move(quad)) {
  if (weight_.is_cahill_glauber()) {
    m_ = cg_m_analytic(space_, weight_.cg_s());
    m_diagonal_ = true;
    m_rank_one_vacuum_ = (weight_.cg_s() == Complex(-1.0, 0.0));
  } else {
    m_ = build_m(space_, weight_, quad_);
    m_diagonal_ = is_numerically_diagonal(m_.mat);
  }
}

FockOperator WHQuantizer::displaced_m(Complex z) const {
  if (m_rank_one_vacuum_) {
    const Vector c = coherent_state(space_, z).coeffs;
    return {c * c.adjoint(), "M(z)"};
  }
  const Matrix d = displacement(space_, z).mat;
  if (m_diagonal_) {
    const Vector diag = m_.mat.diagonal();
    return {d * diag.asDiagonal() * d.adjoint(), "M(z)"};
  }
  return {d * m_.mat * d.adjoint(), "M(z)"};
}

FockOperator WHQuantizer::quantize(const PhaseFunction& f, const std::string& label) const {
  Matrix a = m_diagonal_
                 ? quantize_diagonal_seed(space_, m_.mat.diagonal(), quad_, f, "quantize")
                 : quantize_generic_seed(space_, m_.mat, quad_, f, "quantize");
  return {std::move(a), label};
}

double WHQuantizer::resolution_defect(int block) const {
  const int blk = block < 0 ? default_safe_block(space_.dim) : block;
  const FockOperator one = quantize([](Complex) { return Complex(1.0); }, "A_1");
  return block_max_diff(one.mat, Matrix::Identity(space_.dim, space_.dim), blk);
}

double WHQuantizer::covariance_defect(const PhaseFunction& f, Complex z0, int block) const {
  const int blk = block < 0 ? default_safe_block(space_.dim) : block;
  const FockOperator shifted = quantize([&](Complex z) { return f(z - z0); }, "A_shift");
  const FockOperator base = quantize(f, "A_f");
  const Matrix d = displacement(space_, z0).mat;
  const Matrix conjugated = d * base.mat * d.adjoint();
  return block_max_diff(shifted.mat, conjugated, blk);
}

double trace_duality_defect(const FockSpace& space, const PhaseSpaceQuadrature& quad,
                            const PhaseFunction& f, Complex s) {
  // M_s is always taken from the analytic form here: the |w_s| = 1 weights
  // this identity applies to are exactly the ones build_m rejects.  The trace
  // follows the safe-block convention; rows at the truncation edge carry
  // radial integrands oscillating like L_n(4J), outside the rule's reach.
  const FockOperator m = cg_m_analytic(space, s);
  const Matrix a = quantize_diagonal_seed(space, m.mat.diagonal(), quad, f, "trace_duality");
  double rhs = 0.0;
  for (int i = 0; i < quad.n_radial(); ++i)
    for (int jdx = 0; jdx < quad.n_angular(); ++jdx) {
      const Complex fz = f(quad.node(i, jdx));
      rhs += quad.weight(i) * std::norm(fz);
    }
  const int blk = default_safe_block(space.dim);
  const double lhs = a.topLeftCorner(blk, blk).squaredNorm();
  return std::abs(lhs - rhs);
}

ActionAngleFunction angle_function(double theta) {
  ActionAngleFunction f;
  const double t = wrap_2pi(theta);
  f.eval = [t](double, double gamma) { return wrap_2pi(gamma - t); };
  f.jumps = {t};
  return f;
}

FockOperator quantize_action_angle(const FockSpace& space, const Eigen::VectorXd& m_diag,
                                   const ActionAngleFunction& f, int n_radial,
                                   int n_angular, const std::string& label) {
  if (m_diag.size() != space.dim)
    throw GridMismatchError("quantize_action_angle: diagonal size != dim");
  const int dim = space.dim;

  // Angular panels split at declared jumps; composite Gauss-Legendre is
  // oscillation-safe for e^{i k gamma} with k < dim at these node counts and
  // never straddles a discontinuity.
  std::vector<double> edges;
  if (f.jumps.empty()) {
    edges = {0.0, kTwoPi};
  } else {
    std::vector<double> js;
    js.reserve(f.jumps.size());
    for (double j : f.jumps) js.push_back(wrap_2pi(j));
    std::sort(js.begin(), js.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());
    edges = js;
    edges.push_back(js.front() + kTwoPi);
  }

  std::vector<double> gamma_nodes, gamma_weights;
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    const double len = edges[p + 1] - edges[p];
    if (len <= 0.0) continue;
    const int n = std::max(8, static_cast<int>(std::lround(n_angular * len / kTwoPi)));
    const GaussRule panel = gauss_legendre(n, edges[p], edges[p + 1]);
    for (int q = 0; q < panel.size(); ++q) {
      gamma_nodes.push_back(panel.nodes[q]);
      gamma_weights.push_back(panel.weights[q]);
    }
  }

  const LaguerreRule radial = gauss_laguerre(n_radial);
  Matrix acc = Matrix::Zero(dim, dim);
  Matrix g(dim, dim);
  const Vector diag_c = m_diag.cast<Complex>();

  for (int i = 0; i < n_radial; ++i) {
    const double j = radial.nodes[i];
    const Matrix d = displacement(space, Complex(std::sqrt(j), 0.0)).mat;
    g.noalias() = d * diag_c.asDiagonal() * d.transpose();

    // F[k] = (1/2pi) int f(J, gamma) e^{i k gamma} dgamma
    Vector coeff = Vector::Zero(2 * dim - 1);
    for (size_t q = 0; q < gamma_nodes.size(); ++q) {
      const double gq = gamma_nodes[q];
      const double fv = f.eval(j, wrap_2pi(gq));
      if (!std::isfinite(fv))
        throw NodeEvaluationError("quantize_action_angle: non-finite integrand");
      const Complex step = std::exp(kI * gq);
      Complex ph = 1.0;
      const double wq = gamma_weights[q] * fv / kTwoPi;
      coeff[dim - 1] += wq;
      for (int k = 1; k < dim; ++k) {
        ph *= step;
        coeff[dim - 1 + k] += wq * ph;
        coeff[dim - 1 - k] += wq * std::conj(ph);
      }
    }

    const double w = radial.modified_weights[i];
    for (int m = 0; m < dim; ++m)
      for (int n = 0; n < dim; ++n) acc(m, n) += w * g(m, n) * coeff[dim - 1 + m - n];
  }
  return {std::move(acc), label};
}

FockOperator angle_operator_analytic(const FockSpace& space) {
  const int dim = space.dim;
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) a(n, n) = std::numbers::pi;
  for (int n = 0; n < dim; ++n) {
    for (int np = 0; np < dim; ++np) {
      if (n == np) continue;
      const double lg = std::lgamma(0.5 * (n + np) + 1.0) -
                        0.5 * (std::lgamma(n + 1.0) + std::lgamma(np + 1.0));
      a(n, np) = kI * std::exp(lg) / static_cast<double>(np - n);
    }
  }
  return {std::move(a), "A_angle"};
}

FockOperator angle_operator_numeric(const FockSpace& space, int n_radial, int n_angular) {
  Eigen::VectorXd vac = Eigen::VectorXd::Zero(space.dim);
  vac[0] = 1.0;
  return quantize_action_angle(space, vac, angle_function(), n_radial, n_angular,
                               "A_angle_numeric");
}

double angular_covariance_defect(const FockSpace& space, double theta, double nu_phase,
                                 const ActionAngleFunction& f, int n_radial, int n_angular,
                                 int block, const Eigen::VectorXd* m_diag) {
  const int dim = space.dim;
  const int blk = block < 0 ? default_safe_block(dim) : block;

  Eigen::VectorXd diag;
  if (m_diag) {
    diag = *m_diag;
  } else {
    diag = Eigen::VectorXd::Zero(dim);
    diag[0] = 1.0;
  }

  ActionAngleFunction shifted;
  shifted.eval = [&f, theta](double j, double g) { return f.eval(j, wrap_2pi(g - theta)); };
  for (double j : f.jumps) shifted.jumps.push_back(wrap_2pi(j + theta));

  const FockOperator base = quantize_action_angle(space, diag, f, n_radial, n_angular);
  const FockOperator target =
      quantize_action_angle(space, diag, shifted, n_radial, n_angular);

  Vector u(dim);
  for (int n = 0; n < dim; ++n) u[n] = std::exp(kI * ((n + nu_phase) * theta));
  const Vector u_inv = u.conjugate();
  const Matrix lhs = u.asDiagonal() * base.mat * u_inv.asDiagonal();
  return block_max_diff(lhs, target.mat, blk);
}

}  // namespace ovmq
