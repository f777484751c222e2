#include "ovmq/fock.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "ovmq/errors.hpp"

namespace ovmq {

namespace {

constexpr Complex kI{0.0, 1.0};

// Associated Laguerre L_k^{(alpha)}(x) by upward recurrence.  Arguments stay
// in double range for the truncations used here (dim <= a few hundred).
double assoc_laguerre(int k, int alpha, double x) {
  double lm1 = 1.0;  // L_0
  if (k == 0) return lm1;
  double l = 1.0 + alpha - x;  // L_1
  for (int j = 1; j < k; ++j) {
    const double lp1 = ((2.0 * j + 1.0 + alpha - x) * l - (j + alpha) * lm1) / (j + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

}  // namespace

FockSpace::FockSpace(int d) : dim(d) {
  if (d < 2) throw InvalidArgument("FockSpace: dim must be >= 2");
}

FockOperator annihilation(const FockSpace& space) {
  Matrix a = Matrix::Zero(space.dim, space.dim);
  for (int n = 1; n < space.dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {std::move(a), "a"};
}

FockOperator creation(const FockSpace& space) {
  FockOperator a = annihilation(space);
  return {a.mat.adjoint(), "a_dag"};
}

FockOperator number_operator(const FockSpace& space) {
  Matrix n = Matrix::Zero(space.dim, space.dim);
  for (int k = 0; k < space.dim; ++k) n(k, k) = static_cast<double>(k);
  return {std::move(n), "N"};
}

std::pair<FockOperator, FockOperator> quadrature_pair(const FockSpace& space) {
  const Matrix a = annihilation(space).mat;
  const Matrix ad = a.adjoint();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix q = (a + ad) * inv_sqrt2;
  Matrix p = (a - ad) * (-kI * inv_sqrt2);
  return {FockOperator{std::move(q), "Q"}, FockOperator{std::move(p), "P"}};
}

FockOperator parity(const FockSpace& space) {
  Matrix p = Matrix::Zero(space.dim, space.dim);
  for (int n = 0; n < space.dim; ++n) p(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  return {std::move(p), "parity"};
}

FockOperator displacement(const FockSpace& space, Complex z, DisplacementMethod method) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InvalidArgument("displacement: z must be finite");

  const int dim = space.dim;
  Matrix d(dim, dim);

  if (method == DisplacementMethod::exponential) {
    // K = z a^dag - conj(z) a is skew-Hermitian; with H = -iK Hermitian,
    // exp(K) = V exp(i Lambda) V^dag is unitary to roundoff.
    const Matrix a = annihilation(space).mat;
    Matrix k = z * a.adjoint() - std::conj(z) * a;
    Matrix h = -kI * k;
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Vector phases(dim);
    for (int j = 0; j < dim; ++j) phases[j] = std::exp(kI * es.eigenvalues()[j]);
    d = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return {std::move(d), "D_exp"};
  }

  // Closed form:
  //   <m|D(z)|n> = sqrt(n!/m!) z^{m-n} e^{-|z|^2/2} L_n^{(m-n)}(|z|^2)   (m >= n)
  //   <m|D(z)|n> = sqrt(m!/n!) (-conj(z))^{n-m} e^{-|z|^2/2} L_m^{(n-m)}(|z|^2)
  // with the radial prefactor assembled in log space.
  const double j = std::norm(z);
  if (j == 0.0) {
    d = Matrix::Identity(dim, dim);
    return {std::move(d), "D"};
  }
  const double lnr = 0.5 * std::log(j);
  const double phase_arg = std::arg(z);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n <= m; ++n) {
      const int k = m - n;
      const double lg = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0));
      const double mag = std::exp(lg + k * lnr - 0.5 * j);
      const double lag = assoc_laguerre(n, k, j);
      const Complex phase = std::exp(kI * (phase_arg * k));
      const Complex val = mag * lag * phase;
      d(m, n) = val;
      if (m != n) {
        // <n|D(z)|m> from the same radial factor with the (-conj z) phase.
        const Complex phase_upper = std::exp(kI * (-phase_arg * k));
        d(n, m) = mag * lag * phase_upper * ((k % 2 == 0) ? 1.0 : -1.0);
      }
    }
  }
  return {std::move(d), "D"};
}

StateVector coherent_state(const FockSpace& space, Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InvalidArgument("coherent_state: z must be finite");
  Vector c(space.dim);
  const double j = std::norm(z);
  if (j == 0.0) {
    c.setZero();
    c[0] = 1.0;
    return {std::move(c), "cs"};
  }
  const double lnr = 0.5 * std::log(j);
  const double phase_arg = std::arg(z);
  for (int n = 0; n < space.dim; ++n) {
    const double mag = std::exp(n * lnr - 0.5 * std::lgamma(n + 1.0) - 0.5 * j);
    c[n] = mag * std::exp(kI * (phase_arg * n));
  }
  return {std::move(c), "cs"};
}

double coherent_tail_mass(Complex z, int dim) {
  const double j = std::norm(z);
  if (j == 0.0) return 0.0;
  const double lnj = std::log(j);
  double head = 0.0;
  for (int n = 0; n < dim; ++n) head += std::exp(n * lnj - std::lgamma(n + 1.0) - j);
  return std::max(0.0, 1.0 - head);
}

int default_safe_block(int dim) { return dim / 2; }

double block_max_abs(const Matrix& a, int block) {
  const int b = std::min<int>(block, static_cast<int>(a.rows()));
  return a.topLeftCorner(b, b).cwiseAbs().maxCoeff();
}

double block_max_diff(const Matrix& a, const Matrix& b, int block) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw GridMismatchError("block_max_diff: shape mismatch");
  const int blk = std::min<int>(block, static_cast<int>(a.rows()));
  return (a.topLeftCorner(blk, blk) - b.topLeftCorner(blk, blk)).cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& a) {
  return (a - a.adjoint().eval()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

DensityDiagnostics density_diagnostics(const FockOperator& rho) {
  DensityDiagnostics d{};
  d.hermiticity_defect = hermiticity_defect(rho.mat);
  const Matrix sym = 0.5 * (rho.mat + rho.mat.adjoint().eval());
  d.min_eigenvalue = hermitian_eigenvalues(sym).minCoeff();
  d.trace_defect = std::abs(rho.mat.trace() - Complex(1.0));
  return d;
}

}  // namespace ovmq
