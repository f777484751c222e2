#include "ovmq/affine.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ovmq/errors.hpp"
#include "ovmq/io.hpp"

namespace ovmq {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// A(theta) = int_0^1 (1-t) e^{-i theta t} dt and B = int_0^1 t e^{-i theta t} dt,
// the linear-interpolation Fourier cell factors.  Series below |theta| = 0.5
// avoids the cancellation in the closed form.
void filon_cell_factors(double theta, Complex e_minus_itheta, Complex* a, Complex* b) {
  if (std::abs(theta) < 0.5) {
    Complex c0 = 0.0, bb = 0.0;
    Complex term(1.0, 0.0);  // (-i theta)^k / k!
    for (int k = 0; k <= 12; ++k) {
      c0 += term / (k + 1.0);
      bb += term / (k + 2.0);
      term *= Complex(0.0, -theta) / (k + 1.0);
    }
    *b = bb;
    *a = c0 - bb;
    return;
  }
  const Complex itheta(0.0, theta);
  const Complex c0 = (1.0 - e_minus_itheta) / itheta;
  const Complex bb = (c0 - e_minus_itheta) / itheta;
  *b = bb;
  *a = c0 - bb;
}

}  // namespace

HalfLineGrid HalfLineGrid::geometric(double x_min, double x_max, int n) {
  if (!(x_min > 0.0) || !(x_max > x_min) || n < 2)
    throw InvalidArgument("HalfLineGrid::geometric: need 0 < x_min < x_max, n >= 2");
  HalfLineGrid g;
  g.spacing = Spacing::geometric;
  g.x.resize(n);
  g.w.resize(n);
  const double h = std::log(x_max / x_min) / (n - 1);
  for (int j = 0; j < n; ++j) g.x[j] = x_min * std::exp(h * j);
  g.x[n - 1] = x_max;
  for (int j = 0; j < n; ++j) {
    const double edge = (j == 0 || j == n - 1) ? 0.5 : 1.0;
    g.w[j] = edge * h * g.x[j];
  }
  return g;
}

HalfLineGrid HalfLineGrid::uniform(double x_max, int n) {
  if (!(x_max > 0.0) || n < 2)
    throw InvalidArgument("HalfLineGrid::uniform: need x_max > 0, n >= 2");
  HalfLineGrid g;
  g.spacing = Spacing::uniform;
  g.x.resize(n);
  g.w.resize(n);
  const double h = x_max / n;
  for (int j = 0; j < n; ++j) g.x[j] = (j + 1) * h;
  for (int j = 0; j < n; ++j) g.w[j] = (j == n - 1) ? 0.5 * h : h;
  return g;
}

Complex HalfLineGrid::integrate(const Eigen::VectorXcd& vals) const {
  return (w.cast<Complex>().array() * vals.array()).sum();
}

double HalfLineGrid::gaussian_selftest() const {
  const double mu = 2.0, sigma = 0.5;
  Eigen::VectorXd vals(size());
  for (int j = 0; j < size(); ++j) {
    const double t = (x[j] - mu) / sigma;
    vals[j] = std::exp(-0.5 * t * t) / (sigma * std::sqrt(kTwoPi));
  }
  const double truth = 0.5 * (1.0 + std::erf(mu / (sigma * std::sqrt(2.0))));
  return std::abs(integrate(vals) - truth);
}

Eigen::VectorXcd sample_on_grid(const HalfLineGrid& grid,
                                const std::function<Complex(double)>& f) {
  Eigen::VectorXcd v(grid.size());
  for (int j = 0; j < grid.size(); ++j) v[j] = f(grid.x[j]);
  return v;
}

FiducialVector FiducialVector::power_exp(double alpha, double lambda, HalfLineGrid grid) {
  if (!(alpha > 1.5))
    throw InvalidArgument("FiducialVector::power_exp: alpha must be > 3/2");
  if (!(lambda > 0.0))
    throw InvalidArgument("FiducialVector::power_exp: lambda must be > 0");
  FiducialVector f(std::move(grid));
  f.power_exp_ = true;
  f.alpha_ = alpha;
  f.lambda_ = lambda;
  f.values_.resize(f.grid_.size());
  for (int j = 0; j < f.grid_.size(); ++j) f.values_[j] = f.eval(f.grid_.x[j]);
  f.finish_construction();
  return f;
}

FiducialVector FiducialVector::sampled(Eigen::VectorXd values, HalfLineGrid grid) {
  if (values.size() != grid.x.size())
    throw GridMismatchError("FiducialVector::sampled: values/grid size mismatch");
  FiducialVector f(std::move(grid));
  f.values_ = std::move(values);
  const double n = std::sqrt(f.grid_.integrate(f.values_.cwiseAbs2().eval()));
  if (!(n > 0.0)) throw InvalidArgument("FiducialVector::sampled: zero vector");
  f.values_ /= n;
  f.finish_construction();
  return f;
}

void FiducialVector::finish_construction() {
  norm_ = std::sqrt(grid_.integrate(values_.cwiseAbs2().eval()));
  c_minus1_ = c_gamma(-1.0);
  if (!std::isfinite(c_minus1_))
    throw DivergentMomentError("FiducialVector: c_{-1} is not finite (inadmissible wavelet)");

  // K = integral (psi')^2 x dx / c_{-1}
  Eigen::VectorXd dpsi(grid_.size());
  if (power_exp_) {
    const double lc = 0.5 * ((2.0 * alpha_ + 1.0) * std::log(lambda_) -
                             std::lgamma(2.0 * alpha_ + 1.0));
    const double c = std::exp(lc);
    for (int j = 0; j < grid_.size(); ++j) {
      const double x = grid_.x[j];
      dpsi[j] = c * (alpha_ * std::pow(x, alpha_ - 1.0) - 0.5 * lambda_ * std::pow(x, alpha_)) *
                std::exp(-0.5 * lambda_ * x);
    }
  } else {
    dpsi = grid_derivative(grid_, values_.cast<Complex>().eval()).real();
  }
  Eigen::VectorXd integrand = dpsi.cwiseAbs2().cwiseProduct(grid_.x);
  kinetic_k_ = grid_.integrate(integrand) / c_minus1_;
}

double FiducialVector::eval(double x) const {
  if (power_exp_) {
    if (x <= 0.0) return 0.0;
    const double lc = 0.5 * ((2.0 * alpha_ + 1.0) * std::log(lambda_) -
                             std::lgamma(2.0 * alpha_ + 1.0));
    return std::exp(lc + alpha_ * std::log(x) - 0.5 * lambda_ * x);
  }
  // linear interpolation, zero outside the grid
  const auto& xs = grid_.x;
  if (x <= xs[0] || x >= xs[xs.size() - 1]) {
    if (x == xs[0]) return values_[0];
    if (x == xs[xs.size() - 1]) return values_[values_.size() - 1];
    return 0.0;
  }
  int lo = 0, hi = static_cast<int>(xs.size()) - 1;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    (xs[mid] <= x ? lo : hi) = mid;
  }
  const double t = (x - xs[lo]) / (xs[lo + 1] - xs[lo]);
  return (1.0 - t) * values_[lo] + t * values_[lo + 1];
}

double FiducialVector::c_gamma(double gamma) const {
  if (power_exp_ && !(2.0 * alpha_ - 1.0 - gamma > 0.0))
    throw DivergentMomentError("c_gamma: requires 2 alpha - 1 - gamma > 0");
  Eigen::VectorXd integrand(grid_.size());
  for (int j = 0; j < grid_.size(); ++j) {
    const double x = grid_.x[j];
    integrand[j] = values_[j] * values_[j] / std::pow(x, 2.0 + gamma);
  }
  return grid_.integrate(integrand);
}

AffineCS affine_cs(double q, double p, const FiducialVector& psi) {
  if (!(q > 0.0)) throw InvalidArgument("affine_cs: q must be > 0");
  const auto& grid = psi.grid();
  AffineCS cs{q, p, Eigen::VectorXcd(grid.size()), 0.0, 0.0};
  const double inv_sqrt_q = 1.0 / std::sqrt(q);
  for (int j = 0; j < grid.size(); ++j) {
    const double x = grid.x[j];
    cs.values[j] = std::exp(kI * (p * x)) * (psi.eval(x / q) * inv_sqrt_q);
  }
  cs.norm = std::sqrt(grid.integrate(cs.values.cwiseAbs2().eval()));
  cs.mass_deficit = 1.0 - cs.norm * cs.norm;
  return cs;
}

HalfPlaneWindow HalfPlaneWindow::make(double q_min, double q_max, int nq, double p_max,
                                      int np) {
  if (!(q_min > 0.0) || !(q_max > q_min) || nq < 2 || !(p_max > 0.0) || np < 2)
    throw InvalidArgument("HalfPlaneWindow: invalid bounds");
  HalfPlaneWindow w;
  w.q.resize(nq);
  w.wq.resize(nq);
  const double hu = std::log(q_max / q_min) / (nq - 1);
  for (int i = 0; i < nq; ++i) {
    w.q[i] = q_min * std::exp(hu * i);
    w.wq[i] = ((i == 0 || i == nq - 1) ? 0.5 : 1.0) * hu * w.q[i];
  }
  w.p.resize(np);
  w.wp.resize(np);
  const double hp = 2.0 * p_max / (np - 1);
  for (int k = 0; k < np; ++k) {
    w.p[k] = -p_max + hp * k;
    w.wp[k] = ((k == 0 || k == np - 1) ? 0.5 : 1.0) * hp;
  }
  return w;
}

Eigen::VectorXcd filon_fourier(const HalfLineGrid& grid, const Eigen::VectorXcd& g,
                               const Eigen::VectorXd& p) {
  if (g.size() != grid.x.size()) throw GridMismatchError("filon_fourier: size mismatch");
  const int n = grid.size();
  const int np = static_cast<int>(p.size());
  Eigen::VectorXcd out(np);

  // e^{-i p x_j}, advanced incrementally when p is uniformly spaced.
  Eigen::VectorXcd phase(n), step(n);
  const bool uniform_p =
      np >= 2 && [&] {
        const double d0 = p[1] - p[0];
        for (int k = 2; k < np; ++k)
          if (std::abs((p[k] - p[k - 1]) - d0) > 1e-12 * std::max(1.0, std::abs(d0)))
            return false;
        return true;
      }();
  for (int j = 0; j < n; ++j) {
    phase[j] = std::exp(-kI * (p[0] * grid.x[j]));
    if (uniform_p && np >= 2) step[j] = std::exp(-kI * ((p[1] - p[0]) * grid.x[j]));
  }

  for (int k = 0; k < np; ++k) {
    if (k > 0) {
      if (uniform_p)
        phase.array() *= step.array();
      else
        for (int j = 0; j < n; ++j) phase[j] = std::exp(-kI * (p[k] * grid.x[j]));
    }
    Complex acc = 0.0;
    for (int j = 0; j + 1 < n; ++j) {
      const double h = grid.x[j + 1] - grid.x[j];
      const double theta = p[k] * h;
      const Complex e_mith = phase[j + 1] * std::conj(phase[j]);
      Complex a, b;
      filon_cell_factors(theta, e_mith, &a, &b);
      acc += phase[j] * h * (g[j] * a + g[j + 1] * b);
    }
    out[k] = acc;
  }
  return out;
}

Eigen::MatrixXcd overlap_rows(const FiducialVector& psi, const Eigen::VectorXcd& phi,
                              const HalfPlaneWindow& win) {
  if (phi.size() != psi.grid().x.size())
    throw GridMismatchError("overlap_rows: phi not sampled on the fiducial grid");
  const auto& grid = psi.grid();
  Eigen::MatrixXcd rows(win.nq(), win.np());
  Eigen::VectorXcd g(grid.size());
  for (int i = 0; i < win.nq(); ++i) {
    const double q = win.q[i];
    const double inv_sqrt_q = 1.0 / std::sqrt(q);
    for (int j = 0; j < grid.size(); ++j)
      g[j] = psi.eval(grid.x[j] / q) * inv_sqrt_q * phi[j];
    rows.row(i) = filon_fourier(grid, g, win.p).transpose();
  }
  return rows;
}

Complex cs_overlap(double q, double p, const FiducialVector& psi,
                   const Eigen::VectorXcd& phi) {
  if (phi.size() != psi.grid().x.size())
    throw GridMismatchError("cs_overlap: phi not sampled on the fiducial grid");
  const auto& grid = psi.grid();
  Eigen::VectorXcd g(grid.size());
  const double inv_sqrt_q = 1.0 / std::sqrt(q);
  for (int j = 0; j < grid.size(); ++j)
    g[j] = psi.eval(grid.x[j] / q) * inv_sqrt_q * phi[j];
  Eigen::VectorXd pv(1);
  pv[0] = p;
  return filon_fourier(grid, g, pv)[0];
}

Complex affine_element_from_overlaps(const Eigen::MatrixXcd& o1, const Eigen::MatrixXcd& o2,
                                     const HalfPlaneWindow& win, double c_minus1,
                                     const std::function<double(double, double)>& f) {
  if (o1.rows() != win.nq() || o1.cols() != win.np() || o2.rows() != o1.rows() ||
      o2.cols() != o1.cols())
    throw GridMismatchError("affine_element_from_overlaps: table shape mismatch");
  Complex acc = 0.0;
  for (int i = 0; i < win.nq(); ++i) {
    Complex row = 0.0;
    for (int k = 0; k < win.np(); ++k)
      row += win.wp[k] * f(win.q[i], win.p[k]) * std::conj(o1(i, k)) * o2(i, k);
    acc += win.wq[i] * row;
  }
  return acc / (kTwoPi * c_minus1);
}

Complex quantize_affine_matrix_element(const std::function<double(double, double)>& f,
                                       const Eigen::VectorXcd& phi1,
                                       const Eigen::VectorXcd& phi2,
                                       const FiducialVector& psi, const HalfPlaneWindow& win) {
  const Eigen::MatrixXcd o1 = overlap_rows(psi, phi1, win);
  const Eigen::MatrixXcd o2 = overlap_rows(psi, phi2, win);
  return affine_element_from_overlaps(o1, o2, win, psi.c_gamma(-1.0), f);
}

double resolution_defect_affine(const FiducialVector& psi, const HalfPlaneWindow& win,
                                const std::vector<Eigen::VectorXcd>& test_functions) {
  const double c = psi.c_gamma(-1.0);
  double worst = 0.0;
  for (const auto& phi : test_functions) {
    const Eigen::MatrixXcd o = overlap_rows(psi, phi, win);
    const Complex mass = affine_element_from_overlaps(
        o, o, win, c, [](double, double) { return 1.0; });
    const double norm2 = grid_inner(psi.grid(), phi, phi).real();
    worst = std::max(worst, std::abs(mass.real() - norm2));
  }
  return worst;
}

DensityField phase_space_density(const FiducialVector& psi, const Eigen::VectorXcd& phi,
                                 const HalfPlaneWindow& win) {
  const double c = psi.c_gamma(-1.0);
  const Eigen::MatrixXcd o = overlap_rows(psi, phi, win);
  DensityField field{win, Eigen::MatrixXd(win.nq(), win.np()), 0.0, 0.0, 0.0};
  double best = -1.0;
  for (int i = 0; i < win.nq(); ++i)
    for (int k = 0; k < win.np(); ++k) {
      const double r = std::norm(o(i, k)) / (kTwoPi * c);
      field.rho(i, k) = r;
      field.mass += win.wq[i] * win.wp[k] * r;
      if (r > best) {
        best = r;
        field.peak_q = win.q[i];
        field.peak_p = win.p[k];
      }
    }
  return field;
}

std::string density_to_csv(const DensityField& field) {
  std::ostringstream os;
  os << "q,p,rho\n";
  for (int i = 0; i < field.window.nq(); ++i)
    for (int k = 0; k < field.window.np(); ++k)
      os << format_double(field.window.q[i]) << ',' << format_double(field.window.p[k])
         << ',' << format_double(field.rho(i, k)) << '\n';
  return os.str();
}

Eigen::VectorXcd grid_derivative(const HalfLineGrid& grid, const Eigen::VectorXcd& f) {
  if (f.size() != grid.x.size()) throw GridMismatchError("grid_derivative: size mismatch");
  const int n = grid.size();
  Eigen::VectorXcd d(n);
  for (int j = 1; j + 1 < n; ++j) {
    const double hp = grid.x[j + 1] - grid.x[j];
    const double hm = grid.x[j] - grid.x[j - 1];
    d[j] = (hm * hm * f[j + 1] - hp * hp * f[j - 1] + (hp * hp - hm * hm) * f[j]) /
           (hp * hm * (hp + hm));
  }
  d[0] = (f[1] - f[0]) / (grid.x[1] - grid.x[0]);
  d[n - 1] = (f[n - 1] - f[n - 2]) / (grid.x[n - 1] - grid.x[n - 2]);
  return d;
}

Eigen::VectorXcd grid_second_derivative(const HalfLineGrid& grid, const Eigen::VectorXcd& f) {
  if (f.size() != grid.x.size())
    throw GridMismatchError("grid_second_derivative: size mismatch");
  const int n = grid.size();
  Eigen::VectorXcd d(n);
  for (int j = 1; j + 1 < n; ++j) {
    const double hp = grid.x[j + 1] - grid.x[j];
    const double hm = grid.x[j] - grid.x[j - 1];
    d[j] = 2.0 * (hm * f[j + 1] - (hp + hm) * f[j] + hp * f[j - 1]) / (hp * hm * (hp + hm));
  }
  d[0] = d[1];
  d[n - 1] = d[n - 2];
  return d;
}

Complex grid_inner(const HalfLineGrid& grid, const Eigen::VectorXcd& a,
                   const Eigen::VectorXcd& b) {
  if (a.size() != grid.x.size() || b.size() != grid.x.size())
    throw GridMismatchError("grid_inner: size mismatch");
  return (grid.w.cast<Complex>().array() * a.conjugate().array() * b.array()).sum();
}

std::vector<Eigen::VectorXcd> resolution_test_functions(const FiducialVector& psi) {
  const auto& grid = psi.grid();
  std::vector<Eigen::VectorXcd> out;
  out.push_back(psi.values().cast<Complex>());
  Eigen::VectorXcd xpsi = psi.values().cwiseProduct(grid.x).cast<Complex>();
  xpsi /= std::sqrt(grid_inner(grid, xpsi, xpsi).real());
  out.push_back(std::move(xpsi));
  out.push_back(standard_test_functions(grid)[2]);
  return out;
}

AffineDefectReport affine_operator_defects(const FiducialVector& psi,
                                           const HalfPlaneWindow& win) {
  const auto& grid = psi.grid();
  const auto phis = standard_test_functions(grid);
  std::vector<Eigen::MatrixXcd> tables;
  tables.reserve(phis.size());
  for (const auto& phi : phis) tables.push_back(overlap_rows(psi, phi, win));
  const double c_m1 = psi.c_gamma(-1.0);
  const int pairs[5][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}};

  AffineDefectReport rep{};
  const double betas[3] = {0.5, 1.0, 2.0};
  double* slots[3] = {&rep.moment_ratio_beta_half, &rep.moment_ratio_beta_1,
                      &rep.moment_ratio_beta_2};
  for (int b = 0; b < 3; ++b) {
    const double beta = betas[b];
    const double ratio = psi.c_gamma(beta - 1.0) / c_m1;
    double worst = 0.0;
    for (const auto& pr : pairs) {
      const Complex el = affine_element_from_overlaps(
          tables[pr[0]], tables[pr[1]], win, c_m1,
          [beta](double qv, double) { return std::pow(qv, beta); });
      Eigen::VectorXcd xbeta_phi2(grid.size());
      for (int j = 0; j < grid.size(); ++j)
        xbeta_phi2[j] = std::pow(grid.x[j], beta) * phis[pr[1]][j];
      const Complex mult = grid_inner(grid, phis[pr[0]], xbeta_phi2);
      worst = std::max(worst, std::abs(el / mult - ratio) / ratio);
    }
    *slots[b] = worst;
  }

  double num = 0.0, den = 0.0;
  for (const auto& pr : pairs) {
    const Complex el_p = affine_element_from_overlaps(
        tables[pr[0]], tables[pr[1]], win, c_m1, [](double, double pv) { return pv; });
    const Complex oracle =
        -kI * grid_inner(grid, phis[pr[0]], grid_derivative(grid, phis[pr[1]]));
    rep.p_defect = std::max(rep.p_defect, std::abs(el_p - oracle));

    const Complex el_p2 = affine_element_from_overlaps(
        tables[pr[0]], tables[pr[1]], win, c_m1, [](double, double pv) { return pv * pv; });
    const Complex ke =
        -grid_inner(grid, phis[pr[0]], grid_second_derivative(grid, phis[pr[1]]));
    Eigen::VectorXcd xm2phi(grid.size());
    for (int j = 0; j < grid.size(); ++j)
      xm2phi[j] = phis[pr[1]][j] / (grid.x[j] * grid.x[j]);
    const double xm2 = grid_inner(grid, phis[pr[0]], xm2phi).real();
    const double y = (el_p2 - ke).real();
    num += xm2 * y;
    den += xm2 * xm2;
  }
  rep.kinetic_k = psi.kinetic_k();
  rep.kinetic_k_fit = num / den;
  rep.kinetic_rel_err = std::abs(rep.kinetic_k_fit - rep.kinetic_k) / rep.kinetic_k;

  rep.resolution_defect = resolution_defect_affine(psi, win, resolution_test_functions(psi));
  return rep;
}

std::vector<Eigen::VectorXcd> standard_test_functions(const HalfLineGrid& grid) {
  const double params[5][2] = {{2.0, 1.0}, {3.0, 1.2}, {2.5, 0.8}, {4.0, 1.5}, {2.0, 0.6}};
  std::vector<Eigen::VectorXcd> out;
  out.reserve(5);
  for (const auto& ab : params) {
    Eigen::VectorXcd v(grid.size());
    for (int j = 0; j < grid.size(); ++j)
      v[j] = std::pow(grid.x[j], ab[0]) * std::exp(-ab[1] * grid.x[j]);
    const double n = std::sqrt(grid_inner(grid, v, v).real());
    out.push_back(v / n);
  }
  return out;
}

}  // namespace ovmq
