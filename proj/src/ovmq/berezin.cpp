#include "ovmq/berezin.hpp"

#include <cmath>
#include <sstream>

#include "ovmq/errors.hpp"
#include "ovmq/io.hpp"

namespace ovmq {

DisplacedFamily DisplacedFamily::coherent(const FockSpace& space) {
  DisplacedFamily f(space);
  Matrix seed = Matrix::Zero(space.dim, space.dim);
  seed(0, 0) = 1.0;
  f.seed_ = {std::move(seed), "vacuum_projector"};
  f.rank_one_ = true;
  f.diagonal_ = true;
  return f;
}

DisplacedFamily DisplacedFamily::cahill_glauber(const FockSpace& space, double s) {
  if (!(s <= -1.0))
    throw InvalidArgument("DisplacedFamily: Cahill-Glauber family needs s <= -1 to be a POVM");
  DisplacedFamily f(space);
  f.seed_ = cg_m_analytic(space, Complex(s, 0.0));
  f.rank_one_ = (s == -1.0);
  f.diagonal_ = true;
  return f;
}

DisplacedFamily DisplacedFamily::from_seed(FockOperator seed) {
  FockSpace space(seed.dim());
  const DensityDiagnostics diag = density_diagnostics(seed);
  if (!diag.ok())
    throw InvalidArgument("DisplacedFamily: seed fails the density-operator checks");
  DisplacedFamily f(space);
  f.seed_ = std::move(seed);
  return f;
}

Vector DisplacedFamily::displaced_vector(Complex z) const {
  if (!rank_one_) throw InvalidArgument("displaced_vector: family is not rank-one");
  return coherent_state(space_, z).coeffs;
}

Matrix DisplacedFamily::displaced_matrix(Complex z) const {
  if (rank_one_) {
    const Vector c = displaced_vector(z);
    return c * c.adjoint();
  }
  const Matrix d = displacement(space_, z).mat;
  if (diagonal_) {
    const Vector diag = seed_.mat.diagonal();
    return d * diag.asDiagonal() * d.adjoint();
  }
  return d * seed_.mat * d.adjoint();
}

double overlap_kernel(const DisplacedFamily& rho_tilde, const DisplacedFamily& rho,
                      Complex z, Complex zp) {
  if (rho_tilde.space().dim != rho.space().dim)
    throw GridMismatchError("overlap_kernel: families live on different truncations");
  if (rho_tilde.rank_one() && rho.rank_one()) {
    const Complex ov = rho_tilde.displaced_vector(z).dot(rho.displaced_vector(zp));
    return std::norm(ov);
  }
  const Matrix a = rho_tilde.displaced_matrix(z);
  const Matrix b = rho.displaced_matrix(zp);
  return (a * b).trace().real();
}

Complex lower_symbol(const FockOperator& a, const DisplacedFamily& rho_tilde, Complex z) {
  if (a.dim() != rho_tilde.space().dim)
    throw GridMismatchError("lower_symbol: operator/family dimension mismatch");
  if (rho_tilde.rank_one()) {
    const Vector c = rho_tilde.displaced_vector(z);
    return c.dot(a.mat * c);  // <z|A|z>
  }
  return (rho_tilde.displaced_matrix(z) * a.mat).trace();
}

Complex GridWindow::point(int i, int k) const {
  const double re = n_re == 1 ? re_min : re_min + (re_max - re_min) * i / (n_re - 1.0);
  const double im = n_im == 1 ? im_min : im_min + (im_max - im_min) * k / (n_im - 1.0);
  return Complex(re, im);
}

SymbolField sample_symbol(const PhaseFunction& f, const GridWindow& window) {
  SymbolField out{window, Eigen::MatrixXcd(window.n_re, window.n_im)};
  for (int i = 0; i < window.n_re; ++i)
    for (int k = 0; k < window.n_im; ++k) out.values(i, k) = f(window.point(i, k));
  return out;
}

SymbolField berezin_transform(const PhaseFunction& f, const DisplacedFamily& rho_tilde,
                              const DisplacedFamily& rho, const PhaseSpaceQuadrature& quad,
                              const GridWindow& window) {
  SymbolField out{window, Eigen::MatrixXcd::Zero(window.n_re, window.n_im)};

  const int nodes_r = quad.n_radial();
  const int nodes_a = quad.n_angular();
  const bool fast = rho_tilde.rank_one() && rho.rank_one();

  // Precompute node data once, then sweep the grid.
  std::vector<Complex> zk;
  std::vector<Complex> fk;
  std::vector<double> wk;
  std::vector<Vector> vk;    // rank-one
  std::vector<Matrix> mk;    // generic (kept small: only used on modest grids)
  zk.reserve(nodes_r * nodes_a);
  for (int i = 0; i < nodes_r; ++i)
    for (int jdx = 0; jdx < nodes_a; ++jdx) {
      const Complex z = quad.node(i, jdx);
      const Complex fz = f(z);
      if (!std::isfinite(fz.real()) || !std::isfinite(fz.imag()))
        throw NodeEvaluationError("berezin_transform: non-finite f at node");
      zk.push_back(z);
      fk.push_back(fz);
      wk.push_back(quad.weight(i));
      if (fast)
        vk.push_back(rho.displaced_vector(z));
      else
        mk.push_back(rho.displaced_matrix(z));
    }

  for (int i = 0; i < window.n_re; ++i) {
    for (int k = 0; k < window.n_im; ++k) {
      const Complex z = window.point(i, k);
      Complex acc = 0.0;
      if (fast) {
        const Vector c = rho_tilde.displaced_vector(z);
        for (size_t n = 0; n < zk.size(); ++n)
          acc += wk[n] * fk[n] * std::norm(c.dot(vk[n]));
      } else {
        const Matrix a = rho_tilde.displaced_matrix(z);
        for (size_t n = 0; n < zk.size(); ++n)
          acc += wk[n] * fk[n] * (a * mk[n]).trace().real();
      }
      out.values(i, k) = acc;
    }
  }
  return out;
}

SymbolField berezin_transform_gaussian(const PhaseFunction& f, double eps,
                                       const PhaseSpaceQuadrature& quad,
                                       const GridWindow& window) {
  if (!(eps > 0.0)) throw InvalidArgument("berezin_transform_gaussian: eps must be > 0");
  SymbolField out{window, Eigen::MatrixXcd::Zero(window.n_re, window.n_im)};
  for (int i = 0; i < window.n_re; ++i) {
    for (int k = 0; k < window.n_im; ++k) {
      const Complex z = window.point(i, k);
      Complex acc = 0.0;
      for (int r = 0; r < quad.n_radial(); ++r)
        for (int jdx = 0; jdx < quad.n_angular(); ++jdx) {
          const Complex zp = quad.node(r, jdx);
          acc += quad.weight(r) * f(zp) * std::exp(-std::norm(z - zp) / eps) / eps;
        }
      out.values(i, k) = acc;
    }
  }
  return out;
}

double classical_distance(const SymbolField& f, const SymbolField& f_check, FieldNorm norm) {
  if (f.window.n_re != f_check.window.n_re || f.window.n_im != f_check.window.n_im ||
      f.window.re_min != f_check.window.re_min || f.window.re_max != f_check.window.re_max ||
      f.window.im_min != f_check.window.im_min || f.window.im_max != f_check.window.im_max)
    throw GridMismatchError("classical_distance: fields sampled on different grids");
  const Eigen::MatrixXcd diff = f.values - f_check.values;
  if (norm == FieldNorm::sup) return diff.cwiseAbs().maxCoeff();
  return diff.norm() / std::sqrt(static_cast<double>(diff.size()));
}

std::string field_to_csv(const SymbolField& field) {
  std::ostringstream os;
  os << "re_z,im_z,value_re,value_im\n";
  for (int i = 0; i < field.window.n_re; ++i)
    for (int k = 0; k < field.window.n_im; ++k) {
      const Complex z = field.window.point(i, k);
      const Complex v = field.values(i, k);
      os << format_double(z.real()) << ',' << format_double(z.imag()) << ','
         << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
  return os.str();
}

}  // namespace ovmq
