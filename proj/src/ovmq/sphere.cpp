#include "ovmq/sphere.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "ovmq/errors.hpp"
#include "ovmq/rules.hpp"

namespace ovmq {

namespace {

constexpr Complex kI{0.0, 1.0};

// sinh(J)/J with the series below J = 1e-6
double sinhc(double j) {
  if (std::abs(j) < 1e-6) return 1.0 + j * j / 6.0;
  return std::sinh(j) / j;
}

}  // namespace

Complex ComplexSpherePoint::bilinear_square() const { return bilinear_dot(a, a); }

Complex bilinear_dot(const Eigen::Vector3cd& u, const Eigen::Vector3cd& v) {
  return u(0) * v(0) + u(1) * v(1) + u(2) * v(2);
}

ComplexSpherePoint complexify(const SpherePhasePoint& point) {
  if (std::abs(point.x.norm() - 1.0) > 1e-8)
    throw InvalidArgument("complexify: |x| must be 1");
  if (std::abs(point.x.dot(point.p)) > 1e-8)
    throw InvalidArgument("complexify: x.p must vanish");
  const double j = point.j();
  ComplexSpherePoint out;
  out.a = std::cosh(j) * point.x.cast<Complex>() + kI * sinhc(j) * point.p.cast<Complex>();
  return out;
}

SpherePhasePoint decomplexify(const ComplexSpherePoint& point) {
  const Eigen::Vector3d re = point.a.real();
  const Eigen::Vector3d im = point.a.imag();
  const double j = std::asinh(im.norm());
  SpherePhasePoint out;
  out.x = re / std::cosh(j);
  out.p = im / sinhc(j);
  return out;
}

Complex complex_angle_cos(const ComplexSpherePoint& a, const Eigen::Vector3d& yhat) {
  if (std::abs(yhat.norm() - 1.0) > 1e-8)
    throw InvalidArgument("complex_angle_cos: yhat must be a unit vector");
  return bilinear_dot(a.a, yhat.cast<Complex>());
}

SphereMesh SphereMesh::gauss(int n_polar, int n_azimuth) {
  if (n_polar < 1 || n_azimuth < 1) throw InvalidArgument("SphereMesh: invalid sizes");
  const GaussRule polar = gauss_legendre(n_polar);  // in cos(theta)
  SphereMesh mesh;
  mesh.points.resize(n_polar * n_azimuth, 3);
  mesh.w.resize(n_polar * n_azimuth);
  const double waz = 2.0 * std::numbers::pi / n_azimuth;
  int idx = 0;
  for (int i = 0; i < n_polar; ++i) {
    const double c = polar.nodes[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (int k = 0; k < n_azimuth; ++k) {
      const double phi = waz * (k + 0.5);
      mesh.points.row(idx) << s * std::cos(phi), s * std::sin(phi), c;
      mesh.w[idx] = polar.weights[i] * waz;
      ++idx;
    }
  }
  return mesh;
}

double SeparableState::norm() const {
  double acc = 0.0;
  for (int r = 0; r < radial_grid.size(); ++r) {
    double row = 0.0;
    for (int m = 0; m < mesh.size(); ++m) row += mesh.w[m] * std::norm(values(r, m));
    acc += radial_grid.w[r] * row;
  }
  return std::sqrt(acc);
}

SeparableState assemble_separable_state(const Eigen::VectorXcd& radial,
                                        const HalfLineGrid& radial_grid,
                                        const Eigen::VectorXcd& angular,
                                        const SphereMesh& mesh) {
  if (radial.size() != radial_grid.x.size())
    throw GridMismatchError("assemble_separable_state: radial size mismatch");
  if (angular.size() != mesh.w.size())
    throw GridMismatchError("assemble_separable_state: angular size mismatch");
  SeparableState state{radial_grid, mesh,
                       Eigen::MatrixXcd(radial_grid.size(), mesh.size())};
  for (int r = 0; r < radial_grid.size(); ++r)
    for (int m = 0; m < mesh.size(); ++m)
      state.values(r, m) = radial_grid.x[r] * radial[r] * angular[m];
  return state;
}

std::string points_to_json(const std::vector<SpherePhasePoint>& points) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& pt : points) {
    const ComplexSpherePoint c = complexify(pt);
    nlohmann::json rec;
    rec["x"] = {pt.x[0], pt.x[1], pt.x[2]};
    rec["p"] = {pt.p[0], pt.p[1], pt.p[2]};
    rec["J"] = pt.j();
    rec["a_re"] = {c.a[0].real(), c.a[1].real(), c.a[2].real()};
    rec["a_im"] = {c.a[0].imag(), c.a[1].imag(), c.a[2].imag()};
    const Complex sq = c.bilinear_square();
    rec["bilinear_square"] = {sq.real(), sq.imag()};
    arr.push_back(std::move(rec));
  }
  nlohmann::json doc;
  doc["points"] = std::move(arr);
  return doc.dump(2);
}

}  // namespace ovmq
