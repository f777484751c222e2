#pragma once

#include <vector>

#include "ovmq/affine.hpp"
#include "ovmq/fock.hpp"

namespace ovmq {

// Point of T*(S^2): unit position x, momentum p tangent to the sphere,
// with action J = |x ^ p| (= |p| under the constraints).
struct SpherePhasePoint {
  Eigen::Vector3d x;
  Eigen::Vector3d p;

  double j() const { return x.cross(p).norm(); }
};

// Point of the complexified sphere {a in C^3 : sum_k a_k^2 = 1}.
struct ComplexSpherePoint {
  Eigen::Vector3cd a;

  Complex bilinear_square() const;  // sum_k a_k^2
};

// Plain (non-Hermitian) bilinear dot product sum_k u_k v_k.
Complex bilinear_dot(const Eigen::Vector3cd& u, const Eigen::Vector3cd& v);

// a = cosh(J) x + i (sinh J / J) p; rejects inputs violating |x| = 1 or
// x.p = 0 beyond 1e-8.  The J -> 0 limit uses the sinh series.
ComplexSpherePoint complexify(const SpherePhasePoint& point);

// Inverse of complexify (J recovered stably from |Im a| = sinh J).
SpherePhasePoint decomplexify(const ComplexSpherePoint& point);

// cos Omega = a . yhat; rejects non-unit yhat.
Complex complex_angle_cos(const ComplexSpherePoint& a, const Eigen::Vector3d& yhat);

// Gauss-Legendre in cos(theta) x uniform azimuth; weights sum to 4 pi.
struct SphereMesh {
  Eigen::MatrixXd points;  // (n x 3) unit vectors
  Eigen::VectorXd w;

  static SphereMesh gauss(int n_polar, int n_azimuth);

  int size() const { return static_cast<int>(w.size()); }
};

// Product state r * radial(r) * angular(yhat) sampled on radial grid x mesh;
// its norm factorizes as ||r radial||_{L2(dr)} * ||angular||_{L2(S2)}.
struct SeparableState {
  HalfLineGrid radial_grid;
  SphereMesh mesh;
  Eigen::MatrixXcd values;  // (radial x mesh)

  double norm() const;
};

SeparableState assemble_separable_state(const Eigen::VectorXcd& radial,
                                        const HalfLineGrid& radial_grid,
                                        const Eigen::VectorXcd& angular,
                                        const SphereMesh& mesh);

// JSON export of complexified points for visualization pipelines.
std::string points_to_json(const std::vector<SpherePhasePoint>& points);

}  // namespace ovmq
