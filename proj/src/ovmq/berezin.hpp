#pragma once

#include <functional>

#include "ovmq/fock.hpp"
#include "ovmq/phase_quadrature.hpp"
#include "ovmq/wh.hpp"

namespace ovmq {

// Family of displaced density operators z -> D(z) rho D(z)^dag.  The
// coherent-state family (rho = |e_0><e_0|) gets a rank-one fast path.
class DisplacedFamily {
 public:
  static DisplacedFamily coherent(const FockSpace& space);
  // Cahill-Glauber rho_s seed; a POVM family for s <= -1.
  static DisplacedFamily cahill_glauber(const FockSpace& space, double s);
  static DisplacedFamily from_seed(FockOperator seed);

  const FockSpace& space() const { return space_; }
  bool rank_one() const { return rank_one_; }
  const FockOperator& seed() const { return seed_; }

  Vector displaced_vector(Complex z) const;  // rank-one families only
  Matrix displaced_matrix(Complex z) const;

 private:
  explicit DisplacedFamily(const FockSpace& space) : space_(space) {}

  FockSpace space_;
  FockOperator seed_;
  bool rank_one_ = false;
  bool diagonal_ = false;
};

// tr(rho_tilde(z) rho(z')); = e^{-|z - z'|^2} for the CS/CS pair.
double overlap_kernel(const DisplacedFamily& rho_tilde, const DisplacedFamily& rho,
                      Complex z, Complex zp);

// Lower symbol tr(rho_tilde(z) A).
Complex lower_symbol(const FockOperator& a, const DisplacedFamily& rho_tilde, Complex z);

// Rectangular sampling window in (Re z, Im z).
struct GridWindow {
  double re_min, re_max, im_min, im_max;
  int n_re, n_im;

  Complex point(int i, int k) const;
};

struct SymbolField {
  GridWindow window;
  Eigen::MatrixXcd values;  // values(i, k) at window.point(i, k)
};

SymbolField sample_symbol(const PhaseFunction& f, const GridWindow& window);

// f_check(z) = sum_k w_k f(z_k) tr(rho_tilde(z) rho(z_k)), the local
// averaging of f through the two families.
SymbolField berezin_transform(const PhaseFunction& f, const DisplacedFamily& rho_tilde,
                              const DisplacedFamily& rho, const PhaseSpaceQuadrature& quad,
                              const GridWindow& window);

// Width-parameterized variant for the classical-limit diagnostic: the CS
// kernel rescaled to e^{-|z-z'|^2/eps}/eps, one admissible realization of the
// abstract scale parameter (eps = 1 recovers the CS/CS kernel).
SymbolField berezin_transform_gaussian(const PhaseFunction& f, double eps,
                                       const PhaseSpaceQuadrature& quad,
                                       const GridWindow& window);

enum class FieldNorm { sup, l2 };

// sup or grid-L2 distance between two fields on the same grid.
double classical_distance(const SymbolField& f, const SymbolField& f_check, FieldNorm norm);

// CSV with columns re_z, im_z, value_re, value_im.
std::string field_to_csv(const SymbolField& field);

}  // namespace ovmq
