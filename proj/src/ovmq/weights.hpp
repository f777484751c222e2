#pragma once

#include <functional>
#include <string>

#include "ovmq/fock.hpp"

namespace ovmq {

// Quantization weight w(z), normalized so that w(0) = 1.  Two variants:
// the Cahill-Glauber family w_s(z) = e^{s|z|^2/2} (Re s < 1), and arbitrary
// user-supplied evaluators with declared symmetry flags:
//   real_even        w(-z) = w(z)
//   reflection_real  conj(w(-z)) = w(z)
class WeightFunction {
 public:
  static WeightFunction cahill_glauber(Complex s);
  static WeightFunction custom(std::function<Complex(Complex)> eval, bool real_even,
                               bool reflection_real, std::string label = "custom");

  Complex operator()(Complex z) const { return eval_(z); }

  bool is_cahill_glauber() const { return is_cg_; }
  Complex cg_s() const { return s_; }

  bool real_even() const { return real_even_; }
  bool reflection_real() const { return reflection_real_; }
  const std::string& label() const { return label_; }

  // d/dz d/dzbar w at z = 0: analytic (s/2) for Cahill-Glauber, central
  // finite differences with step h = 1e-4 otherwise.
  Complex dz_dzbar_at_zero() const;

 private:
  WeightFunction() = default;

  std::function<Complex(Complex)> eval_;
  bool is_cg_ = false;
  Complex s_{0.0, 0.0};
  bool real_even_ = false;
  bool reflection_real_ = false;
  std::string label_;
};

// Ground-state energy shift E0 and quantum-potential minimum Em of the
// quantized oscillator energy for a given weight.  E0 - Em = 1/2 holds
// exactly by construction.
struct HOShifts {
  double ground;         // E0 = 1/2 - dzdzbar w|_0
  double potential_min;  // Em = -dzdzbar w|_0
};

HOShifts ho_shifts(const WeightFunction& w);

}  // namespace ovmq
