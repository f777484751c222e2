#include "ovmq/weights.hpp"

#include <cmath>

#include "ovmq/errors.hpp"

namespace ovmq {

WeightFunction WeightFunction::cahill_glauber(Complex s) {
  if (!(s.real() < 1.0))
    throw InvalidArgument("cahill_glauber: requires Re s < 1");
  WeightFunction w;
  w.is_cg_ = true;
  w.s_ = s;
  w.eval_ = [s](Complex z) { return std::exp(0.5 * s * std::norm(z)); };
  w.real_even_ = true;                      // w_s(-z) = w_s(z) for any s
  w.reflection_real_ = (s.imag() == 0.0);   // conj(w_s(-z)) = w_{conj s}(z)
  w.label_ = "cg";
  return w;
}

WeightFunction WeightFunction::custom(std::function<Complex(Complex)> eval, bool real_even,
                                      bool reflection_real, std::string label) {
  WeightFunction w;
  w.eval_ = std::move(eval);
  const Complex at0 = w.eval_(Complex(0.0, 0.0));
  if (std::abs(at0 - Complex(1.0)) > 1e-12)
    throw InvalidArgument("custom weight: w(0) must equal 1 (got deviation > 1e-12)");
  w.real_even_ = real_even;
  w.reflection_real_ = reflection_real;
  w.label_ = std::move(label);
  return w;
}

Complex WeightFunction::dz_dzbar_at_zero() const {
  if (is_cg_) return 0.5 * s_;
  // dz dzbar = (dxx + dyy)/4 for z = x + iy.
  const double h = 1e-4;
  const Complex w0 = eval_(Complex(0.0, 0.0));
  const Complex dxx =
      (eval_(Complex(h, 0.0)) + eval_(Complex(-h, 0.0)) - 2.0 * w0) / (h * h);
  const Complex dyy =
      (eval_(Complex(0.0, h)) + eval_(Complex(0.0, -h)) - 2.0 * w0) / (h * h);
  return 0.25 * (dxx + dyy);
}

HOShifts ho_shifts(const WeightFunction& w) {
  const double dd = w.dz_dzbar_at_zero().real();
  HOShifts s{};
  s.potential_min = -dd;
  s.ground = s.potential_min + 0.5;  // enforces E0 - Em = 1/2 exactly
  return s;
}

}  // namespace ovmq
