#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ovmq/weights.hpp"

namespace ovmq {

struct VerifyConfig {
  int dim = 32;
  int n_radial = 80;
  int n_angular = 64;

  double alpha = 2.0;
  double lambda = 1.0;
  double x_min = 1e-6;
  double x_max = 80.0;
  int n_x = 2048;
  double q_min = 0.05;
  double q_max = 240.0;
  int n_q = 120;
  double p_max = 60.0;
  int n_p = 512;

  std::uint64_t seed = 20240901;

  void validate() const;  // throws InvalidArgument
};

VerifyConfig verify_config_from_json(const std::string& json_text);
std::string verify_config_to_json(const VerifyConfig& config);

struct VerifyCheck {
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  double value = 0.0;
  double threshold = 0.0;
  std::string note;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  int n_failed() const;
  int n_skipped() const;
};

// Runs the full invariant suite across all modules.  Checks that need a
// usable safe block are reported as skipped (not failed) when the truncation
// is too small to carry them.
VerifyReport run_verification(const VerifyConfig& config);

std::string report_to_json(const VerifyConfig& config, const VerifyReport& report);

// The five real-even test weights used by the canonical-pair checks:
// Cahill-Glauber s = -1 and s = -2 plus three Gaussian-times-polynomial
// customs.
std::vector<WeightFunction> standard_test_weights();

// Deliberately asymmetric weight (odd part) violating the parity law, and a
// complex-even weight violating the adjoint law; negative controls.
WeightFunction asymmetric_control_weight();
WeightFunction complex_even_control_weight();

}  // namespace ovmq
