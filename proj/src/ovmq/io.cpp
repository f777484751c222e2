#include "ovmq/io.hpp"

#include <json.hpp>

#include "ovmq/errors.hpp"

namespace ovmq {

std::string format_double(double v) {
  nlohmann::json j = v;
  return j.dump();
}

std::string matrix_record_json(const FockOperator& op, const std::string& metadata_json) {
  nlohmann::json rec;
  rec["label"] = op.label;
  rec["dim"] = op.dim();
  auto entries = nlohmann::json::array();
  for (int r = 0; r < op.dim(); ++r)
    for (int c = 0; c < op.dim(); ++c) {
      const Complex v = op.mat(r, c);
      entries.push_back({v.real(), v.imag()});
    }
  rec["entries"] = std::move(entries);
  if (!metadata_json.empty()) {
    nlohmann::json meta = nlohmann::json::parse(metadata_json, nullptr, false);
    if (meta.is_discarded() || !meta.is_object())
      throw InvalidArgument("matrix_record_json: metadata must be a JSON object");
    rec["metadata"] = std::move(meta);
  } else {
    rec["metadata"] = nlohmann::json::object();
  }
  return rec.dump(2);
}

}  // namespace ovmq
