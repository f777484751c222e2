#pragma once

#include <map>
#include <string>

#include "ovmq/fock.hpp"

namespace ovmq {

// Shortest round-trippable decimal representation ('.' separator, C locale).
std::string format_double(double v);

// Shared matrix export schema:
//   { "label": ..., "dim": n, "entries": [[re, im] x n^2] (row-major),
//     "metadata": { ... } }
// `metadata_json` must be a JSON object when non-empty.
std::string matrix_record_json(const FockOperator& op, const std::string& metadata_json = "");

}  // namespace ovmq
