#pragma once

namespace ovmq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ovmq
