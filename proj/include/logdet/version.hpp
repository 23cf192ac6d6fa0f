#pragma once

namespace logdet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace logdet
