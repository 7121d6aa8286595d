#pragma once

namespace core2vec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace core2vec
