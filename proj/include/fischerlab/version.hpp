#pragma once

namespace fischerlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fischerlab
