#pragma once

namespace mhelm {
inline constexpr const char kVersion[] = "0.1.0";
}
