#pragma once

namespace pbsym {

inline constexpr const char* kVersion = "0.1.0";

}
