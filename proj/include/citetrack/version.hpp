#pragma once

namespace citetrack {

inline constexpr const char* version_string = "citetrack 0.1.0";

}
