#pragma once

namespace fks {

inline constexpr const char* version_string = "fks 1.0.0";

} // namespace fks
