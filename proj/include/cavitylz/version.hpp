// Tool version, embedded in metadata sidecars and the `version` subcommand.
#pragma once

namespace cavitylz {

inline constexpr const char* version_string = "1.0.0";

}  // namespace cavitylz
