#pragma once

#include <stdexcept>
#include <string>

namespace mfc {

// Bad input data: missing or malformed files, dimension mismatches,
// invalid rasters. CLI exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad configuration: out-of-range thresholds or parameters, malformed
// config files. CLI exit code 3.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mfc
