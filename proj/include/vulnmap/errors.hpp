#pragma once

#include <stdexcept>

namespace vulnmap {

/// Malformed run or synth configuration. CLI exit code 2.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unreadable or malformed data file. CLI exit code 3.
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vulnmap
