#pragma once

#include <stdexcept>
#include <string>

namespace ferocc {

/// Runtime failure (bad data, numeric blowup, I/O trouble).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid user input: bad config keys, missing paths, out-of-range values.
/// The CLI maps this to exit code 2, everything else to 1.
struct ConfigError : Error {
  using Error::Error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }
[[noreturn]] inline void fail_config(const std::string& msg) { throw ConfigError(msg); }

}  // namespace ferocc
