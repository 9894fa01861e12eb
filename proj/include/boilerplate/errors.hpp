#pragma once

#include <stdexcept>
#include <string>

namespace boilerplate {

// Invalid parameters or mismatched inputs. The CLI maps this to exit status 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Filesystem failures. The CLI maps this to exit status 1.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// API misuse, e.g. recording into a sealed store.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace boilerplate
