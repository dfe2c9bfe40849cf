#pragma once

#include <stdexcept>
#include <string>

namespace wchain {

// The correlation route and the amplitude route disagreed beyond tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// The path ledger only covers integer-coefficient states sharing one
// excitation count; anything else lands here.
class UnsupportedStateError : public std::runtime_error {
 public:
  explicit UnsupportedStateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wchain
