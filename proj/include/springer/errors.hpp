#pragma once

#include <stdexcept>
#include <string>

namespace springer {

/// A violated precondition on user-supplied input (bad partition, non-regular
/// label, inadmissible Cartan type, ...). Maps to CLI exit code 1.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Missing or malformed fixture data. Maps to CLI exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal consistency failure of a computational engine (e.g. a
/// composition factor that matches no simple module). Never expected.
struct EngineError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace springer
