#pragma once

#include <stdexcept>
#include <string>

namespace tempograph {

// Raised for any argument outside an operation's domain.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a netlist contains a combinational loop; what() names the path.
class CycleError : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

// File access or file-format problems (CLI maps these to exit code 1).
class FileError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace tempograph
