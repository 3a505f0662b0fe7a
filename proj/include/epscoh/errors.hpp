#pragma once

#include <stdexcept>
#include <string>

namespace epscoh {

// Exit-code classes used by the CLI: parse 2, validation 3, precondition 4.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace epscoh
