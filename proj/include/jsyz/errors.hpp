#pragma once

#include <stdexcept>
#include <string>

namespace jsyz {

/// Malformed or unusable input (exit code 1 at the command line).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : InputError(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class HomogeneityError : public InputError {
 public:
  HomogeneityError(int first, int second)
      : InputError("polynomial is not homogeneous: found terms of degree " + std::to_string(first) +
                   " and " + std::to_string(second)),
        first_(first),
        second_(second) {}
  int first_degree() const { return first_; }
  int second_degree() const { return second_; }

 private:
  int first_;
  int second_;
};

class BackendMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A mathematical statement that must hold was found false, such as a broken
/// certificate or disagreeing modular ranks (exit code 2 at the command line).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jsyz
