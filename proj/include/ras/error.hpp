#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ras {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when two classes or a class and a surface live in different lattices.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// A walk ran past its step budget. The letters applied so far are kept so the
// caller can report where the walk was heading.
class IterationLimit : public Error {
 public:
  IterationLimit(const std::string& what, std::vector<std::size_t> steps)
      : Error(what), steps_(std::move(steps)) {}
  const std::vector<std::size_t>& steps() const { return steps_; }

 private:
  std::vector<std::size_t> steps_;
};

// A reflection that is neither linear nor admissible was requested.
class InadmissibleLetter : public Error {
 public:
  InadmissibleLetter(const std::string& what, std::size_t position, std::size_t letter)
      : Error(what), position_(position), letter_(letter) {}
  std::size_t position() const { return position_; }
  std::size_t letter() const { return letter_; }

 private:
  std::size_t position_;
  std::size_t letter_;
};

}  // namespace ras
