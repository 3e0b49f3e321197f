#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ipd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text that does not describe a permutation of {1..n}.
class PermutationParseError : public Error {
 public:
  enum class Kind { Empty, NotAPermutation };

  PermutationParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class ElementNotInPoset : public Error {
 public:
  using Error::Error;
};

/// A size argument is above the configured enumeration cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, int requested, int cap)
      : Error(what + ": " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  int requested() const noexcept { return requested_; }
  int cap() const noexcept { return cap_; }

 private:
  int requested_;
  int cap_;
};

/// Line-oriented text input that could not be parsed. Line numbers are 1-based.
class MalformedLine : public Error {
 public:
  MalformedLine(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ipd
