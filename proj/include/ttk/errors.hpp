#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ttk {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("syntax error at " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class EmptyPositiveSet : public Error {
 public:
  EmptyPositiveSet() : Error("positive set is empty") {}
};

// Raised when the positive and negative training sets share strings.
class DisjointnessViolation : public Error {
 public:
  explicit DisjointnessViolation(std::vector<std::string> strings);
  const std::vector<std::string>& strings() const noexcept { return strings_; }

 private:
  std::vector<std::string> strings_;
};

class UncoverableElements : public Error {
 public:
  explicit UncoverableElements(std::vector<std::size_t> elements);
  const std::vector<std::size_t>& elements() const noexcept { return elements_; }

 private:
  std::vector<std::size_t> elements_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class LabelError : public Error {
 public:
  using Error::Error;
};

class InsufficientStream : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ttk
