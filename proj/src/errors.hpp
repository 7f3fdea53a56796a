#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace korobov {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& expected, const std::string& text)
      : std::invalid_argument("parse error at position " + std::to_string(position) + ": expected " +
                              expected + " in \"" + text + "\""),
        position_(position),
        expected_(expected) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class UnsupportedFamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedClassError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedCriterionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public std::range_error {
 public:
  using std::range_error::range_error;
};

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace korobov
