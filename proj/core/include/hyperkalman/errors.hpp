#pragma once

#include <stdexcept>
#include <string>

namespace hyperkalman {

/// A caller violated a documented precondition (bad index, empty input, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A file or text input does not match the expected shape or grammar.
class shape_error : public std::runtime_error {
 public:
  explicit shape_error(const std::string& what) : std::runtime_error(what) {}
};

/// Formula text failed to parse; carries the byte offset of the failure.
class parse_error : public shape_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : shape_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The valuation search exceeded its branch budget. Distinct from a
/// "fails" verdict: the caller opted into a bounded search and the bound
/// ran out before a definitive answer.
class budget_exhausted : public std::runtime_error {
 public:
  explicit budget_exhausted(unsigned long long limit)
      : std::runtime_error("branch budget exhausted (limit " +
                           std::to_string(limit) + ")"),
        limit_(limit) {}
  unsigned long long limit() const { return limit_; }

 private:
  unsigned long long limit_;
};

}  // namespace hyperkalman
