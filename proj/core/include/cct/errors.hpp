#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cct/config.hpp"

namespace cct {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table failed a group axiom. The witness is the offending triple for an
/// associativity failure, a single element for identity/inverse failures.
class NotAGroup : public Error {
 public:
  NotAGroup(const std::string& reason, std::vector<Element> witness);
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  std::vector<Element> witness_;
};

class OrderBudgetExceeded : public Error {
 public:
  explicit OrderBudgetExceeded(std::size_t limit, const std::string& what = "group order");
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

/// conjugator^-1 * member * conjugator left the subgroup.
class NotNormal : public Error {
 public:
  NotNormal(Element member, Element conjugator, Element conjugate);
  Element member() const noexcept { return member_; }
  Element conjugator() const noexcept { return conjugator_; }
  Element conjugate() const noexcept { return conjugate_; }

 private:
  Element member_;
  Element conjugator_;
  Element conjugate_;
};

/// Parse failure. `line` is 0 for single-line inputs; `column` is 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& expected);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

/// Coset enumeration ran out of cosets: the group may be infinite.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::size_t max_cosets);
  std::size_t max_cosets() const noexcept { return max_cosets_; }

 private:
  std::size_t max_cosets_;
};

class UndefinedName : public Error {
 public:
  UndefinedName(const std::string& name, std::size_t line);
  const std::string& name() const noexcept { return name_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string name_;
  std::size_t line_;
};

}  // namespace cct
