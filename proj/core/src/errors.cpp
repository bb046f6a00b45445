#include "cct/errors.hpp"

#include <string>

namespace cct {

namespace {

std::string join(const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

NotAGroup::NotAGroup(const std::string& reason, std::vector<Element> witness)
    : Error("not a group: " + reason + " (witness " + join(witness) + ")"),
      witness_(std::move(witness)) {}

OrderBudgetExceeded::OrderBudgetExceeded(std::size_t limit, const std::string& what)
    : Error(what + " exceeds budget " + std::to_string(limit)), limit_(limit) {}

NotNormal::NotNormal(Element member, Element conjugator, Element conjugate)
    : Error("subgroup is not normal: conjugating " + std::to_string(member) + " by " +
            std::to_string(conjugator) + " gives " + std::to_string(conjugate)),
      member_(member),
      conjugator_(conjugator),
      conjugate_(conjugate) {}

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& expected)
    : Error("syntax error at " + (line ? "line " + std::to_string(line) + ", " : std::string()) +
            "column " + std::to_string(column) + ": expected " + expected),
      line_(line),
      column_(column),
      expected_(expected) {}

BudgetExceeded::BudgetExceeded(std::size_t max_cosets)
    : Error("coset enumeration exceeded " + std::to_string(max_cosets) +
            " cosets (group may be infinite)"),
      max_cosets_(max_cosets) {}

UndefinedName::UndefinedName(const std::string& name, std::size_t line)
    : Error("undefined name '" + name + "'" +
            (line ? " on line " + std::to_string(line) : std::string())),
      name_(name),
      line_(line) {}

}  // namespace cct
