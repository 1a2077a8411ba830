#include "hyperkalman/report.hpp"

#include <sstream>

namespace hyperkalman {

void Report::add_pass(std::string name, std::string detail) {
  checks_.push_back({std::move(name), true, "", std::move(detail)});
}

void Report::add_fail(std::string name, std::string witness, std::string detail) {
  checks_.push_back({std::move(name), false, std::move(witness), std::move(detail)});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const Check& c : other.checks_) {
    Check copy = c;
    if (!prefix.empty()) copy.name = prefix + c.name;
    checks_.push_back(std::move(copy));
  }
}

bool Report::ok() const {
  for (const Check& c : checks_)
    if (!c.passed) return false;
  return true;
}

const Check* Report::find(const std::string& name) const {
  for (const Check& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

const Check* Report::first_failure() const {
  for (const Check& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const Check& c : checks_) {
    os << (c.passed ? "  ok   " : "  FAIL ") << c.name;
    if (!c.passed) os << "  witness: " << c.witness;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
  }
  return os.str();
}

}  // namespace hyperkalman
