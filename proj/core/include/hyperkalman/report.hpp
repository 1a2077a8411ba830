#pragma once

#include <string>
#include <vector>

namespace hyperkalman {

/// Outcome of one named check (an axiom, a table comparison, a pipeline
/// stage). Failures always carry a witness.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;  // empty iff passed
  std::string detail;   // optional elaboration, shown in text output
};

/// A verification report: the ordered list of checks a verifier ran.
class Report {
 public:
  void add_pass(std::string name, std::string detail = "");
  void add_fail(std::string name, std::string witness, std::string detail = "");
  void append(const Report& other, const std::string& prefix = "");

  bool ok() const;
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;
  /// First failed check, or nullptr when ok().
  const Check* first_failure() const;

  std::string to_text() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace hyperkalman
