#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyperkalman/calculus.hpp"
#include "hyperkalman/formula.hpp"
#include "hyperkalman/semantics.hpp"

namespace hyperkalman {

/// The infinite matrix M_G over ω = {0,1,2,...} with designated {0,1},
/// implemented as an exact truncation to {0,...,N}: ∨ = min and ∧ = max
/// return an argument, → returns 0 or its second argument, ¬ returns 0, 1
/// or 2, so {0..N} is closed under all operations for N >= 2 and every
/// evaluation below the bound is truncation-independent.
class GodelMatrix {
 public:
  explicit GodelMatrix(int bound);

  int bound() const { return bound_; }
  bool designated(int v) const { return v == 0 || v == 1; }

  int apply_or(int x, int y) const;
  int apply_and(int x, int y) const;
  int apply_imp(int x, int y) const;
  int apply_neg(int x) const;

  /// Deterministic bottom-up evaluation; assignment keys are variable
  /// formulas. Throws precondition_error when an assigned value exceeds
  /// the bound.
  int eval(Formula f, const std::map<Formula, int>& assignment) const;

 private:
  void check(int v, const char* what) const;
  int bound_;
};

/// Per-schema audit of a system against the bound-N truncation. For each
/// schema, all metavariable assignments into {0..N} are evaluated; the
/// verdict carries the lexicographically least failing assignment when
/// invalid. Invalidity witnesses are conclusive for M_G itself; validity
/// is conclusive for instances valued within the bound.
struct GodelAxiomAudit {
  std::string schema;
  bool valid = true;
  std::vector<std::pair<std::string, int>> witness;  // metavar name -> value
  int value = -1;                                    // undesignated value attained
};

std::vector<GodelAxiomAudit> godel_audit_axioms(int bound, System system);

/// MP preservation inside the truncation: x and x→y designated force y
/// designated, exhaustively over {0..N}^2.
bool godel_mp_preserves(int bound, std::string* witness = nullptr);

/// With n the domain size of m, checks schema-style validity of G_n in m.
/// When strict, m must first pass the C_omega+ model battery (every schema
/// of the system valid plus MP preservation); the report lists the battery
/// outcomes followed by the G_n verdict.
Report pigeonhole_check(const Hyperalgebra& m, bool strict, Budget& budget);

}  // namespace hyperkalman
