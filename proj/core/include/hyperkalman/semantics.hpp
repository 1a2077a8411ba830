#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperkalman/calculus.hpp"
#include "hyperkalman/formula.hpp"
#include "hyperkalman/hyperalgebra.hpp"

namespace hyperkalman {

/// Branch accounting for the valuation searches. Every candidate value
/// placed in a slot costs one tick; exhaustion throws budget_exhausted so
/// callers can tell "no countermodel" from "gave up".
struct Budget {
  std::uint64_t limit = 10'000'000;
  std::uint64_t used = 0;

  void tick() {
    if (++used > limit) throw budget_exhausted(limit);
  }
};

/// Default branch budget: HYPERKALMAN_BUDGET when set, otherwise 10^7.
std::uint64_t default_budget();

/// A legal valuation restricted to a subformula closure: closure[i] has
/// value values[i], and every compound's value is a member of the
/// hyperoperation applied to its children's values.
struct Valuation {
  std::vector<Formula> closure;
  std::vector<int> values;

  int value_of(Formula f) const;
  std::string render(const Proset& domain) const;
};

/// Streams every legal assignment over the subformula closure of roots,
/// children first, exploring variable domains and hyperoperation members
/// in descending index order. The visitor returns false to stop early.
/// Requires m.designated (the matrix view of the algebra).
void for_each_legal_assignment(const Hyperalgebra& m, std::span<const Formula> roots,
                               Budget& budget,
                               const std::function<bool(const Valuation&)>& visit);

struct DecideResult {
  bool holds = false;
  std::optional<Valuation> countermodel;  // set iff !holds
};

/// Γ ⊨ φ over the Nmatrix view of m: searches for a legal assignment with
/// every member of gamma designated and phi undesignated, pruning as soon
/// as a constrained formula is assigned. The first countermodel in the
/// deterministic exploration order is returned.
DecideResult decide_consequence(const Hyperalgebra& m, std::span<const Formula> gamma,
                                Formula phi, Budget& budget);

struct SchemaVerdict {
  bool valid = true;
  /// When invalid: metavariable values (variable formula, element index)
  /// and one attainable undesignated value of the schema root.
  std::vector<std::pair<Formula, int>> witness;
  int bad_value = -1;

  std::string render_witness(const Proset& domain) const;
};

/// Schema validity: metavariables range over the whole domain; for every
/// metavariable assignment, every nondeterministic resolution of the
/// schema tree must land in the designated set. Works on any formula whose
/// compound subterms are not shared (all the shipped schemas and G_n);
/// falls back to the general assignment search otherwise.
SchemaVerdict schema_valid(const Hyperalgebra& m, Formula schema, Budget& budget);
SchemaVerdict schema_valid(const Hyperalgebra& m, const AxiomSchema& schema,
                           Budget& budget);

/// MP designation-preservation: designated x and designated u in x ⊸ y
/// force y designated.
bool mp_preserves(const Hyperalgebra& m, std::string* witness = nullptr);

/// A C_min bivaluation restricted to a closure: values in {0,1}.
struct BivalResult {
  bool holds = false;
  std::optional<Valuation> countermodel;
};

/// Bivaluation consequence for C_min: classical tables for the binary
/// connectives; negation is free except for (val1) b(φ)=0 ⇒ b(¬φ)=1 and
/// (val2) b(¬¬φ)=1 ⇒ b(φ)=1, enforced wherever the relevant negations
/// appear in the closure.
BivalResult bival_decide(std::span<const Formula> gamma, Formula phi, Budget& budget);

}  // namespace hyperkalman
