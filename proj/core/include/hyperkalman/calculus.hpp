#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperkalman/formula.hpp"
#include "hyperkalman/report.hpp"

namespace hyperkalman {

/// The three Hilbert calculi: C_omega (AX1-AX8, EM, cf), C_min (adds
/// Peirce PL), C_omega+ (adds ce).
enum class System { Cw, Cmin, CwPlus };

std::string system_name(System s);
std::optional<System> system_from_name(const std::string& name);

/// An axiom schema: a pattern over the metavariables A, B, C (represented
/// as variables of those names; instantiation is one-sided syntactic
/// matching).
struct AxiomSchema {
  std::string name;
  Formula pattern;
};

/// AX1..AX8, EM, cf, PL, ce in that order.
const std::vector<AxiomSchema>& axiom_table();
const AxiomSchema* find_schema(const std::string& name);
/// The schemas admitted by a system.
std::vector<const AxiomSchema*> system_schemas(System s);

/// One-sided matching: binds each metavariable of the pattern to a
/// subformula of the instance. Returns false when no substitution works.
bool match_schema(Formula pattern, Formula instance);

struct ProofLine {
  Formula formula;
  std::string rule;        // axiom name, "MP", or "HYP"
  std::vector<int> refs;   // 1-based line numbers; MP: [antecedent, implication]
};

struct Proof {
  std::vector<ProofLine> lines;
};

/// Line-by-line verification: each line is a hypothesis, an instance of a
/// schema the system admits, or follows by MP from strictly earlier lines.
/// The report's "proof" check fails with witness "line N" at the first bad
/// line.
Report check_proof(const Proof& proof, System system,
                   std::span<const Formula> hypotheses = {});

/// Bounded MP-closure proof search: instantiates the system's schemas with
/// subformulas of target/hypotheses and closes under MP. Returns a proof
/// that check_proof accepts, or nullopt when the bound runs out. Only
/// meant to back the theorem batteries, not a real prover.
std::optional<Proof> bounded_derive(Formula target, System system,
                                    std::span<const Formula> hypotheses = {},
                                    int max_formulas = 20000,
                                    int max_rounds = 10);

}  // namespace hyperkalman
