#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hyperkalman/calculus.hpp"
#include "hyperkalman/functors.hpp"
#include "hyperkalman/hc.hpp"
#include "hyperkalman/swap.hpp"

namespace hyperkalman {

using json = nlohmann::json;

/// Canonical rendering: two-space indent, keys sorted (nlohmann objects
/// are key-ordered), trailing newline. Structures written by any command
/// re-load byte-identically.
std::string canonical_dump(const json& j);

/// FNV-1a 64-bit over the canonical dump, as 16 hex digits. Used to pin
/// morphism files to their endpoint structures.
std::string digest(const json& j);
std::string structure_digest(const Hyperalgebra& h);

/// Structure files: labels, leq, kind, ops per kind, optional designated,
/// optional snapshots annex (swap structures only).
json structure_to_json(const Hyperalgebra& h,
                       const std::vector<Snapshot>* snapshots = nullptr);
Hyperalgebra structure_from_json(const json& j);

json swap_to_json(const SwapStructure& s);

json quotient_to_json(const QuotientResult& q);

json morphism_to_json(const Morphism& m);
/// Rebuilds a morphism against the supplied endpoints, refusing digest
/// mismatches (a morphism file only applies to the structures it was
/// written for).
Morphism morphism_from_json(const json& j, const Hyperalgebra& source,
                            const Hyperalgebra& target);

/// Proof files: {"hypotheses": [...], "lines": [{"formula","rule","refs"}]}.
json proof_to_json(const Proof& p, std::span<const Formula> hypotheses = {});
Proof proof_from_json(const json& j);
std::vector<Formula> proof_hypotheses_from_json(const json& j);

json report_to_json(const Report& r);

/// Theorem battery files: one `formula @ system` per line, the annotation
/// naming the weakest system proving the formula (`none` when no system
/// here proves it); '#' starts a comment.
struct BatteryEntry {
  Formula formula;
  std::optional<System> system;
};
std::vector<BatteryEntry> parse_battery(const std::string& text);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace hyperkalman
