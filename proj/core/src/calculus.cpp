#include "hyperkalman/calculus.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "hyperkalman/errors.hpp"

namespace hyperkalman {

std::string system_name(System s) {
  switch (s) {
    case System::Cw: return "cw";
    case System::Cmin: return "cmin";
    case System::CwPlus: return "cw+";
  }
  return "?";
}

std::optional<System> system_from_name(const std::string& name) {
  for (System s : {System::Cw, System::Cmin, System::CwPlus})
    if (system_name(s) == name) return s;
  return std::nullopt;
}

const std::vector<AxiomSchema>& axiom_table() {
  static const std::vector<AxiomSchema> table = [] {
    Formula A = Formula::var("A");
    Formula B = Formula::var("B");
    Formula C = Formula::var("C");
    using F = Formula;
    std::vector<AxiomSchema> t;
    t.push_back({"AX1", F::imp(A, F::imp(B, A))});
    t.push_back({"AX2", F::imp(F::imp(A, F::imp(B, C)),
                               F::imp(F::imp(A, B), F::imp(A, C)))});
    t.push_back({"AX3", F::imp(A, F::imp(B, F::conj(A, B)))});
    t.push_back({"AX4", F::imp(F::conj(A, B), A)});
    t.push_back({"AX5", F::imp(F::conj(A, B), B)});
    t.push_back({"AX6", F::imp(A, F::disj(A, B))});
    t.push_back({"AX7", F::imp(B, F::disj(A, B))});
    t.push_back({"AX8", F::imp(F::imp(A, C),
                               F::imp(F::imp(B, C), F::imp(F::disj(A, B), C)))});
    t.push_back({"EM", F::disj(A, F::negate(A))});
    t.push_back({"cf", F::imp(F::negate(F::negate(A)), A)});
    t.push_back({"PL", F::disj(A, F::imp(A, B))});
    t.push_back({"ce", F::imp(A, F::negate(F::negate(A)))});
    return t;
  }();
  return table;
}

const AxiomSchema* find_schema(const std::string& name) {
  for (const AxiomSchema& s : axiom_table())
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<const AxiomSchema*> system_schemas(System s) {
  std::vector<const AxiomSchema*> out;
  for (const AxiomSchema& schema : axiom_table()) {
    if (schema.name == "PL" && s != System::Cmin) continue;
    if (schema.name == "ce" && s != System::CwPlus) continue;
    out.push_back(&schema);
  }
  return out;
}

namespace {

bool match_into(Formula pattern, Formula instance,
                std::map<std::uint32_t, Formula>& binding) {
  if (pattern.conn() == Conn::Var) {
    auto [it, inserted] = binding.emplace(pattern.id(), instance);
    return inserted || it->second == instance;
  }
  if (pattern.conn() != instance.conn()) return false;
  if (!match_into(pattern.left(), instance.left(), binding)) return false;
  if (pattern.conn() == Conn::Not) return true;
  return match_into(pattern.right(), instance.right(), binding);
}

}  // namespace

bool match_schema(Formula pattern, Formula instance) {
  std::map<std::uint32_t, Formula> binding;
  return match_into(pattern, instance, binding);
}

Report check_proof(const Proof& proof, System system,
                   std::span<const Formula> hypotheses) {
  Report report;
  std::set<std::uint32_t> hyps;
  for (Formula h : hypotheses) hyps.insert(h.id());
  std::vector<const AxiomSchema*> schemas = system_schemas(system);

  for (std::size_t i = 0; i < proof.lines.size(); ++i) {
    const ProofLine& line = proof.lines[i];
    int number = static_cast<int>(i) + 1;
    auto reject = [&](const std::string& reason) {
      report.add_fail("proof", "line " + std::to_string(number), reason);
    };

    if (line.rule == "HYP") {
      if (!hyps.count(line.formula.id())) {
        reject("formula is not a hypothesis");
        return report;
      }
      continue;
    }
    if (line.rule == "MP") {
      if (line.refs.size() != 2) {
        reject("MP needs exactly two references");
        return report;
      }
      int a = line.refs[0], b = line.refs[1];
      if (a < 1 || b < 1 || a >= number || b >= number) {
        reject("MP references must point at strictly earlier lines");
        return report;
      }
      Formula antecedent = proof.lines[a - 1].formula;
      Formula implication = proof.lines[b - 1].formula;
      if (implication.conn() != Conn::Imp ||
          !(implication.left() == antecedent) ||
          !(implication.right() == line.formula)) {
        reject("referenced lines do not justify this formula by MP");
        return report;
      }
      continue;
    }
    const AxiomSchema* schema = nullptr;
    for (const AxiomSchema* s : schemas)
      if (s->name == line.rule) schema = s;
    if (!schema) {
      if (find_schema(line.rule))
        reject("schema " + line.rule + " is not part of " + system_name(system));
      else
        reject("unknown rule " + line.rule);
      return report;
    }
    if (!match_schema(schema->pattern, line.formula)) {
      reject("formula is not an instance of " + line.rule);
      return report;
    }
  }
  report.add_pass("proof", std::to_string(proof.lines.size()) + " lines");
  return report;
}

namespace {

struct Provenance {
  std::string rule;      // axiom name or "MP" or "HYP"
  std::uint32_t from_a = 0;  // MP: antecedent formula id
  std::uint32_t from_b = 0;  // MP: implication formula id
};

}  // namespace

std::optional<Proof> bounded_derive(Formula target, System system,
                                    std::span<const Formula> hypotheses,
                                    int max_formulas, int max_rounds) {
  // Instantiation pool: subformulas of the target and hypotheses.
  std::vector<Formula> roots(hypotheses.begin(), hypotheses.end());
  roots.push_back(target);
  std::vector<Formula> pool = subformula_closure(roots);

  std::map<std::uint32_t, Provenance> how;
  std::vector<Formula> known;
  auto add = [&](Formula f, Provenance p) {
    if (how.count(f.id())) return;
    how.emplace(f.id(), std::move(p));
    known.push_back(f);
  };

  for (Formula h : hypotheses) add(h, {"HYP"});
  for (const AxiomSchema* schema : system_schemas(system)) {
    std::vector<Formula> metas = variables_of(schema->pattern);
    std::vector<std::size_t> pick(metas.size(), 0);
    while (true) {
      std::map<std::uint32_t, Formula> binding;
      for (std::size_t k = 0; k < metas.size(); ++k)
        binding.emplace(metas[k].id(), pool[pick[k]]);
      // Substitute the binding into the pattern.
      auto subst = [&](auto&& self, Formula f) -> Formula {
        if (f.conn() == Conn::Var) {
          auto it = binding.find(f.id());
          return it == binding.end() ? f : it->second;
        }
        if (f.conn() == Conn::Not) return Formula::negate(self(self, f.left()));
        Formula l = self(self, f.left()), r = self(self, f.right());
        switch (f.conn()) {
          case Conn::And: return Formula::conj(l, r);
          case Conn::Or: return Formula::disj(l, r);
          default: return Formula::imp(l, r);
        }
      };
      add(subst(subst, schema->pattern), {schema->name});
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == pool.size()) pick[k++] = 0;
      if (k == pick.size()) break;
      if (static_cast<int>(known.size()) > max_formulas) break;
    }
  }

  // MP closure.
  for (int round = 0; round < max_rounds && !how.count(target.id()); ++round) {
    std::vector<Formula> snapshot = known;
    for (Formula impl : snapshot) {
      if (impl.conn() != Conn::Imp) continue;
      if (!how.count(impl.left().id())) continue;
      add(impl.right(), {"MP", impl.left().id(), impl.id()});
      if (static_cast<int>(known.size()) > max_formulas) break;
    }
    if (known.size() == snapshot.size()) break;  // closure reached
  }
  if (!how.count(target.id())) return std::nullopt;

  // Reconstruct the minimal line sequence for the target.
  Proof proof;
  std::map<std::uint32_t, int> line_of;
  auto formula_by_id = [&](std::uint32_t id) -> Formula {
    for (Formula f : known)
      if (f.id() == id) return f;
    throw std::logic_error("derivation bookkeeping lost a formula");
  };
  auto emit = [&](auto&& self, std::uint32_t id) -> int {
    auto it = line_of.find(id);
    if (it != line_of.end()) return it->second;
    const Provenance& p = how.at(id);
    std::vector<int> refs;
    if (p.rule == "MP")
      refs = {self(self, p.from_a), self(self, p.from_b)};
    proof.lines.push_back({formula_by_id(id), p.rule, refs});
    int number = static_cast<int>(proof.lines.size());
    line_of.emplace(id, number);
    return number;
  };
  emit(emit, target.id());
  return proof;
}

}  // namespace hyperkalman
