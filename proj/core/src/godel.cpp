#include "hyperkalman/godel.hpp"

#include "hyperkalman/errors.hpp"

namespace hyperkalman {

GodelMatrix::GodelMatrix(int bound) : bound_(bound) {
  if (bound < 2)
    throw precondition_error("the truncation bound must be at least 2");
}

void GodelMatrix::check(int v, const char* what) const {
  if (v < 0 || v > bound_)
    throw precondition_error(std::string(what) + " value " + std::to_string(v) +
                             " outside the domain {0.." + std::to_string(bound_) +
                             "}");
}

int GodelMatrix::apply_or(int x, int y) const {
  check(x, "argument");
  check(y, "argument");
  return std::min(x, y);
}

int GodelMatrix::apply_and(int x, int y) const {
  check(x, "argument");
  check(y, "argument");
  return std::max(x, y);
}

int GodelMatrix::apply_imp(int x, int y) const {
  check(x, "argument");
  check(y, "argument");
  return x >= y ? 0 : y;
}

int GodelMatrix::apply_neg(int x) const {
  check(x, "argument");
  if (x == 0) return 0;
  if (x == 1) return 2;
  return 1;
}

int GodelMatrix::eval(Formula f, const std::map<Formula, int>& assignment) const {
  switch (f.conn()) {
    case Conn::Var: {
      auto it = assignment.find(f);
      if (it == assignment.end())
        throw precondition_error("no value assigned to " + f.var_name());
      check(it->second, "assigned");
      return it->second;
    }
    case Conn::Not:
      return apply_neg(eval(f.left(), assignment));
    case Conn::And:
      return apply_and(eval(f.left(), assignment), eval(f.right(), assignment));
    case Conn::Or:
      return apply_or(eval(f.left(), assignment), eval(f.right(), assignment));
    case Conn::Imp:
      return apply_imp(eval(f.left(), assignment), eval(f.right(), assignment));
  }
  throw precondition_error("malformed formula");
}

std::vector<GodelAxiomAudit> godel_audit_axioms(int bound, System system) {
  GodelMatrix m(bound);
  std::vector<GodelAxiomAudit> out;
  for (const AxiomSchema* schema : system_schemas(system)) {
    GodelAxiomAudit audit;
    audit.schema = schema->name;
    std::vector<Formula> metas = variables_of(schema->pattern);
    std::vector<int> assign(metas.size(), 0);
    // Ascending lexicographic enumeration so a failure is the least witness.
    while (true) {
      std::map<Formula, int> v;
      for (std::size_t k = 0; k < metas.size(); ++k) v.emplace(metas[k], assign[k]);
      int value = m.eval(schema->pattern, v);
      if (!m.designated(value)) {
        audit.valid = false;
        for (std::size_t k = 0; k < metas.size(); ++k)
          audit.witness.emplace_back(metas[k].var_name(), assign[k]);
        audit.value = value;
        break;
      }
      int k = static_cast<int>(assign.size()) - 1;
      while (k >= 0 && ++assign[k] > bound) assign[k--] = 0;
      if (k < 0) break;
    }
    out.push_back(std::move(audit));
  }
  return out;
}

bool godel_mp_preserves(int bound, std::string* witness) {
  GodelMatrix m(bound);
  for (int x = 0; x <= bound; ++x) {
    if (!m.designated(x)) continue;
    for (int y = 0; y <= bound; ++y) {
      if (!m.designated(m.apply_imp(x, y)) || m.designated(y)) continue;
      if (witness)
        *witness = "x=" + std::to_string(x) + ", y=" + std::to_string(y);
      return false;
    }
  }
  return true;
}

Report pigeonhole_check(const Hyperalgebra& m, bool strict, Budget& budget) {
  Report report;
  if (strict) {
    for (const AxiomSchema* schema : system_schemas(System::CwPlus)) {
      SchemaVerdict v = schema_valid(m, *schema, budget);
      if (v.valid)
        report.add_pass("battery-" + schema->name);
      else
        report.add_fail("battery-" + schema->name, v.render_witness(m.proset));
    }
    std::string witness;
    if (mp_preserves(m, &witness))
      report.add_pass("battery-MP");
    else
      report.add_fail("battery-MP", witness);
    if (!report.ok()) return report;
  }
  int n = m.size();
  SchemaVerdict g = schema_valid(m, gn_formula(n), budget);
  if (g.valid)
    report.add_pass("G_" + std::to_string(n));
  else
    report.add_fail("G_" + std::to_string(n), g.render_witness(m.proset));
  return report;
}

}  // namespace hyperkalman
