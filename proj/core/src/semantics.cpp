#include "hyperkalman/semantics.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

#include "hyperkalman/errors.hpp"

namespace hyperkalman {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("HYPERKALMAN_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

int Valuation::value_of(Formula f) const {
  for (std::size_t i = 0; i < closure.size(); ++i)
    if (closure[i] == f) return values[i];
  throw precondition_error("formula is not in the valuation's closure");
}

std::string Valuation::render(const Proset& domain) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < closure.size(); ++i) {
    if (i) os << ", ";
    os << "v(" << format_formula(closure[i]) << ")=" << domain.label(values[i]);
  }
  return os.str();
}

namespace {

struct SearchContext {
  const Hyperalgebra& m;
  std::vector<Formula> closure;
  std::vector<int> left_slot;   // closure index of left child (-1 for vars)
  std::vector<int> right_slot;  // closure index of right child (-1 if none)
  std::vector<int> values;
  Budget& budget;

  SearchContext(const Hyperalgebra& matrix, std::span<const Formula> roots,
                Budget& b)
      : m(matrix), closure(subformula_closure(roots)), budget(b) {
    if (!m.designated)
      throw precondition_error("the structure has no designated set");
    std::map<std::uint32_t, int> slot;
    for (std::size_t i = 0; i < closure.size(); ++i)
      slot[closure[i].id()] = static_cast<int>(i);
    left_slot.assign(closure.size(), -1);
    right_slot.assign(closure.size(), -1);
    for (std::size_t i = 0; i < closure.size(); ++i) {
      Conn c = closure[i].conn();
      if (c == Conn::Var) continue;
      left_slot[i] = slot.at(closure[i].left().id());
      if (c != Conn::Not) right_slot[i] = slot.at(closure[i].right().id());
    }
    values.assign(closure.size(), -1);
  }

  /// Candidate values for slot i given earlier assignments, descending.
  std::vector<int> candidates(std::size_t i) const {
    Conn c = closure[i].conn();
    if (c == Conn::Var) {
      std::vector<int> out;
      for (int v = m.size() - 1; v >= 0; --v) out.push_back(v);
      return out;
    }
    const ElemSet* cell = nullptr;
    int a = values[left_slot[i]];
    switch (c) {
      case Conn::Not:
        if (!m.neg)
          throw precondition_error("formula uses negation but the structure has no neg table");
        cell = &m.neg_cell(a);
        break;
      case Conn::And: cell = &m.meet_cell(a, values[right_slot[i]]); break;
      case Conn::Or: cell = &m.join_cell(a, values[right_slot[i]]); break;
      case Conn::Imp: cell = &m.imp_cell(a, values[right_slot[i]]); break;
      case Conn::Var: break;
    }
    std::vector<int> out = cell->members();
    std::reverse(out.begin(), out.end());
    return out;
  }
};

}  // namespace

void for_each_legal_assignment(const Hyperalgebra& m, std::span<const Formula> roots,
                               Budget& budget,
                               const std::function<bool(const Valuation&)>& visit) {
  SearchContext ctx(m, roots, budget);
  bool stopped = false;
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (stopped) return;
    if (i == ctx.closure.size()) {
      if (!visit(Valuation{ctx.closure, ctx.values})) stopped = true;
      return;
    }
    for (int v : ctx.candidates(i)) {
      ctx.budget.tick();
      ctx.values[i] = v;
      self(self, i + 1);
      if (stopped) return;
    }
    ctx.values[i] = -1;
  };
  recurse(recurse, 0);
}

DecideResult decide_consequence(const Hyperalgebra& m, std::span<const Formula> gamma,
                                Formula phi, Budget& budget) {
  std::vector<Formula> roots(gamma.begin(), gamma.end());
  roots.push_back(phi);
  SearchContext ctx(m, roots, budget);

  // Designation constraints, checked the moment a slot is assigned.
  std::vector<int> constraint(ctx.closure.size(), 0);  // +1 designated, -1 not
  bool contradictory = false;
  auto constrain = [&](Formula f, int want) {
    for (std::size_t i = 0; i < ctx.closure.size(); ++i)
      if (ctx.closure[i] == f) {
        if (constraint[i] != 0 && constraint[i] != want) contradictory = true;
        constraint[i] = want;
      }
  };
  for (Formula g : gamma) constrain(g, +1);
  constrain(phi, -1);
  if (contradictory) return {true, std::nullopt};  // phi in gamma: holds trivially

  DecideResult result{true, std::nullopt};
  auto recurse = [&](auto&& self, std::size_t i) -> bool {
    if (i == ctx.closure.size()) {
      result = {false, Valuation{ctx.closure, ctx.values}};
      return true;
    }
    for (int v : ctx.candidates(i)) {
      ctx.budget.tick();
      if (constraint[i] == +1 && !m.is_designated(v)) continue;
      if (constraint[i] == -1 && m.is_designated(v)) continue;
      ctx.values[i] = v;
      if (self(self, i + 1)) return true;
    }
    ctx.values[i] = -1;
    return false;
  };
  recurse(recurse, 0);
  return result;
}

std::string SchemaVerdict::render_witness(const Proset& domain) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) os << ", ";
    os << format_formula(witness[i].first) << "=" << domain.label(witness[i].second);
  }
  if (bad_value >= 0) os << " attains " << domain.label(bad_value);
  return os.str();
}

namespace {

/// True when no compound subformula is shared (every non-variable node has
/// at most one parent in the DAG). Bottom-up possible-set evaluation is
/// exact exactly then: a shared variable is harmless because its value is
/// fixed per assignment, but a shared compound would need one consistent
/// choice across occurrences.
bool compounds_unshared(Formula root) {
  auto closure = subformula_closure(std::span<const Formula>(&root, 1));
  std::map<std::uint32_t, int> parents;
  for (Formula f : closure) {
    Conn c = f.conn();
    if (c == Conn::Var) continue;
    if (f.left().conn() != Conn::Var) parents[f.left().id()]++;
    if (c != Conn::Not && f.right().conn() != Conn::Var)
      parents[f.right().id()]++;
  }
  for (auto& [id, count] : parents)
    if (count > 1) return false;
  return true;
}

}  // namespace

SchemaVerdict schema_valid(const Hyperalgebra& m, Formula schema, Budget& budget) {
  if (!m.designated)
    throw precondition_error("the structure has no designated set");
  std::vector<Formula> vars = variables_of(schema);
  int n = m.size();

  if (compounds_unshared(schema)) {
    // Fast path: per metavariable assignment, compute the set of attainable
    // values bottom-up over the (tree-shaped) closure.
    auto closure = subformula_closure(std::span<const Formula>(&schema, 1));
    std::map<std::uint32_t, std::size_t> slot;
    for (std::size_t i = 0; i < closure.size(); ++i) slot[closure[i].id()] = i;
    std::vector<ElemSet> possible(closure.size(), ElemSet(n));

    std::vector<int> assign(vars.size(), n - 1);
    while (true) {
      budget.tick();
      for (std::size_t i = 0; i < closure.size(); ++i) {
        Formula f = closure[i];
        ElemSet& out = possible[i];
        out = ElemSet(n);
        switch (f.conn()) {
          case Conn::Var: {
            for (std::size_t k = 0; k < vars.size(); ++k)
              if (vars[k] == f) out.insert(assign[k]);
            break;
          }
          case Conn::Not: {
            if (!m.neg)
              throw precondition_error(
                  "formula uses negation but the structure has no neg table");
            for (int a : possible[slot.at(f.left().id())].members())
              out |= m.neg_cell(a);
            break;
          }
          default: {
            const ElemSet& lhs = possible[slot.at(f.left().id())];
            const ElemSet& rhs = possible[slot.at(f.right().id())];
            for (int a : lhs.members())
              for (int b : rhs.members()) {
                if (f.conn() == Conn::And) out |= m.meet_cell(a, b);
                if (f.conn() == Conn::Or) out |= m.join_cell(a, b);
                if (f.conn() == Conn::Imp) out |= m.imp_cell(a, b);
              }
            break;
          }
        }
      }
      const ElemSet& root = possible.back();
      if (!root.subset_of(*m.designated)) {
        SchemaVerdict verdict;
        verdict.valid = false;
        for (std::size_t k = 0; k < vars.size(); ++k)
          verdict.witness.emplace_back(vars[k], assign[k]);
        for (int v : root.members())
          if (!m.designated->contains(v)) {
            verdict.bad_value = v;
            break;
          }
        return verdict;
      }
      // Next assignment, descending lexicographically.
      std::size_t k = 0;
      while (k < assign.size() && --assign[k] < 0) assign[k++] = n - 1;
      if (k == assign.size()) break;
      if (vars.empty()) break;
    }
    return SchemaVerdict{};
  }

  // General fallback: schema validity is exactly ∅ ⊨ schema.
  DecideResult r = decide_consequence(m, {}, schema, budget);
  SchemaVerdict verdict;
  verdict.valid = r.holds;
  if (!r.holds) {
    for (Formula v : vars)
      verdict.witness.emplace_back(v, r.countermodel->value_of(v));
    verdict.bad_value = r.countermodel->value_of(schema);
  }
  return verdict;
}

SchemaVerdict schema_valid(const Hyperalgebra& m, const AxiomSchema& schema,
                           Budget& budget) {
  return schema_valid(m, schema.pattern, budget);
}

bool mp_preserves(const Hyperalgebra& m, std::string* witness) {
  if (!m.designated)
    throw precondition_error("the structure has no designated set");
  int n = m.size();
  for (int x = 0; x < n; ++x) {
    if (!m.is_designated(x)) continue;
    for (int y = 0; y < n; ++y) {
      if (m.is_designated(y)) continue;
      for (int u : m.imp_cell(x, y).members())
        if (m.is_designated(u)) {
          if (witness)
            *witness = render_triple(m.proset, x, y, u);
          return false;
        }
    }
  }
  return true;
}

BivalResult bival_decide(std::span<const Formula> gamma, Formula phi, Budget& budget) {
  std::vector<Formula> roots(gamma.begin(), gamma.end());
  roots.push_back(phi);
  std::vector<Formula> closure = subformula_closure(roots);
  std::map<std::uint32_t, std::size_t> slot;
  for (std::size_t i = 0; i < closure.size(); ++i) slot[closure[i].id()] = i;

  std::vector<int> constraint(closure.size(), -2);  // -2 free, else required value
  bool contradictory = false;
  auto constrain = [&](Formula f, int want) {
    std::size_t i = slot.at(f.id());
    if (constraint[i] != -2 && constraint[i] != want) contradictory = true;
    constraint[i] = want;
  };
  for (Formula g : gamma) constrain(g, 1);
  constrain(phi, 0);
  if (contradictory) return {true, std::nullopt};

  std::vector<int> values(closure.size(), -1);
  BivalResult result{true, std::nullopt};

  auto admissible = [&](std::size_t i, int v) {
    Formula f = closure[i];
    switch (f.conn()) {
      case Conn::Var:
        return true;
      case Conn::And:
        return v == std::min(values[slot.at(f.left().id())],
                             values[slot.at(f.right().id())]);
      case Conn::Or:
        return v == std::max(values[slot.at(f.left().id())],
                             values[slot.at(f.right().id())]);
      case Conn::Imp:
        return v == ((values[slot.at(f.left().id())] == 1 &&
                      values[slot.at(f.right().id())] == 0)
                         ? 0
                         : 1);
      case Conn::Not: {
        // val1: b(child)=0 forces b(~child)=1.
        if (values[slot.at(f.left().id())] == 0 && v != 1) return false;
        // val2: this node is ~~g and b(~~g)=1 forces b(g)=1.
        if (f.left().conn() == Conn::Not && v == 1 &&
            values[slot.at(f.left().left().id())] != 1)
          return false;
        return true;
      }
    }
    return false;
  };

  auto recurse = [&](auto&& self, std::size_t i) -> bool {
    if (i == closure.size()) {
      result = {false, Valuation{closure, values}};
      return true;
    }
    for (int v : {1, 0}) {
      budget.tick();
      if (constraint[i] != -2 && constraint[i] != v) continue;
      if (!admissible(i, v)) continue;
      values[i] = v;
      if (self(self, i + 1)) return true;
    }
    values[i] = -1;
    return false;
  };
  recurse(recurse, 0);
  return result;
}

}  // namespace hyperkalman
