#include "support/oracles.hpp"

namespace hyperkalman::testing {

DecideResult brute_force_consequence(const Hyperalgebra& m,
                                     std::span<const Formula> gamma, Formula phi,
                                     Budget& budget) {
  std::vector<Formula> roots(gamma.begin(), gamma.end());
  roots.push_back(phi);
  DecideResult result{true, std::nullopt};
  for_each_legal_assignment(m, roots, budget, [&](const Valuation& v) {
    for (Formula g : gamma)
      if (!m.is_designated(v.value_of(g))) return true;  // keep searching
    if (m.is_designated(v.value_of(phi))) return true;
    result = {false, v};
    return false;
  });
  return result;
}

std::optional<int> classical_glb(const Proset& p, int x, int y) {
  for (int z = 0; z < p.size(); ++z) {
    if (!p.leq(z, x) || !p.leq(z, y)) continue;
    bool greatest = true;
    for (int w = 0; w < p.size(); ++w)
      if (p.leq(w, x) && p.leq(w, y) && !p.leq(w, z)) greatest = false;
    if (greatest) return z;
  }
  return std::nullopt;
}

std::optional<int> classical_residual(const Proset& p, int x, int y) {
  for (int z = 0; z < p.size(); ++z) {
    auto glb = classical_glb(p, x, z);
    if (!glb || !p.leq(*glb, y)) continue;
    bool greatest = true;
    for (int w = 0; w < p.size(); ++w) {
      auto g = classical_glb(p, x, w);
      if (g && p.leq(*g, y) && !p.leq(w, z)) greatest = false;
    }
    if (greatest) return z;
  }
  return std::nullopt;
}

bool classical_eval(Formula f, const std::vector<std::pair<Formula, bool>>& env) {
  switch (f.conn()) {
    case Conn::Var:
      for (const auto& [var, value] : env)
        if (var == f) return value;
      throw precondition_error("unassigned variable " + f.var_name());
    case Conn::And:
      return classical_eval(f.left(), env) && classical_eval(f.right(), env);
    case Conn::Or:
      return classical_eval(f.left(), env) || classical_eval(f.right(), env);
    case Conn::Imp:
      return !classical_eval(f.left(), env) || classical_eval(f.right(), env);
    case Conn::Not:
      throw precondition_error("classical_eval is negation-free");
  }
  return false;
}

Formula random_formula(std::mt19937& rng, const std::vector<Formula>& vars,
                       int depth, bool with_negation) {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  if (depth == 0 || pick(4) == 0) return vars[pick(static_cast<int>(vars.size()))];
  int c = pick(with_negation ? 4 : 3);
  if (with_negation && c == 3)
    return Formula::negate(random_formula(rng, vars, depth - 1, with_negation));
  Formula l = random_formula(rng, vars, depth - 1, with_negation);
  Formula r = random_formula(rng, vars, depth - 1, with_negation);
  switch (c) {
    case 0: return Formula::conj(l, r);
    case 1: return Formula::disj(l, r);
    default: return Formula::imp(l, r);
  }
}

std::vector<Hyperalgebra> ihl_corpus(int max_size) {
  std::vector<Hyperalgebra> corpus;
  for (int n = 1; n <= max_size; ++n)
    for (Hyperalgebra& h : enumerate_structures(Kind::IHL, n, max_size))
      corpus.push_back(std::move(h));
  corpus.push_back(fixtures::ch2());
  corpus.push_back(fixtures::ch3());
  corpus.push_back(fixtures::eq3());
  return corpus;
}

}  // namespace hyperkalman::testing
