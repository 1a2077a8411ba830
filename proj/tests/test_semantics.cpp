#include <doctest.h>

#include <random>

#include "hyperkalman/errors.hpp"
#include "hyperkalman/fixtures.hpp"
#include "hyperkalman/semantics.hpp"
#include "hyperkalman/swap.hpp"
#include "support/oracles.hpp"

using namespace hyperkalman;
namespace oracle = hyperkalman::testing;

namespace {

Hyperalgebra m_s_ch2() {
  return build_hyper_swap(fixtures::ch2(), Variant::Cw).algebra;
}

Hyperalgebra m_s_ch3() {
  return build_hyper_swap(fixtures::ch3(), Variant::Cw).algebra;
}

Hyperalgebra ch2_matrix() {
  // CH2 as a deterministic matrix: designated {1}, no negation.
  Hyperalgebra h = fixtures::ch2();
  h.designated = ElemSet::of(2, {1});
  return h;
}

int count_assignments(const Hyperalgebra& m, std::vector<Formula> roots) {
  Budget budget{1'000'000};
  int count = 0;
  for_each_legal_assignment(m, roots, budget, [&](const Valuation&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace

TEST_CASE("legal assignment counts") {
  Formula p = Formula::var("p");
  CHECK(count_assignments(m_s_ch2(), {p}) == 3);
  CHECK(count_assignments(m_s_ch2(), {Formula::negate(p)}) == 4);
  // Deterministic matrices branch only at variables.
  Formula q = Formula::var("q");
  CHECK(count_assignments(ch2_matrix(), {Formula::conj(p, q)}) == 4);
}

TEST_CASE("modus ponens consequence holds over M(S(CH2))") {
  Hyperalgebra m = m_s_ch2();
  Formula p = Formula::var("p"), q = Formula::var("q");
  std::vector<Formula> gamma = {p, Formula::imp(p, q)};
  Budget budget{default_budget()};
  CHECK(decide_consequence(m, gamma, q, budget).holds);
}

TEST_CASE("paraconsistency: p, ~p do not entail q, with the exact witness") {
  Hyperalgebra m = m_s_ch2();
  Formula p = Formula::var("p"), q = Formula::var("q");
  std::vector<Formula> gamma = {p, Formula::negate(p)};
  Budget budget{default_budget()};
  DecideResult r = decide_consequence(m, gamma, q, budget);
  REQUIRE_FALSE(r.holds);
  const Valuation& v = *r.countermodel;
  CHECK(v.value_of(p) == 2);                   // (1,1)
  CHECK(v.value_of(Formula::negate(p)) == 2);  // (1,1)
  CHECK(v.value_of(q) == 0);                   // (0,1)
}

TEST_CASE("ce separates C_omega from C_omega+ over S(CH2), with the exact witness") {
  Hyperalgebra m = m_s_ch2();
  Formula p = Formula::var("p");
  Formula ce = Formula::imp(p, Formula::negate(Formula::negate(p)));
  Budget budget{default_budget()};
  DecideResult r = decide_consequence(m, {}, ce, budget);
  REQUIRE_FALSE(r.holds);
  const Valuation& v = *r.countermodel;
  CHECK(v.value_of(p) == 2);                                    // (1,1)
  CHECK(v.value_of(Formula::negate(p)) == 1);                   // (1,0)
  CHECK(v.value_of(Formula::negate(Formula::negate(p))) == 0);  // (0,1)
}

TEST_CASE("all ten C_omega schemas are valid over the fixture swaps") {
  for (Hyperalgebra m : {m_s_ch2(), m_s_ch3()}) {
    Budget budget{default_budget()};
    for (const AxiomSchema* schema : system_schemas(System::Cw))
      CHECK_MESSAGE(schema_valid(m, *schema, budget).valid, schema->name);
  }
}

TEST_CASE("PL is invalid over M(S(CH3)) with the exact witness") {
  Hyperalgebra m = m_s_ch3();
  Budget budget{default_budget()};
  SchemaVerdict v = schema_valid(m, *find_schema("PL"), budget);
  REQUIRE_FALSE(v.valid);
  // A = (a,1) (index 1), B = (0,1) (index 0).
  REQUIRE(v.witness.size() == 2);
  CHECK(v.witness[0].first == Formula::var("A"));
  CHECK(v.witness[0].second == 1);
  CHECK(v.witness[1].first == Formula::var("B"));
  CHECK(v.witness[1].second == 0);
}

TEST_CASE("ce is valid over the C_omega+ swap of CH2") {
  Hyperalgebra m = build_hyper_swap(fixtures::ch2(), Variant::CwPlus).algebra;
  Budget budget{default_budget()};
  CHECK(schema_valid(m, *find_schema("ce"), budget).valid);
  CHECK(schema_valid(m, *find_schema("cf"), budget).valid);
  CHECK(schema_valid(m, *find_schema("EM"), budget).valid);
}

TEST_CASE("mp_preserves on the fixture matrices") {
  CHECK(mp_preserves(m_s_ch2()));
  CHECK(mp_preserves(m_s_ch3()));
  Hyperalgebra point = fixtures::point();
  point.designated = ElemSet::of(1, {0});
  CHECK(mp_preserves(point));
}

TEST_CASE("schema_valid agrees with the assignment search on shared-subterm formulas") {
  // (p -> q) & (p -> q) shares a compound node, so the fast path must not
  // be used; cross-check the fallback against the brute-force oracle.
  Hyperalgebra m = m_s_ch2();
  Formula p = Formula::var("p"), q = Formula::var("q");
  Formula shared = Formula::conj(Formula::imp(p, q), Formula::imp(p, q));
  Budget b1{default_budget()}, b2{default_budget()};
  SchemaVerdict fast = schema_valid(m, shared, b1);
  DecideResult slow = oracle::brute_force_consequence(m, {}, shared, b2);
  CHECK(fast.valid == slow.holds);
}

TEST_CASE("bivaluation decisions for C_min") {
  Formula p = Formula::var("p"), q = Formula::var("q");
  Budget budget{default_budget()};

  CHECK(bival_decide({}, Formula::disj(p, Formula::imp(p, q)), budget).holds);
  CHECK(bival_decide({}, Formula::imp(Formula::negate(Formula::negate(p)), p), budget)
            .holds);
  CHECK(bival_decide({}, Formula::disj(p, Formula::negate(p)), budget).holds);

  std::vector<Formula> gamma = {p, Formula::negate(p)};
  BivalResult r = bival_decide(gamma, q, budget);
  REQUIRE_FALSE(r.holds);
  CHECK(r.countermodel->value_of(p) == 1);
  CHECK(r.countermodel->value_of(Formula::negate(p)) == 1);
  CHECK(r.countermodel->value_of(q) == 0);

  Formula ce = Formula::imp(p, Formula::negate(Formula::negate(p)));
  CHECK_FALSE(bival_decide({}, ce, budget).holds);
}

TEST_CASE("consequence is monotone in the premises") {
  std::mt19937 rng(31337);
  Hyperalgebra m = m_s_ch2();
  std::vector<Formula> vars = {Formula::var("p"), Formula::var("q")};
  for (int i = 0; i < 30; ++i) {
    Formula phi = oracle::random_formula(rng, vars, 2, true);
    Formula g1 = oracle::random_formula(rng, vars, 2, true);
    Formula g2 = oracle::random_formula(rng, vars, 2, true);
    Budget b1{default_budget()}, b2{default_budget()};
    std::vector<Formula> small = {g1};
    std::vector<Formula> large = {g1, g2};
    if (decide_consequence(m, small, phi, b1).holds)
      CHECK(decide_consequence(m, large, phi, b2).holds);
  }
}

TEST_CASE("deterministic matrices reduce to truth tables") {
  std::mt19937 rng(404);
  Hyperalgebra m = ch2_matrix();
  std::vector<Formula> vars = {Formula::var("p"), Formula::var("q")};
  for (int i = 0; i < 20; ++i) {
    Formula f = oracle::random_formula(rng, vars, 3, false);
    Budget budget{default_budget()};
    bool valid = decide_consequence(m, {}, f, budget).holds;
    bool tautology = true;
    for (int mask = 0; mask < 4; ++mask)
      tautology = tautology &&
                  oracle::classical_eval(
                      f, {{vars[0], (mask & 1) != 0}, {vars[1], (mask & 2) != 0}});
    CHECK(valid == tautology);
  }
}

TEST_CASE("decide_consequence agrees with the unpruned oracle") {
  std::mt19937 rng(777);
  std::vector<Hyperalgebra> matrices = {
      m_s_ch2(), m_s_ch3(),
      build_hyper_swap(fixtures::ch2(), Variant::CwPlus).algebra};
  std::vector<Formula> vars = {Formula::var("p"), Formula::var("q")};
  for (int i = 0; i < 15; ++i) {
    const Hyperalgebra& m = matrices[rng() % matrices.size()];
    Formula phi = oracle::random_formula(rng, vars, 3, true);
    std::vector<Formula> gamma;
    if (rng() % 2) gamma.push_back(oracle::random_formula(rng, vars, 2, true));
    Budget b1{default_budget()}, b2{default_budget()};
    DecideResult fast = decide_consequence(m, gamma, phi, b1);
    DecideResult slow = oracle::brute_force_consequence(m, gamma, phi, b2);
    REQUIRE(fast.holds == slow.holds);
    if (!fast.holds) CHECK(fast.countermodel->values == slow.countermodel->values);
  }
}

TEST_CASE("the branch budget is enforced and reported distinctly") {
  Hyperalgebra m = m_s_ch3();
  Formula p = Formula::var("p"), q = Formula::var("q"), r = Formula::var("r");
  Formula big = Formula::imp(Formula::conj(p, q), Formula::disj(q, r));
  Budget tiny{5};
  CHECK_THROWS_AS(decide_consequence(m, {}, big, tiny), budget_exhausted);
}

TEST_CASE("structures without designated sets are rejected") {
  Formula p = Formula::var("p");
  Budget budget{1000};
  CHECK_THROWS_AS(decide_consequence(fixtures::ch2(), {}, p, budget),
                  precondition_error);
}

TEST_CASE("negation-free matrices reject negated formulas") {
  Formula p = Formula::var("p");
  Budget budget{1000};
  CHECK_THROWS_AS(decide_consequence(ch2_matrix(), {}, Formula::negate(p), budget),
                  precondition_error);
}
