#include <doctest.h>

#include <random>

#include "hyperkalman/errors.hpp"
#include "hyperkalman/fixtures.hpp"
#include "hyperkalman/godel.hpp"
#include "hyperkalman/swap.hpp"
#include "support/oracles.hpp"

using namespace hyperkalman;

TEST_CASE("the piecewise operator tables") {
  GodelMatrix m(8);
  CHECK(m.apply_or(3, 5) == 3);
  CHECK(m.apply_imp(7, 2) == 0);
  CHECK(m.apply_imp(2, 7) == 7);
  CHECK(m.apply_and(3, 5) == 5);
  CHECK(m.apply_neg(1) == 2);
  CHECK(m.apply_neg(0) == 0);
  CHECK(m.apply_neg(5) == 1);
  CHECK_THROWS_AS(m.apply_neg(9), precondition_error);
  CHECK_THROWS_AS(GodelMatrix(1), precondition_error);
}

TEST_CASE("v(G_n) = 2 under v(p_i) = i") {
  for (int n = 1; n <= 8; ++n) {
    GodelMatrix m(n + 1);
    std::map<Formula, int> v;
    for (int i = 1; i <= n + 1; ++i)
      v.emplace(Formula::var("p" + std::to_string(i)), i);
    CHECK(m.eval(gn_formula(n), v) == 2);
  }
}

TEST_CASE("excluded middle evaluates into {0,1} for every element") {
  GodelMatrix m(8);
  Formula p = Formula::var("p");
  Formula em = Formula::disj(p, Formula::negate(p));
  for (int k = 0; k <= 8; ++k) {
    std::map<Formula, int> v = {{p, k}};
    int value = m.eval(em, v);
    CHECK(m.designated(value));
  }
}

TEST_CASE("evaluation is truncation independent") {
  std::mt19937 rng(5150);
  std::vector<Formula> vars = {Formula::var("p"), Formula::var("q")};
  for (int i = 0; i < 100; ++i) {
    Formula f = hyperkalman::testing::random_formula(rng, vars, 4, true);
    int a = static_cast<int>(rng() % 7), b = static_cast<int>(rng() % 7);
    std::map<Formula, int> v = {{vars[0], a}, {vars[1], b}};
    GodelMatrix small(7), large(12);
    CHECK(small.eval(f, v) == large.eval(f, v));
  }
}

TEST_CASE("bound violations are reported") {
  GodelMatrix m(4);
  std::map<Formula, int> v = {{Formula::var("p"), 5}};
  CHECK_THROWS_AS(m.eval(Formula::var("p"), v), precondition_error);
}

TEST_CASE("the audit validates EM and ce and the positive axioms at bound 8") {
  auto audits = godel_audit_axioms(8, System::CwPlus);
  for (const GodelAxiomAudit& a : audits) {
    if (a.schema == "cf") continue;
    CHECK_MESSAGE(a.valid, a.schema);
  }
}

TEST_CASE("the audit refutes cf with the least witness 3") {
  // Hand evaluation: ¬3 = 1, ¬¬3 = 2, 2 -> 3 = 3, undesignated. This
  // contradicts the paper's claim that M_G models C_omega+; the audit
  // decides it empirically and must surface exactly this witness.
  auto audits = godel_audit_axioms(8, System::CwPlus);
  const GodelAxiomAudit* cf = nullptr;
  for (const GodelAxiomAudit& a : audits)
    if (a.schema == "cf") cf = &a;
  REQUIRE(cf != nullptr);
  CHECK_FALSE(cf->valid);
  REQUIRE(cf->witness.size() == 1);
  CHECK(cf->witness[0].first == "A");
  CHECK(cf->witness[0].second == 3);
  CHECK(cf->value == 3);
}

TEST_CASE("paraconsistency witness: 0 and ¬0 are both designated") {
  GodelMatrix m(2);
  CHECK(m.designated(0));
  CHECK(m.designated(m.apply_neg(0)));
}

TEST_CASE("MP preservation in truncations up to 16") {
  for (int bound = 2; bound <= 16; ++bound) CHECK(godel_mp_preserves(bound));
}

TEST_CASE("pigeonhole check on the C_omega+ swap of CH2") {
  Hyperalgebra m = build_hyper_swap(fixtures::ch2(), Variant::CwPlus).algebra;
  Budget budget{default_budget()};
  Report r = pigeonhole_check(m, true, budget);
  CHECK(r.ok());
  CHECK(r.find("G_3") != nullptr);
}

TEST_CASE("pigeonhole check on the one-element matrix") {
  Hyperalgebra point = fixtures::point();
  point.neg = NegTable{ElemSet::of(1, {0})};
  point.designated = ElemSet::of(1, {0});
  Budget budget{default_budget()};
  Report r = pigeonhole_check(point, true, budget);
  CHECK(r.ok());
  CHECK(r.find("G_1") != nullptr);
}

TEST_CASE("G_n stays undesignated in the truncation for n up to 8") {
  for (int n = 1; n <= 8; ++n) {
    GodelMatrix m(n + 1);
    std::map<Formula, int> v;
    for (int i = 1; i <= n + 1; ++i)
      v.emplace(Formula::var("p" + std::to_string(i)), i);
    CHECK_FALSE(m.designated(m.eval(gn_formula(n), v)));
  }
}
