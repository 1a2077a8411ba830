#include <doctest.h>

#include "hyperkalman/errors.hpp"
#include "hyperkalman/fixtures.hpp"
#include "hyperkalman/swap.hpp"
#include "support/oracles.hpp"

using namespace hyperkalman;

namespace {

Hyperalgebra one_element_hcw() {
  Hyperalgebra h = fixtures::point();
  h.neg = NegTable{ElemSet::of(1, {0})};
  h.kind = Kind::HCw;
  return h;
}

}  // namespace

TEST_CASE("verify_hcw accepts swap structures and the one-element algebra") {
  CHECK(verify_hcw(build_hyper_swap(fixtures::ch2(), Variant::Cw).algebra).ok());
  CHECK(verify_hcw(one_element_hcw()).ok());
}

TEST_CASE("identity negation on CH2 breaks H1 at the bottom element") {
  Hyperalgebra h = fixtures::ch2();
  h.neg = NegTable{ElemSet::of(2, {0}), ElemSet::of(2, {1})};
  h.kind = Kind::HCw;
  Report r = verify_hcw(h);
  CHECK_FALSE(r.ok());
  const Check* h1 = r.find("H1");
  REQUIRE(h1 != nullptr);
  CHECK_FALSE(h1->passed);
  CHECK(h1->witness == "(0,0,0)");  // 0 ⋎ ÷0 = {0}, not the top
}

TEST_CASE("missing negation table is reported") {
  Report r = verify_hcw(fixtures::ch2());
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.find("neg-table")->passed);
}

TEST_CASE("verify_hcmin passes on S(CH2) and fails on S(CH3) via Peirce") {
  CHECK(verify_hcmin(build_hyper_swap(fixtures::ch2(), Variant::Cmin).algebra).ok());
  SwapStructure s3 = build_hyper_swap(fixtures::ch3(), Variant::Cw);
  Report r = verify_hcmin(s3.algebra);
  CHECK_FALSE(r.ok());
  const Check* i4 = r.find("I4");
  REQUIRE(i4 != nullptr);
  CHECK_FALSE(i4->passed);
  CHECK(i4->witness == "((a,1),(0,1))");
  CHECK(verify_hcmin(one_element_hcw()).ok());
}

TEST_CASE("verify_hcwplus separates the deterministic and relaxed negations") {
  CHECK(verify_hcwplus(build_hyper_swap(fixtures::ch2(), Variant::CwPlus).algebra).ok());
  SwapStructure s = build_hyper_swap(fixtures::ch2(), Variant::Cw);
  Report r = verify_hcwplus(s.algebra);
  CHECK_FALSE(r.ok());
  const Check* h3 = r.find("H3");
  REQUIRE(h3 != nullptr);
  CHECK(h3->witness == "((1,1),(1,0),(0,1))");  // ÷÷(1,1) reaches (0,1) ≢ (1,1)
  CHECK(verify_hcwplus(one_element_hcw()).ok());
}

TEST_CASE("sim relation on S(CH2)") {
  SwapStructure s = build_hyper_swap(fixtures::ch2(), Variant::Cw);
  SimRelation rel = sim_relation(s.algebra);
  REQUIRE(rel.is_equivalence);
  REQUIRE(rel.classes.size() == 2);
  CHECK(rel.classes[0] == std::vector<int>{0});     // {(0,1)}
  CHECK(rel.classes[1] == std::vector<int>{1, 2});  // {(1,0),(1,1)}
}

TEST_CASE("on swap structures, ~ is exactly first-coordinate equality") {
  for (const Hyperalgebra& base : hyperkalman::testing::ihl_corpus(3)) {
    SwapStructure s = build_hyper_swap(base, Variant::Cw);
    SimRelation rel = sim_relation(s.algebra);
    REQUIRE(rel.is_equivalence);
    for (std::size_t i = 0; i < s.snapshots.size(); ++i)
      for (std::size_t j = 0; j < s.snapshots.size(); ++j)
        CHECK(rel.related(static_cast<int>(i), static_cast<int>(j)) ==
              (s.snapshots[i].z1 == s.snapshots[j].z1));
  }
}

TEST_CASE("sim relation of the one-element algebra has one class") {
  SimRelation rel = sim_relation(one_element_hcw());
  REQUIRE(rel.is_equivalence);
  CHECK(rel.classes.size() == 1);
}

TEST_CASE("swap structures are enriched, and ~ refines similarity") {
  for (const Hyperalgebra& base : hyperkalman::testing::ihl_corpus(3)) {
    SwapStructure s = build_hyper_swap(base, Variant::Cw);
    CHECK(verify_enriched(s.algebra, Variant::Cw).ok());
    SimRelation rel = sim_relation(s.algebra);
    for (int x = 0; x < s.algebra.size(); ++x)
      for (int y = 0; y < s.algebra.size(); ++y)
        if (rel.related(x, y)) CHECK(s.algebra.proset.sim(x, y));
  }
}

TEST_CASE("shrinking ÷(1,1) of S(CH2) to a singleton breaks enrichment at E3") {
  SwapStructure s = build_hyper_swap(fixtures::ch2(), Variant::Cw);
  Hyperalgebra mutant = s.algebra;
  (*mutant.neg)[2] = ElemSet::of(3, {2});  // ÷(1,1) := {(1,1)}
  Report r = verify_enriched(mutant, Variant::Cw);
  CHECK_FALSE(r.ok());
  // H1/H2 and E0-E2, E4 all survive this mutation; the witness structure
  // is exactly the C_omega+ swap negation, which loses E3.
  const Check* failure = r.first_failure();
  REQUIRE(failure != nullptr);
  CHECK(failure->name == "E3");
}

TEST_CASE("verify_enriched on the one-element algebra") {
  CHECK(verify_enriched(one_element_hcw(), Variant::Cw).ok());
}

TEST_CASE("quotient of S(CH2) is the two-element chain") {
  SwapStructure s = build_hyper_swap(fixtures::ch2(), Variant::Cw);
  QuotientResult q = quotient(s.algebra);
  REQUIRE(q.quotient.size() == 2);
  CHECK(q.projection == std::vector<int>{0, 1, 1});
  CHECK(q.quotient.proset.leq(0, 1));
  CHECK_FALSE(q.quotient.proset.leq(1, 0));
  CHECK(verify_ihl(q.quotient).ok());
}

TEST_CASE("quotient of S(CH3) reproduces the three-element chain order") {
  SwapStructure s = build_hyper_swap(fixtures::ch3(), Variant::Cw);
  QuotientResult q = quotient(s.algebra);
  REQUIRE(q.quotient.size() == 3);
  // Classes are keyed by first coordinate: (0,1) | (a,1) | (1,0),(1,a),(1,1).
  CHECK(q.projection == std::vector<int>{0, 1, 2, 2, 2});
  const Proset& ch3 = fixtures::ch3().proset;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      CHECK(q.quotient.proset.leq(x, y) == ch3.leq(x, y));
}

TEST_CASE("quotient of the one-element algebra") {
  QuotientResult q = quotient(one_element_hcw());
  CHECK(q.quotient.size() == 1);
  CHECK(verify_ihl(q.quotient).ok());
}

TEST_CASE("quotient refuses non-enriched inputs") {
  SwapStructure s = build_hyper_swap(fixtures::ch2(), Variant::CwPlus);
  CHECK_THROWS_AS(quotient(s.algebra, Variant::CwPlus), precondition_error);
}
