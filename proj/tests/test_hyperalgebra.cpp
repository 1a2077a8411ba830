#include <doctest.h>

#include <random>

#include "hyperkalman/enumerate.hpp"
#include "hyperkalman/fixtures.hpp"

using namespace hyperkalman;

TEST_CASE("canonical fixtures verify as IHLs") {
  for (const Hyperalgebra& h : {fixtures::ch2(), fixtures::ch3(), fixtures::eq3(),
                                fixtures::point()}) {
    Report r = verify_ihl(h);
    CHECK(r.ok());
  }
}

TEST_CASE("an altered implication cell is caught as an I1 violation") {
  Hyperalgebra h = fixtures::ch2();
  h.imp[1][0] = ElemSet::of(2, {1});
  Report r = verify_ihl(h);
  CHECK_FALSE(r.ok());
  const Check* i1 = r.find("I1");
  REQUIRE(i1 != nullptr);
  CHECK_FALSE(i1->passed);
  CHECK(i1->witness == "(1,0,1)");
  // The table comparison flags the same cell.
  CHECK_FALSE(r.find("imp-canonical")->passed);
  // I2 and I3 are untouched by this mutation.
  CHECK(r.find("I2")->passed);
  CHECK(r.find("I3")->passed);
}

TEST_CASE("verify_cihl: Peirce holds on CH2 and EQ3 but fails on CH3") {
  CHECK(verify_cihl(fixtures::ch2()).ok());
  CHECK(verify_cihl(fixtures::eq3()).ok());
  Report r = verify_cihl(fixtures::ch3());
  CHECK_FALSE(r.ok());
  CHECK(r.find("I4")->witness == "(a,0)");
}

TEST_CASE("verify_hl accepts canonical meet/join tables") {
  Hyperalgebra h = canonical_hyperalgebra(fixtures::ch3().proset, Kind::HL);
  CHECK(verify_hl(h).ok());
  h.join[0][1] = ElemSet::of(3, {0});
  CHECK_FALSE(verify_hl(h).ok());
}

TEST_CASE("verify_ihl passes exactly for the canonical construction") {
  std::mt19937 rng(99);
  for (int n = 1; n <= 3; ++n)
    for (const Hyperalgebra& h : enumerate_structures(Kind::IHL, n)) {
      CHECK(verify_ihl(h).ok());
      // Any cell mutation that changes the table must be rejected.
      Hyperalgebra mutant = h;
      int x = static_cast<int>(rng() % n), y = static_cast<int>(rng() % n);
      ElemSet cell = mutant.imp[x][y];
      int flip = static_cast<int>(rng() % n);
      if (cell.contains(flip) && cell.size() == 1) flip = (flip + 1) % n;
      if (cell.contains(flip))
        cell.erase(flip);
      else
        cell.insert(flip);
      if (cell.empty() || cell == mutant.imp[x][y]) continue;
      mutant.imp[x][y] = cell;
      CHECK_FALSE(verify_ihl(mutant).ok());
    }
}

TEST_CASE("kind names round-trip") {
  for (Kind k : {Kind::Proset, Kind::HL, Kind::IHL, Kind::CIHL, Kind::HCw,
                 Kind::HCmin, Kind::HCwPlus})
    CHECK(kind_from_name(kind_name(k)) == k);
  CHECK_FALSE(kind_from_name("boolean").has_value());
}
