#include <doctest.h>

#include <random>

#include "hyperkalman/enumerate.hpp"
#include "hyperkalman/errors.hpp"
#include "hyperkalman/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hyperkalman;

namespace {

Proset ch2() { return Proset::chain({"0", "1"}); }
Proset ch3() { return Proset::chain({"0", "a", "1"}); }
Proset eq3() { return fixtures::eq3().proset; }  // x ≡ x' ⪯ t

ElemSet set(const Proset& p, std::initializer_list<int> xs) {
  return ElemSet::of(p.size(), xs);
}

}  // namespace

TEST_CASE("construction rejects non-preorders") {
  CHECK_THROWS_AS(Proset({"x", "y"}, {{false, true}, {false, true}}), shape_error);
  CHECK_THROWS_AS(Proset({"x", "y", "z"}, {{true, true, false},
                                           {false, true, true},
                                           {false, false, true}}),
                  shape_error);
  CHECK_THROWS_AS(Proset({"x", "x"}, {{true, true}, {true, true}}), shape_error);
}

TEST_CASE("minima and maxima") {
  Proset p2 = ch2(), p3 = ch3(), q = eq3();
  CHECK(p2.minima(set(p2, {0, 1})) == set(p2, {0}));
  CHECK(p2.minima(ElemSet(2)) == ElemSet(2));
  CHECK(q.minima(set(q, {0, 1, 2})) == set(q, {0, 1}));
  CHECK(p3.maxima(set(p3, {0, 1, 2})) == set(p3, {2}));
  CHECK(q.maxima(ElemSet(3)) == ElemSet(3));
  CHECK(q.maxima(set(q, {0, 1})) == set(q, {0, 1}));
}

TEST_CASE("upper and lower bounds") {
  Proset p2 = ch2(), q = eq3();
  CHECK(p2.upper_bounds(set(p2, {0})) == set(p2, {0, 1}));
  CHECK(p2.upper_bounds(ElemSet(2)) == ElemSet::full(2));
  CHECK(q.lower_bounds(ElemSet(3)) == ElemSet::full(3));
  CHECK(q.upper_bounds(set(q, {0, 1})) == set(q, {0, 1, 2}));
}

TEST_CASE("set_precedes") {
  Proset p3 = ch3(), q = eq3();
  CHECK(p3.set_precedes(set(p3, {0}), set(p3, {1, 2})));
  CHECK(p3.set_precedes(ElemSet(3), set(p3, {0})));
  CHECK(p3.set_precedes(set(p3, {0}), ElemSet(3)));
  CHECK(q.set_precedes(set(q, {0}), set(q, {1})));  // x ≡ x'
  CHECK_FALSE(p3.set_precedes(set(p3, {2}), set(p3, {0})));
}

TEST_CASE("stability") {
  Proset p2 = ch2(), q = eq3();
  CHECK_FALSE(p2.is_stable(set(p2, {0, 1})));
  CHECK(q.is_stable(set(q, {0, 1})));
  CHECK(q.is_stable(set(q, {2})));
  CHECK_THROWS_AS(p2.is_stable(ElemSet(2)), precondition_error);
}

TEST_CASE("infimoid and supremoid") {
  Proset p2 = ch2(), p3 = ch3(), q = eq3();
  CHECK(q.supremoid(0, 1) == set(q, {0, 1}));
  CHECK(p3.infimoid(1, 2) == set(p3, {1}));
  CHECK(p2.infimoid(0, 1) == set(p2, {0}));
}

TEST_CASE("hyperlattice detection") {
  CHECK(ch2().is_hyperlattice());
  CHECK(eq3().is_hyperlattice());
  Proset antichain({"x", "y"}, {{true, false}, {false, true}});
  std::pair<int, int> witness{-1, -1};
  CHECK_FALSE(antichain.is_hyperlattice(&witness));
  CHECK(witness == std::pair<int, int>{0, 1});
}

TEST_CASE("relative sets and canonical implication") {
  Proset p2 = ch2(), p3 = ch3(), q = eq3();
  CHECK(p3.relative_set(1, 0) == set(p3, {0}));
  CHECK(p2.relative_set(0, 1) == set(p2, {0, 1}));
  CHECK(q.relative_set(2, 0) == set(q, {0, 1}));
  CHECK(p3.canonical_implication(1, 0) == set(p3, {0}));
  CHECK(p3.canonical_implication(0, 0) == set(p3, {2}));
  CHECK(q.canonical_implication(2, 0) == set(q, {0, 1}));
}

TEST_CASE("top and bottom") {
  Proset p3 = ch3(), q = eq3();
  CHECK(p3.top_set() == set(p3, {2}));
  CHECK(q.top_set() == set(q, {2}));
  CHECK(q.bottom_set() == set(q, {0, 1}));
}

TEST_CASE("similarity classes") {
  Proset q = eq3();
  auto classes = q.similarity_classes();
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<int>{0, 1});
  CHECK(classes[1] == std::vector<int>{2});
}

namespace {

ElemSet random_stable_set(std::mt19937& rng, const Proset& p) {
  // Pick a similarity class and a nonempty subset of it.
  auto classes = p.similarity_classes();
  const auto& cls = classes[rng() % classes.size()];
  ElemSet out(p.size());
  out.insert(cls[rng() % cls.size()]);
  for (int x : cls)
    if (rng() % 2) out.insert(x);
  return out;
}

ElemSet lift(const Proset& p, const ElemSet& a, const ElemSet& b, bool meet) {
  ElemSet out(p.size());
  for (int x : a.members())
    for (int y : b.members()) out |= meet ? p.infimoid(x, y) : p.supremoid(x, y);
  return out;
}

}  // namespace

TEST_CASE("stable sets are closed under pointwise meet/join lifts") {
  std::mt19937 rng(20240811);
  for (int n = 1; n <= 3; ++n) {
    for (const Proset& p : enumerate_prosets(n)) {
      if (!p.is_hyperlattice()) continue;
      for (int trial = 0; trial < 8; ++trial) {
        ElemSet a = random_stable_set(rng, p);
        ElemSet b = random_stable_set(rng, p);
        ElemSet c = random_stable_set(rng, p);
        for (bool meet : {true, false}) {
          ElemSet lifted = lift(p, a, b, meet);
          CHECK(p.is_stable(lifted));
          // A # B equals a # b for any representatives.
          for (int x : a.members())
            for (int y : b.members())
              CHECK(lifted == (meet ? p.infimoid(x, y) : p.supremoid(x, y)));
          // Associativity on representatives.
          ElemSet left = lift(p, lift(p, a, b, meet), c, meet);
          ElemSet right = lift(p, a, lift(p, b, c, meet), meet);
          CHECK(left == right);
          int ra = a.least(), rb = b.least(), rc = c.least();
          ElemSet rep_left =
              lift(p, meet ? p.infimoid(ra, rb) : p.supremoid(ra, rb),
                   ElemSet::of(p.size(), {rc}), meet);
          CHECK(left == rep_left);
        }
      }
    }
  }
}

TEST_CASE("infimoid, supremoid and canonical implication outputs are stable") {
  for (int n = 1; n <= 3; ++n)
    for (const Proset& p : enumerate_prosets(n)) {
      if (!p.is_hyperlattice()) continue;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          CHECK(p.is_stable(p.infimoid(x, y)));
          CHECK(p.is_stable(p.supremoid(x, y)));
          ElemSet imp = p.canonical_implication(x, y);
          if (!imp.empty()) CHECK(p.is_stable(imp));
        }
    }
}

TEST_CASE("in an IHL, A precedes B iff A ⊸ B is the top") {
  std::mt19937 rng(7);
  for (const Hyperalgebra& h : hyperkalman::testing::ihl_corpus(3)) {
    const Proset& p = h.proset;
    ElemSet top = p.top_set();
    for (int trial = 0; trial < 8; ++trial) {
      ElemSet a = random_stable_set(rng, p);
      ElemSet b = random_stable_set(rng, p);
      ElemSet imp = h.imp_cell(a.least(), b.least());
      CHECK(p.set_precedes(a, b) == (imp == top));
    }
  }
}

TEST_CASE("canonical implication matches the classical residual on partial orders") {
  for (int n = 1; n <= 4; ++n)
    for (const Hyperalgebra& h : enumerate_structures(Kind::IHL, n)) {
      if (!h.proset.antisymmetric()) continue;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          auto residual = hyperkalman::testing::classical_residual(h.proset, x, y);
          REQUIRE(residual.has_value());
          CHECK(h.imp_cell(x, y) == ElemSet::of(n, {*residual}));
        }
    }
}
