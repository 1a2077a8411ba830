#include <doctest.h>

#include "hyperkalman/dot.hpp"
#include "hyperkalman/errors.hpp"
#include "hyperkalman/fixtures.hpp"
#include "hyperkalman/json_io.hpp"

using namespace hyperkalman;

TEST_CASE("structures round-trip byte-identically") {
  SwapStructure s = build_hyper_swap(fixtures::ch3(), Variant::Cw);
  for (const Hyperalgebra& h : {fixtures::ch2(), fixtures::eq3(), s.algebra}) {
    json j = structure_to_json(h);
    Hyperalgebra reloaded = structure_from_json(j);
    CHECK(reloaded == h);
    CHECK(canonical_dump(structure_to_json(reloaded)) == canonical_dump(j));
  }
}

TEST_CASE("the snapshots annex survives a round trip") {
  SwapStructure s = build_hyper_swap(fixtures::ch2(), Variant::Cw);
  json j = swap_to_json(s);
  REQUIRE(j.contains("snapshots"));
  CHECK(j["snapshots"].size() == 3);
  Hyperalgebra reloaded = structure_from_json(j);
  CHECK(reloaded == s.algebra);
}

TEST_CASE("canonical files compute their tables on load") {
  json j;
  j["kind"] = "ihl";
  j["labels"] = {"0", "1"};
  j["leq"] = {{true, true}, {false, true}};
  j["canonical"] = true;
  CHECK(structure_from_json(j) == fixtures::ch2());
}

TEST_CASE("shape errors are specific") {
  json j;
  j["kind"] = "ihl";
  j["labels"] = {"0", "1"};
  j["leq"] = {{true, true}, {false, true}};
  CHECK_THROWS_AS(structure_from_json(j), shape_error);  // ops missing

  j["canonical"] = true;
  j["kind"] = "boolean";
  CHECK_THROWS_AS(structure_from_json(j), shape_error);  // unknown kind

  j["kind"] = "ihl";
  j["leq"] = {{true, true}, {true, true}};
  j["labels"] = {"x", "x"};
  CHECK_THROWS_AS(structure_from_json(j), shape_error);  // duplicate labels

  json bad = structure_to_json(fixtures::ch2());
  bad["ops"]["imp"][0][0] = json::array();
  CHECK_THROWS_AS(structure_from_json(bad), shape_error);  // empty cell

  bad = structure_to_json(fixtures::ch2());
  bad["leq"][1][0] = true;
  bad["leq"][0][1] = false;
  bad["leq"][1][1] = false;
  CHECK_THROWS_AS(structure_from_json(bad), shape_error);  // not reflexive
}

TEST_CASE("digests separate structures and pin morphisms") {
  std::string d2 = structure_digest(fixtures::ch2());
  std::string d3 = structure_digest(fixtures::ch3());
  CHECK(d2.size() == 16);
  CHECK(d2 != d3);
  CHECK(d2 == structure_digest(structure_from_json(structure_to_json(fixtures::ch2()))));

  Morphism collapse{fixtures::ch3(), fixtures::ch2(), {0, 1, 1}, MorphKind::IHL};
  json j = morphism_to_json(collapse);
  Morphism reloaded = morphism_from_json(j, fixtures::ch3(), fixtures::ch2());
  CHECK(reloaded == collapse);
  CHECK_THROWS_AS(morphism_from_json(j, fixtures::ch2(), fixtures::ch2()),
                  shape_error);
}

TEST_CASE("quotient serialization carries structure and projection") {
  SwapStructure s = build_hyper_swap(fixtures::ch2(), Variant::Cw);
  QuotientResult q = quotient(s.algebra);
  json j = quotient_to_json(q);
  CHECK(j["projection"] == json({0, 1, 1}));
  CHECK(structure_from_json(j["quotient"]) == q.quotient);
}

TEST_CASE("proof files round-trip") {
  Proof proof;
  proof.lines.push_back({parse_formula("p0 | ~p0"), "EM", {}});
  proof.lines.push_back({parse_formula("p0"), "HYP", {}});
  std::vector<Formula> hyps = {parse_formula("p0")};
  json j = proof_to_json(proof, hyps);
  Proof reloaded = proof_from_json(j);
  REQUIRE(reloaded.lines.size() == 2);
  CHECK(reloaded.lines[0].formula == proof.lines[0].formula);
  CHECK(reloaded.lines[0].rule == "EM");
  CHECK(proof_hypotheses_from_json(j) == hyps);
}

TEST_CASE("battery parsing") {
  auto entries = parse_battery(
      "# comment\n"
      "p0 | ~p0 @ cw\n"
      "p0 | (p0 -> p1) @ cmin\n"
      "\n"
      "q @ none\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].system == System::Cw);
  CHECK(entries[1].system == System::Cmin);
  CHECK_FALSE(entries[2].system.has_value());
  CHECK_THROWS_AS(parse_battery("p0 | ~p0\n"), shape_error);
  CHECK_THROWS_AS(parse_battery("p0 @ classical\n"), shape_error);
}

TEST_CASE("DOT export stacks similarity classes and reduces transitively") {
  std::string dot = export_dot(fixtures::eq3().proset);
  CHECK(dot ==
        "digraph proset {\n"
        "  rankdir=BT;\n"
        "  node [shape=box];\n"
        "  c0 [label=\"x\\nx'\"];\n"
        "  c1 [label=\"t\"];\n"
        "  c0 -> c1;\n"
        "}\n");
  // The chain 0 < a < 1 keeps only the covering edges.
  std::string ch3 = export_dot(fixtures::ch3().proset);
  CHECK(ch3.find("c0 -> c1;") != std::string::npos);
  CHECK(ch3.find("c1 -> c2;") != std::string::npos);
  CHECK(ch3.find("c0 -> c2;") == std::string::npos);
}
