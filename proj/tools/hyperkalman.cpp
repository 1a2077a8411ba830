#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperkalman/dot.hpp"
#include "hyperkalman/enumerate.hpp"
#include "hyperkalman/errors.hpp"
#include "hyperkalman/fixtures.hpp"
#include "hyperkalman/functors.hpp"
#include "hyperkalman/godel.hpp"
#include "hyperkalman/json_io.hpp"
#include "hyperkalman/semantics.hpp"

namespace hk = hyperkalman;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void print_report(const hk::Report& report, bool as_json) {
  if (as_json)
    std::cout << hk::canonical_dump(hk::report_to_json(report));
  else
    std::cout << report.to_text();
}

int report_exit(const hk::Report& report) {
  return report.ok() ? kExitOk : kExitCheckFailed;
}

std::vector<hk::Formula> split_formulas(const std::string& text) {
  std::vector<hk::Formula> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    std::string part = text.substr(
        start, semi == std::string::npos ? std::string::npos : semi - start);
    std::size_t a = part.find_first_not_of(" \t");
    if (a != std::string::npos) {
      std::size_t b = part.find_last_not_of(" \t");
      out.push_back(hk::parse_formula(part.substr(a, b - a + 1)));
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

hk::Report verify_for_kind(const hk::Hyperalgebra& h, const std::string& kind) {
  if (kind == "proset") {
    hk::Report r;
    r.add_pass("preorder", "reflexive and transitive");
    return r;
  }
  if (kind == "hl") return hk::verify_hl(h);
  if (kind == "ihl") return hk::verify_ihl(h);
  if (kind == "cihl") {
    hk::Report r = hk::verify_ihl(h);
    r.append(hk::verify_cihl(h));
    return r;
  }
  if (kind == "hcw") return hk::verify_hcw(h);
  if (kind == "hcmin") return hk::verify_hcmin(h);
  if (kind == "hcw+") return hk::verify_hcwplus(h);
  if (kind == "ehcw") return hk::verify_enriched(h, hk::Variant::Cw);
  if (kind == "ehcmin") return hk::verify_enriched(h, hk::Variant::Cmin);
  if (kind == "ehcw+") return hk::verify_enriched(h, hk::Variant::CwPlus);
  throw hk::precondition_error("unknown verification kind \"" + kind + "\"");
}

hk::Variant variant_for_kind(hk::Kind kind) {
  switch (kind) {
    case hk::Kind::HCmin: return hk::Variant::Cmin;
    case hk::Kind::HCwPlus: return hk::Variant::CwPlus;
    default: return hk::Variant::Cw;
  }
}

int cmd_verify(const std::string& file, std::string kind, bool as_json) {
  hk::Hyperalgebra h = hk::structure_from_json(hk::load_json_file(file));
  if (kind.empty()) kind = hk::kind_name(h.kind);
  hk::Report report = verify_for_kind(h, kind);
  print_report(report, as_json);
  return report_exit(report);
}

int cmd_build_swap(const std::string& file, const std::string& variant_name,
                   const std::string& out) {
  auto variant = hk::variant_from_name(variant_name);
  if (!variant) throw hk::precondition_error("unknown variant " + variant_name);
  hk::Hyperalgebra base = hk::structure_from_json(hk::load_json_file(file));
  try {
    hk::SwapStructure s = hk::build_hyper_swap(base, *variant);
    hk::json j = hk::swap_to_json(s);
    if (!out.empty())
      hk::save_json_file(out, j);
    else
      std::cout << hk::canonical_dump(j);
    std::cerr << s.snapshots.size() << " snapshots, "
              << s.algebra.designated->size() << " designated\n";
    return kExitOk;
  } catch (const hk::precondition_error& e) {
    std::cout << "build failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

int cmd_quotient(const std::string& file, const std::string& out, bool as_json) {
  hk::Hyperalgebra h = hk::structure_from_json(hk::load_json_file(file));
  hk::Variant variant = variant_for_kind(h.kind);
  hk::Report enriched = hk::verify_enriched(h, variant);
  if (!enriched.ok()) {
    print_report(enriched, as_json);
    return kExitCheckFailed;
  }
  hk::QuotientResult q = hk::quotient(h, variant);
  hk::json j = hk::quotient_to_json(q);
  if (!out.empty())
    hk::save_json_file(out, j);
  else
    std::cout << hk::canonical_dump(j);
  std::cerr << q.quotient.size() << " classes\n";
  return kExitOk;
}

int cmd_equiv(const std::string& file, bool as_json) {
  hk::Hyperalgebra h = hk::structure_from_json(hk::load_json_file(file));
  hk::Report report;

  if (h.kind == hk::Kind::IHL || h.kind == hk::Kind::CIHL) {
    hk::Report input = hk::verify_ihl(h);
    report.append(input, "input-");
    if (!input.ok()) {
      print_report(report, as_json);
      return kExitCheckFailed;
    }
    hk::SwapStructure s = hk::build_hyper_swap(h, hk::Variant::Cw);
    report.add_pass("build-swap", std::to_string(s.snapshots.size()) + " snapshots");
    hk::Report enriched = hk::verify_enriched(s.algebra, hk::Variant::Cw);
    report.append(enriched, "swap-");
    if (!enriched.ok()) {
      print_report(report, as_json);
      return kExitCheckFailed;
    }
    hk::QuotientResult q = hk::quotient(s.algebra, hk::Variant::Cw);
    report.add_pass("quotient", std::to_string(q.quotient.size()) + " classes");
    hk::Morphism iso = hk::phi(h, hk::Variant::Cw);
    report.append(hk::verify_isomorphism(iso), "phi-");
  } else if (hk::kind_has_neg(h.kind)) {
    hk::Variant variant = variant_for_kind(h.kind);
    hk::Report enriched = hk::verify_enriched(h, variant);
    report.append(enriched, "input-");
    if (!enriched.ok()) {
      print_report(report, as_json);
      return kExitCheckFailed;
    }
    hk::QuotientResult q = hk::quotient(h, variant);
    report.add_pass("quotient", std::to_string(q.quotient.size()) + " classes");
    hk::Morphism iso = hk::psi(h, variant);
    report.add_pass("build-swap",
                    std::to_string(iso.target.size()) + " snapshots of S(U(A))");
    report.append(hk::verify_isomorphism(iso), "psi-");
  } else {
    throw hk::precondition_error(
        "equiv expects an IHL/CIHL (phi route) or a negation-bearing algebra "
        "(psi route)");
  }
  print_report(report, as_json);
  return report_exit(report);
}

int cmd_decide(const std::string& file, const std::string& gamma_text,
               const std::string& phi_text, std::uint64_t budget_limit) {
  hk::Hyperalgebra m = hk::structure_from_json(hk::load_json_file(file));
  if (!m.designated)
    throw hk::precondition_error("structure has no designated set");
  std::vector<hk::Formula> gamma = split_formulas(gamma_text);
  hk::Formula phi = hk::parse_formula(phi_text);
  hk::Budget budget{budget_limit};
  hk::DecideResult r = hk::decide_consequence(m, gamma, phi, budget);
  if (r.holds) {
    std::cout << "holds (" << budget.used << " branches)\n";
    return kExitOk;
  }
  std::cout << "fails: " << r.countermodel->render(m.proset) << "\n";
  return kExitCheckFailed;
}

int cmd_prove(const std::string& file, const std::string& system_name,
              bool as_json) {
  auto system = hk::system_from_name(system_name);
  if (!system) throw hk::precondition_error("unknown system " + system_name);
  hk::json j = hk::load_json_file(file);
  hk::Proof proof = hk::proof_from_json(j);
  std::vector<hk::Formula> hyps = hk::proof_hypotheses_from_json(j);
  hk::Report report = hk::check_proof(proof, *system, hyps);
  print_report(report, as_json);
  return report_exit(report);
}

int cmd_godel(int bound, int gn, const std::string& system_name,
              const std::string& out) {
  auto system = hk::system_from_name(system_name);
  if (!system) throw hk::precondition_error("unknown system " + system_name);
  hk::json j;
  j["bound"] = bound;
  j["system"] = hk::system_name(*system);
  j["note"] =
      "validity verdicts are for the bound-" + std::to_string(bound) +
      " truncation; invalidity witnesses are conclusive for M_G itself";
  hk::json axioms = hk::json::array();
  for (const hk::GodelAxiomAudit& audit : hk::godel_audit_axioms(bound, *system)) {
    hk::json a;
    a["schema"] = audit.schema;
    a["valid"] = audit.valid;
    if (!audit.valid) {
      hk::json w;
      for (auto& [name, value] : audit.witness) w[name] = value;
      a["witness"] = w;
      a["value"] = audit.value;
    }
    axioms.push_back(a);
  }
  j["axioms"] = axioms;
  std::string mp_witness;
  j["mp_preserves"] = hk::godel_mp_preserves(bound, &mp_witness);
  hk::json table = hk::json::array();
  for (int n = 1; n <= gn; ++n) {
    // The G_n table uses v(p_i) = i, which needs a bound of at least n+1;
    // truncation exactness makes the evaluation bound immaterial.
    hk::GodelMatrix m(std::max(bound, n + 1));
    std::map<hk::Formula, int> v;
    for (int i = 1; i <= n + 1; ++i)
      v.emplace(hk::Formula::var("p" + std::to_string(i)), i);
    table.push_back(
        hk::json{{"n", n}, {"value", m.eval(hk::gn_formula(n), v)}});
  }
  j["gn"] = table;
  if (!out.empty())
    hk::save_json_file(out, j);
  else
    std::cout << hk::canonical_dump(j);
  return kExitOk;
}

int cmd_enumerate(const std::string& kind_name, int size, const std::string& out,
                  bool dedup, int max_size) {
  auto kind = hk::kind_from_name(kind_name);
  if (!kind) throw hk::precondition_error("unknown kind " + kind_name);
  std::vector<hk::Hyperalgebra> structures =
      hk::enumerate_structures(*kind, size, max_size, dedup);
  if (!out.empty()) {
    fs::create_directories(out);
    int idx = 0;
    for (const hk::Hyperalgebra& h : structures) {
      std::string name = kind_name + "_" + std::to_string(size) + "_" +
                         std::to_string(idx++) + ".json";
      hk::save_json_file((fs::path(out) / name).string(), hk::structure_to_json(h));
    }
  }
  std::cout << structures.size() << " structures\n";
  return kExitOk;
}

int cmd_export_dot(const std::string& file, const std::string& out) {
  hk::Hyperalgebra h = hk::structure_from_json(hk::load_json_file(file));
  std::string dot = hk::export_dot(h.proset);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw hk::shape_error("cannot write " + out);
    f << dot;
  } else {
    std::cout << dot;
  }
  return kExitOk;
}

hk::Proof identity_proof() {
  hk::Formula p0 = hk::Formula::var("p0");
  hk::Formula p00 = hk::Formula::imp(p0, p0);
  hk::Proof proof;
  proof.lines.push_back({hk::Formula::imp(p0, hk::Formula::imp(p00, p0)), "AX1", {}});
  proof.lines.push_back(
      {hk::Formula::imp(hk::Formula::imp(p0, hk::Formula::imp(p00, p0)),
                        hk::Formula::imp(hk::Formula::imp(p0, p00), p00)),
       "AX2",
       {}});
  proof.lines.push_back({hk::Formula::imp(hk::Formula::imp(p0, p00), p00), "MP", {1, 2}});
  proof.lines.push_back({hk::Formula::imp(p0, p00), "AX1", {}});
  proof.lines.push_back({p00, "MP", {4, 3}});
  return proof;
}

int cmd_fixtures(const std::string& out) {
  fs::create_directories(out);
  fs::create_directories(fs::path(out) / "proofs");
  fs::create_directories(fs::path(out) / "batteries");
  auto write = [&](const std::string& name, const hk::json& j) {
    hk::save_json_file((fs::path(out) / name).string(), j);
  };
  hk::Hyperalgebra ch2 = hk::fixtures::ch2();
  hk::Hyperalgebra ch3 = hk::fixtures::ch3();
  hk::Hyperalgebra eq3 = hk::fixtures::eq3();
  write("ch2.json", hk::structure_to_json(ch2));
  write("ch3.json", hk::structure_to_json(ch3));
  write("eq3.json", hk::structure_to_json(eq3));
  write("sw_ch2_cw.json", hk::swap_to_json(hk::build_hyper_swap(ch2, hk::Variant::Cw)));
  write("sw_ch3_cw.json", hk::swap_to_json(hk::build_hyper_swap(ch3, hk::Variant::Cw)));
  write("sw_eq3_cw.json", hk::swap_to_json(hk::build_hyper_swap(eq3, hk::Variant::Cw)));
  write("sw_ch2_cwplus.json",
        hk::swap_to_json(hk::build_hyper_swap(ch2, hk::Variant::CwPlus)));
  write("proofs/identity.json", hk::proof_to_json(identity_proof()));

  std::ofstream theorems(fs::path(out) / "batteries" / "cmin_theorems.txt");
  theorems << hk::fixtures::cmin_theorem_battery();
  std::ofstream non(fs::path(out) / "batteries" / "cmin_non_theorems.txt");
  non << hk::fixtures::cmin_non_theorem_battery();
  std::cout << "fixtures written to " << out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for hyperlattices, hyper swap structures and their logics"};
  app.require_subcommand(1);

  std::string file, out, kind, variant = "cw", system = "cw", gamma, phi;
  bool as_json = false, dedup = false;
  int size = 2, bound = 8, gn = 8, max_size = 4;
  std::uint64_t budget_limit = hk::default_budget();

  CLI::App* verify = app.add_subcommand("verify", "verify a structure file");
  verify->add_option("file", file)->required();
  verify->add_option("--kind", kind, "verification chain (default: the file's kind)");
  verify->add_flag("--json", as_json, "machine-readable report");

  CLI::App* build = app.add_subcommand("build-swap", "build a hyper swap structure");
  build->add_option("file", file)->required();
  build->add_option("--variant", variant, "cw | cmin | cw+")->required();
  build->add_option("--out", out, "output file (default: stdout)");

  CLI::App* quot = app.add_subcommand("quotient", "quotient an enriched algebra by ~");
  quot->add_option("file", file)->required();
  quot->add_option("--out", out);
  quot->add_flag("--json", as_json);

  CLI::App* equiv = app.add_subcommand(
      "equiv", "round-trip equivalence check (phi for IHLs, psi for enriched)");
  equiv->add_option("file", file)->required();
  equiv->add_flag("--json", as_json);

  CLI::App* decide = app.add_subcommand("decide", "Nmatrix consequence");
  decide->add_option("--structure", file)->required();
  decide->add_option("--gamma", gamma, "premises, ';'-separated");
  decide->add_option("--phi", phi)->required();
  decide->add_option("--budget", budget_limit, "branch budget");

  CLI::App* prove = app.add_subcommand("prove", "check a Hilbert proof file");
  prove->add_option("file", file)->required();
  prove->add_option("--system", system, "cw | cmin | cw+")->required();
  prove->add_flag("--json", as_json);

  CLI::App* godel = app.add_subcommand("godel", "audit the M_G truncation");
  godel->add_option("--bound", bound, "truncation bound N (>= 2)");
  godel->add_option("--gn", gn, "evaluate G_1..G_n at v(p_i)=i");
  godel->add_option("--system", system, "cw | cmin | cw+")->default_val("cw+");
  godel->add_option("--out", out);

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate labeled structures");
  enumerate->add_option("--kind", kind, "proset | hl | ihl | cihl")->required();
  enumerate->add_option("--size", size)->required();
  enumerate->add_option("--out", out, "directory for structure files");
  enumerate->add_flag("--dedup", dedup, "keep one representative per isomorphism class");
  enumerate->add_option("--max-size", max_size, "enumeration bound");

  CLI::App* dot = app.add_subcommand("export-dot", "DOT digraph of a structure's order");
  dot->add_option("file", file)->required();
  dot->add_option("--out", out);

  CLI::App* fixtures = app.add_subcommand("fixtures", "write the shipped fixture files");
  fixtures->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(file, kind, as_json);
    if (build->parsed()) return cmd_build_swap(file, variant, out);
    if (quot->parsed()) return cmd_quotient(file, out, as_json);
    if (equiv->parsed()) return cmd_equiv(file, as_json);
    if (decide->parsed()) return cmd_decide(file, gamma, phi, budget_limit);
    if (prove->parsed()) return cmd_prove(file, system, as_json);
    if (godel->parsed()) return cmd_godel(bound, gn, system, out);
    if (enumerate->parsed()) return cmd_enumerate(kind, size, out, dedup, max_size);
    if (dot->parsed()) return cmd_export_dot(file, out);
    if (fixtures->parsed()) return cmd_fixtures(out);
  } catch (const hk::budget_exhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const hk::shape_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hk::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
