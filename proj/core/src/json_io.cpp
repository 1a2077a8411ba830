#include "hyperkalman/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hyperkalman/errors.hpp"

namespace hyperkalman {

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

std::string digest(const json& j) {
  std::string text = canonical_dump(j);
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

std::string structure_digest(const Hyperalgebra& h) {
  return digest(structure_to_json(h));
}

namespace {

json elemset_to_json(const ElemSet& s) {
  json out = json::array();
  for (int x : s.members()) out.push_back(x);
  return out;
}

ElemSet elemset_from_json(const json& j, int n, const std::string& where) {
  if (!j.is_array()) throw shape_error(where + " must be an array of indices");
  ElemSet out(n);
  for (const json& v : j) {
    if (!v.is_number_integer())
      throw shape_error(where + " must contain integer indices");
    int x = v.get<int>();
    if (x < 0 || x >= n)
      throw shape_error(where + " index " + std::to_string(x) + " out of range");
    out.insert(x);
  }
  return out;
}

json table_to_json(const HyperTable& t) {
  json out = json::array();
  for (const auto& row : t) {
    json jrow = json::array();
    for (const ElemSet& cell : row) jrow.push_back(elemset_to_json(cell));
    out.push_back(jrow);
  }
  return out;
}

HyperTable table_from_json(const json& j, int n, const std::string& name,
                           bool require_nonempty) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw shape_error("ops." + name + " must be an " + std::to_string(n) + "x" +
                      std::to_string(n) + " table");
  HyperTable t(n, std::vector<ElemSet>(n));
  for (int x = 0; x < n; ++x) {
    if (!j[x].is_array() || static_cast<int>(j[x].size()) != n)
      throw shape_error("ops." + name + "[" + std::to_string(x) +
                        "] must have " + std::to_string(n) + " cells");
    for (int y = 0; y < n; ++y) {
      std::string where =
          "ops." + name + "[" + std::to_string(x) + "][" + std::to_string(y) + "]";
      t[x][y] = elemset_from_json(j[x][y], n, where);
      if (require_nonempty && t[x][y].empty())
        throw shape_error(where + " is empty; hyperoperations take nonempty values");
    }
  }
  return t;
}

}  // namespace

json structure_to_json(const Hyperalgebra& h,
                       const std::vector<Snapshot>* snapshots) {
  json j;
  j["kind"] = kind_name(h.kind);
  j["labels"] = h.proset.labels();
  json leq = json::array();
  for (int x = 0; x < h.size(); ++x) {
    json row = json::array();
    for (int y = 0; y < h.size(); ++y) row.push_back(h.proset.leq(x, y));
    leq.push_back(row);
  }
  j["leq"] = leq;
  if (kind_has_ops(h.kind)) {
    json ops;
    ops["meet"] = table_to_json(h.meet);
    ops["join"] = table_to_json(h.join);
    if (kind_has_imp(h.kind)) ops["imp"] = table_to_json(h.imp);
    if (h.neg) {
      json neg = json::array();
      for (const ElemSet& cell : *h.neg) neg.push_back(elemset_to_json(cell));
      ops["neg"] = neg;
    }
    j["ops"] = ops;
  }
  if (h.designated) j["designated"] = elemset_to_json(*h.designated);
  if (snapshots) {
    json annex = json::array();
    for (const Snapshot& z : *snapshots) annex.push_back(json::array({z.z1, z.z2}));
    j["snapshots"] = annex;
  }
  return j;
}

Hyperalgebra structure_from_json(const json& j) {
  if (!j.is_object()) throw shape_error("structure file must be a JSON object");
  for (const char* key : {"labels", "leq", "kind"})
    if (!j.contains(key))
      throw shape_error(std::string("structure file misses \"") + key + "\"");

  auto kind = kind_from_name(j["kind"].get<std::string>());
  if (!kind) throw shape_error("unknown kind \"" + j["kind"].get<std::string>() + "\"");

  std::vector<std::string> labels = j["labels"].get<std::vector<std::string>>();
  int n = static_cast<int>(labels.size());
  if (!j["leq"].is_array() || static_cast<int>(j["leq"].size()) != n)
    throw shape_error("leq must be an n x n boolean table");
  std::vector<std::vector<bool>> leq;
  for (const json& row : j["leq"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw shape_error("leq rows must have length n");
    std::vector<bool> r;
    for (const json& v : row) {
      if (!v.is_boolean()) throw shape_error("leq entries must be booleans");
      r.push_back(v.get<bool>());
    }
    leq.push_back(std::move(r));
  }
  Proset p(std::move(labels), std::move(leq));

  bool canonical = j.value("canonical", false);
  Hyperalgebra h = canonical_hyperalgebra(p, *kind);
  if (kind_has_ops(*kind) && !canonical) {
    if (!j.contains("ops"))
      throw shape_error("kind " + kind_name(*kind) +
                        " needs ops (or \"canonical\": true)");
    const json& ops = j["ops"];
    h.meet = table_from_json(ops.at("meet"), n, "meet", true);
    h.join = table_from_json(ops.at("join"), n, "join", true);
    if (kind_has_imp(*kind))
      h.imp = table_from_json(ops.at("imp"), n, "imp", true);
  }
  if (kind_has_neg(*kind)) {
    if (!j.contains("ops") || !j["ops"].contains("neg"))
      throw shape_error("kind " + kind_name(*kind) + " needs ops.neg");
    const json& neg = j["ops"]["neg"];
    if (!neg.is_array() || static_cast<int>(neg.size()) != n)
      throw shape_error("ops.neg must have one cell per element");
    NegTable t;
    for (int x = 0; x < n; ++x) {
      t.push_back(elemset_from_json(neg[x], n, "ops.neg[" + std::to_string(x) + "]"));
      if (t.back().empty())
        throw shape_error("ops.neg[" + std::to_string(x) + "] is empty");
    }
    h.neg = std::move(t);
  } else if (j.contains("ops") && j["ops"].contains("neg")) {
    const json& neg = j["ops"]["neg"];
    NegTable t;
    for (int x = 0; x < n && x < static_cast<int>(neg.size()); ++x)
      t.push_back(elemset_from_json(neg[x], n, "ops.neg[" + std::to_string(x) + "]"));
    h.neg = std::move(t);
  }
  if (j.contains("designated"))
    h.designated = elemset_from_json(j["designated"], n, "designated");
  return h;
}

json swap_to_json(const SwapStructure& s) {
  return structure_to_json(s.algebra, &s.snapshots);
}

json quotient_to_json(const QuotientResult& q) {
  json j;
  j["projection"] = q.projection;
  j["quotient"] = structure_to_json(q.quotient);
  return j;
}

json morphism_to_json(const Morphism& m) {
  json j;
  j["kind"] = m.kind == MorphKind::IHL ? "ihl" : "hc";
  j["map"] = m.map;
  j["source"] = structure_digest(m.source);
  j["target"] = structure_digest(m.target);
  return j;
}

Morphism morphism_from_json(const json& j, const Hyperalgebra& source,
                            const Hyperalgebra& target) {
  if (!j.is_object() || !j.contains("map") || !j.contains("kind"))
    throw shape_error("morphism file needs \"map\" and \"kind\"");
  std::string src = j.value("source", "");
  std::string tgt = j.value("target", "");
  if (src != structure_digest(source))
    throw shape_error("morphism source digest " + src +
                      " does not match the supplied structure");
  if (tgt != structure_digest(target))
    throw shape_error("morphism target digest " + tgt +
                      " does not match the supplied structure");
  MorphKind kind =
      j["kind"].get<std::string>() == "hc" ? MorphKind::HC : MorphKind::IHL;
  std::vector<int> map = j["map"].get<std::vector<int>>();
  if (static_cast<int>(map.size()) != source.size())
    throw shape_error("morphism map must cover every source element");
  for (int v : map)
    if (v < 0 || v >= target.size())
      throw shape_error("morphism map image out of range");
  return {source, target, std::move(map), kind};
}

json proof_to_json(const Proof& p, std::span<const Formula> hypotheses) {
  json j;
  if (!hypotheses.empty()) {
    json hyps = json::array();
    for (Formula h : hypotheses) hyps.push_back(format_formula(h));
    j["hypotheses"] = hyps;
  }
  json lines = json::array();
  for (const ProofLine& line : p.lines) {
    json l;
    l["formula"] = format_formula(line.formula);
    l["rule"] = line.rule;
    if (!line.refs.empty()) l["refs"] = line.refs;
    lines.push_back(l);
  }
  j["lines"] = lines;
  return j;
}

Proof proof_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array())
    throw shape_error("proof file needs a \"lines\" array");
  Proof p;
  for (const json& l : j["lines"]) {
    if (!l.contains("formula") || !l.contains("rule"))
      throw shape_error("proof lines need \"formula\" and \"rule\"");
    std::vector<int> refs;
    if (l.contains("refs")) refs = l["refs"].get<std::vector<int>>();
    p.lines.push_back({parse_formula(l["formula"].get<std::string>()),
                       l["rule"].get<std::string>(), std::move(refs)});
  }
  return p;
}

std::vector<Formula> proof_hypotheses_from_json(const json& j) {
  std::vector<Formula> out;
  if (j.contains("hypotheses"))
    for (const json& h : j["hypotheses"])
      out.push_back(parse_formula(h.get<std::string>()));
  return out;
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const Check& c : r.checks()) {
    json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    if (!c.passed) entry["witness"] = c.witness;
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(entry);
  }
  json j;
  j["checks"] = checks;
  j["ok"] = r.ok();
  return j;
}

std::vector<BatteryEntry> parse_battery(const std::string& text) {
  std::vector<BatteryEntry> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r'))
      line.pop_back();
    if (line.empty()) continue;
    auto at = line.rfind(" @ ");
    if (at == std::string::npos)
      throw shape_error("battery line " + std::to_string(number) +
                        " misses the ` @ system` annotation");
    std::string tag = line.substr(at + 3);
    std::optional<System> system = system_from_name(tag);
    if (!system && tag != "none")
      throw shape_error("battery line " + std::to_string(number) +
                        " names an unknown system");
    out.push_back({parse_formula(line.substr(0, at)), system});
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw shape_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw shape_error(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw shape_error("cannot write " + path);
  out << canonical_dump(j);
}

}  // namespace hyperkalman
