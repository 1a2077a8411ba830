#include "hyperkalman/hyperalgebra.hpp"

#include <sstream>

#include "hyperkalman/errors.hpp"

namespace hyperkalman {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Proset: return "proset";
    case Kind::HL: return "hl";
    case Kind::IHL: return "ihl";
    case Kind::CIHL: return "cihl";
    case Kind::HCw: return "hcw";
    case Kind::HCmin: return "hcmin";
    case Kind::HCwPlus: return "hcw+";
  }
  return "?";
}

std::optional<Kind> kind_from_name(const std::string& name) {
  for (Kind k : {Kind::Proset, Kind::HL, Kind::IHL, Kind::CIHL, Kind::HCw,
                 Kind::HCmin, Kind::HCwPlus})
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

bool kind_has_ops(Kind k) { return k != Kind::Proset; }

bool kind_has_imp(Kind k) { return kind_has_ops(k) && k != Kind::HL; }

bool kind_has_neg(Kind k) {
  return k == Kind::HCw || k == Kind::HCmin || k == Kind::HCwPlus;
}

Hyperalgebra canonical_hyperalgebra(const Proset& p, Kind kind) {
  int n = p.size();
  Hyperalgebra h{p, HyperTable(n, std::vector<ElemSet>(n)),
                 HyperTable(n, std::vector<ElemSet>(n)),
                 HyperTable(n, std::vector<ElemSet>(n)),
                 std::nullopt, kind, std::nullopt};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      h.meet[x][y] = p.infimoid(x, y);
      h.join[x][y] = p.supremoid(x, y);
      h.imp[x][y] = p.canonical_implication(x, y);
    }
  return h;
}

std::string render_pair(const Proset& p, int x, int y) {
  return "(" + p.label(x) + "," + p.label(y) + ")";
}

std::string render_triple(const Proset& p, int x, int y, int z) {
  return "(" + p.label(x) + "," + p.label(y) + "," + p.label(z) + ")";
}

std::string render_set(const Proset& p, const ElemSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int x : s.members()) {
    if (!first) os << ",";
    os << p.label(x);
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

struct FirstWitness {
  bool failed = false;
  std::string witness;
  std::string detail;

  void fail(std::string w, std::string d = "") {
    if (failed) return;
    failed = true;
    witness = std::move(w);
    detail = std::move(d);
  }

  void emit(Report& report, const std::string& name) const {
    if (failed)
      report.add_fail(name, witness, detail);
    else
      report.add_pass(name);
  }
};

}  // namespace

Report verify_hl(const Hyperalgebra& h) {
  Report report;
  const Proset& p = h.proset;
  int n = p.size();
  if (static_cast<int>(h.meet.size()) != n || static_cast<int>(h.join.size()) != n) {
    report.add_fail("tables", "missing", "meet/join tables must be present and n x n");
    return report;
  }
  FirstWitness hl, meet_eq, join_eq;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ElemSet inf = p.infimoid(x, y);
      ElemSet sup = p.supremoid(x, y);
      if (inf.empty() || sup.empty())
        hl.fail(render_pair(p, x, y),
                inf.empty() ? "infimoid is empty" : "supremoid is empty");
      if (!(h.meet[x][y] == inf)) meet_eq.fail(render_pair(p, x, y));
      if (!(h.join[x][y] == sup)) join_eq.fail(render_pair(p, x, y));
    }
  hl.emit(report, "hyperlattice");
  meet_eq.emit(report, "meet-canonical");
  join_eq.emit(report, "join-canonical");
  return report;
}

Report verify_ihl(const Hyperalgebra& h) {
  Report report;
  const Proset& p = h.proset;
  int n = p.size();

  if (static_cast<int>(h.meet.size()) != n || static_cast<int>(h.join.size()) != n ||
      static_cast<int>(h.imp.size()) != n) {
    report.add_fail("tables", "missing",
                    "meet/join/imp tables must be present and n x n");
    return report;
  }

  FirstWitness hl, meet_eq, join_eq, imp_eq, i1, i2, i3;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      ElemSet inf = p.infimoid(x, y);
      ElemSet sup = p.supremoid(x, y);
      ElemSet can = p.canonical_implication(x, y);
      if (inf.empty() || sup.empty())
        hl.fail(render_pair(p, x, y),
                inf.empty() ? "infimoid is empty" : "supremoid is empty");
      if (!(h.meet[x][y] == inf))
        meet_eq.fail(render_pair(p, x, y),
                     "table " + render_set(p, h.meet[x][y]) + " vs infimoid " +
                         render_set(p, inf));
      if (!(h.join[x][y] == sup))
        join_eq.fail(render_pair(p, x, y),
                     "table " + render_set(p, h.join[x][y]) + " vs supremoid " +
                         render_set(p, sup));
      if (!(h.imp[x][y] == can))
        imp_eq.fail(render_pair(p, x, y),
                    "table " + render_set(p, h.imp[x][y]) + " vs Max(R) " +
                        render_set(p, can));
      if (h.imp[x][y].empty())
        imp_eq.fail(render_pair(p, x, y), "implication cell is empty");
    }
  }

  // Axiom-level diagnostics on the stored tables. Equivalent to the table
  // comparison above when everything is canonical, but these pinpoint which
  // of I1-I3 a hand-made table breaks.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      ElemSet y_only = ElemSet::of(n, {y});
      for (int z = 0; z < n; ++z) {
        if (h.imp[x][y].contains(z)) {
          // I1: z in x ⊸ y implies x ⋏ z ⪯ y.
          if (!p.set_precedes(h.meet[x][z], y_only))
            i1.fail(render_triple(p, x, y, z),
                    render_set(p, h.meet[x][z]) + " does not precede " + p.label(y));
        }
        if (p.set_precedes(h.meet[x][z], y_only)) {
          // I2: x ⋏ z ⪯ y implies z ⪯ x ⊸ y.
          if (!p.elem_precedes_set(z, h.imp[x][y]))
            i2.fail(render_triple(p, x, y, z),
                    p.label(z) + " does not precede " + render_set(p, h.imp[x][y]));
        }
        // I3: similar elements enter x ⊸ y together.
        if (h.imp[x][y].contains(z)) {
          for (int w = 0; w < n; ++w)
            if (p.sim(z, w) && !h.imp[x][y].contains(w))
              i3.fail(render_triple(p, x, y, z),
                      p.label(w) + " is similar to " + p.label(z) +
                          " but missing from " + render_set(p, h.imp[x][y]));
        }
      }
    }
  }

  hl.emit(report, "hyperlattice");
  meet_eq.emit(report, "meet-canonical");
  join_eq.emit(report, "join-canonical");
  imp_eq.emit(report, "imp-canonical");
  i1.emit(report, "I1");
  i2.emit(report, "I2");
  i3.emit(report, "I3");
  return report;
}

Report verify_cihl(const Hyperalgebra& h) {
  Report report;
  const Proset& p = h.proset;
  int n = p.size();
  ElemSet top = p.top_set();
  FirstWitness i4;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      // x ⋎ (x ⊸ y) evaluated on the least-index representative of the
      // stable set x ⊸ y.
      int rep = h.imp[x][y].least();
      if (rep < 0) {
        i4.fail(render_pair(p, x, y), "implication cell is empty");
        continue;
      }
      if (!p.set_similar(h.join[x][rep], top))
        i4.fail(render_pair(p, x, y),
                p.label(x) + " ⋎ (" + p.label(x) + " ⊸ " + p.label(y) +
                    ") = " + render_set(p, h.join[x][rep]) +
                    " is not similar to ⊤ = " + render_set(p, top));
    }
  }
  i4.emit(report, "I4");
  return report;
}

}  // namespace hyperkalman
