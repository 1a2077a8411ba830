#include "hyperkalman/hc.hpp"

#include <stdexcept>

#include "hyperkalman/errors.hpp"

namespace hyperkalman {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Cw: return "cw";
    case Variant::Cmin: return "cmin";
    case Variant::CwPlus: return "cw+";
  }
  return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
  for (Variant v : {Variant::Cw, Variant::Cmin, Variant::CwPlus})
    if (variant_name(v) == name) return v;
  return std::nullopt;
}

namespace {

bool check_neg_present(const Hyperalgebra& h, Report& report) {
  if (!h.neg || static_cast<int>(h.neg->size()) != h.size()) {
    report.add_fail("neg-table", "missing",
                    "a negation table of length n is required");
    return false;
  }
  for (int x = 0; x < h.size(); ++x)
    if ((*h.neg)[x].empty()) {
      report.add_fail("neg-table", h.proset.label(x), "negation cell is empty");
      return false;
    }
  report.add_pass("neg-table");
  return true;
}

void check_h1(const Hyperalgebra& h, Report& report) {
  const Proset& p = h.proset;
  ElemSet top = p.top_set();
  for (int x = 0; x < h.size(); ++x)
    for (int y : h.neg_cell(x).members())
      for (int w : h.join_cell(x, y).members())
        if (!top.contains(w)) {
          report.add_fail("H1", render_triple(p, x, y, w),
                          p.label(w) + " in " + p.label(x) + " ⋎ ÷" +
                              p.label(x) + " is not in ⊤");
          return;
        }
  report.add_pass("H1");
}

void check_h2(const Hyperalgebra& h, Report& report) {
  const Proset& p = h.proset;
  for (int x = 0; x < h.size(); ++x)
    for (int y : h.neg_cell(x).members())
      for (int w : h.neg_cell(y).members())
        if (!p.leq(w, x)) {
          report.add_fail("H2", render_triple(p, x, y, w),
                          "÷÷" + p.label(x) + " contains " +
                              p.label(w) + " which does not precede " +
                              p.label(x));
          return;
        }
  report.add_pass("H2");
}

void check_h3(const Hyperalgebra& h, Report& report) {
  const Proset& p = h.proset;
  for (int x = 0; x < h.size(); ++x)
    for (int y : h.neg_cell(x).members())
      for (int w : h.neg_cell(y).members())
        if (!p.sim(w, x)) {
          report.add_fail("H3", render_triple(p, x, y, w),
                          "÷÷" + p.label(x) + " contains " +
                              p.label(w) + " which is not similar to " +
                              p.label(x));
          return;
        }
  report.add_pass("H3");
}

}  // namespace

Report verify_hcw(const Hyperalgebra& h) {
  Report report = verify_ihl(h);
  if (!check_neg_present(h, report)) return report;
  check_h1(h, report);
  check_h2(h, report);
  return report;
}

Report verify_hcmin(const Hyperalgebra& h) {
  Report report = verify_ihl(h);
  report.append(verify_cihl(h));
  if (!check_neg_present(h, report)) return report;
  check_h1(h, report);
  check_h2(h, report);
  return report;
}

Report verify_hcwplus(const Hyperalgebra& h) {
  Report report = verify_ihl(h);
  if (!check_neg_present(h, report)) return report;
  check_h1(h, report);
  check_h3(h, report);
  return report;
}

int SimRelation::class_of(int x) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (int y : classes[i])
      if (y == x) return static_cast<int>(i);
  throw precondition_error("element not covered by any class");
}

SimRelation sim_relation(const Hyperalgebra& h) {
  if (!h.neg) throw precondition_error("sim_relation needs a negation table");
  int n = h.size();
  SimRelation rel;
  rel.table.assign(n, std::vector<bool>(n, false));
  for (int z = 0; z < n; ++z) {
    auto members = h.neg_cell(z).members();
    for (int x : members)
      for (int y : members) rel.table[x][y] = true;
  }
  bool reflexive = true, trans = true;
  for (int x = 0; x < n && reflexive; ++x)
    if (!rel.table[x][x]) reflexive = false;
  for (int x = 0; x < n && trans; ++x)
    for (int y = 0; y < n && trans; ++y)
      if (rel.table[x][y])
        for (int z = 0; z < n; ++z)
          if (rel.table[y][z] && !rel.table[x][z]) {
            trans = false;
            break;
          }
  rel.is_equivalence = reflexive && trans;
  if (rel.is_equivalence) {
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
      if (seen[x]) continue;
      std::vector<int> cls;
      for (int y = x; y < n; ++y)
        if (rel.table[x][y]) {
          cls.push_back(y);
          seen[y] = true;
        }
      rel.classes.push_back(std::move(cls));
    }
  }
  return rel;
}

Report verify_enriched(const Hyperalgebra& h, Variant variant) {
  Report report;
  switch (variant) {
    case Variant::Cw: report = verify_hcw(h); break;
    case Variant::Cmin: report = verify_hcmin(h); break;
    case Variant::CwPlus: report = verify_hcwplus(h); break;
  }
  if (!report.ok()) return report;

  const Proset& p = h.proset;
  int n = h.size();
  SimRelation rel = sim_relation(h);
  auto related_to_set = [&](int y, const ElemSet& s) {
    for (int u : s.members())
      if (!rel.table[y][u]) return false;
    return true;
  };

  // E0: x in ÷÷x.
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y : h.neg_cell(x).members())
      if (h.neg_cell(y).contains(x)) {
        found = true;
        break;
      }
    if (!found) {
      report.add_fail("E0", p.label(x),
                      p.label(x) + " is not a member of ÷÷" + p.label(x));
      return report;
    }
  }
  report.add_pass("E0");

  // E1: ÷x is stable.
  for (int x = 0; x < n; ++x) {
    auto members = h.neg_cell(x).members();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!p.sim(members[i], members[j])) {
          report.add_fail("E1", render_triple(p, x, members[i], members[j]),
                          "÷" + p.label(x) + " is not stable");
          return report;
        }
  }
  report.add_pass("E1");

  // E2: ∼ is transitive.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!rel.table[x][y]) continue;
      for (int z = 0; z < n; ++z)
        if (rel.table[y][z] && !rel.table[x][z]) {
          report.add_fail("E2", render_triple(p, x, y, z),
                          p.label(x) + " ∼ " + p.label(y) + " ∼ " +
                              p.label(z) + " but not " + p.label(x) +
                              " ∼ " + p.label(z));
          return report;
        }
    }
  report.add_pass("E2");

  // E3: x ⋎ y ≡ ⊤ implies some z with x ∼ z and y ∼ ÷z.
  ElemSet top = p.top_set();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!p.set_similar(h.join_cell(x, y), top)) continue;
      bool found = false;
      for (int z = 0; z < n && !found; ++z)
        if (rel.table[x][z] && related_to_set(y, h.neg_cell(z))) found = true;
      if (!found) {
        report.add_fail("E3", render_pair(p, x, y),
                        "no z with " + p.label(x) + " ∼ z and " +
                            p.label(y) + " ∼ ÷z");
        return report;
      }
    }
  report.add_pass("E3");

  // E4: x ∼ y and ÷x ∼ ÷y imply x = y.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !rel.table[x][y]) continue;
      bool negs_related = true;
      for (int u : h.neg_cell(x).members()) {
        if (!related_to_set(u, h.neg_cell(y))) {
          negs_related = false;
          break;
        }
      }
      if (negs_related) {
        report.add_fail("E4", render_pair(p, x, y),
                        "distinct elements with " + p.label(x) + " ∼ " +
                            p.label(y) + " and ÷" + p.label(x) +
                            " ∼ ÷" + p.label(y));
        return report;
      }
    }
  report.add_pass("E4");
  return report;
}

QuotientResult quotient(const Hyperalgebra& h, Variant variant) {
  Report enriched = verify_enriched(h, variant);
  if (!enriched.ok()) {
    const Check* f = enriched.first_failure();
    throw precondition_error("quotient requires an enriched algebra; " +
                             f->name + " fails at " + f->witness);
  }
  const Proset& p = h.proset;
  SimRelation rel = sim_relation(h);
  int m = static_cast<int>(rel.classes.size());

  std::vector<int> projection(h.size());
  for (int c = 0; c < m; ++c)
    for (int x : rel.classes[c]) projection[x] = c;

  // [x] ⪯ [y] iff x ⪯ y; E1 makes this independent of representatives,
  // which we still assert.
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  std::vector<std::string> labels(m);
  for (int c = 0; c < m; ++c) labels[c] = "[" + p.label(rel.classes[c][0]) + "]";
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < m; ++d) {
      bool value = p.leq(rel.classes[c][0], rel.classes[d][0]);
      for (int x : rel.classes[c])
        for (int y : rel.classes[d])
          if (p.leq(x, y) != value)
            throw std::logic_error("quotient order not representative-independent");
      leq[c][d] = value;
    }
  Proset qp(labels, leq);

  auto image = [&](const ElemSet& cell) {
    ElemSet out(m);
    for (int z : cell.members()) out.insert(projection[z]);
    return out;
  };

  Hyperalgebra q{qp, HyperTable(m, std::vector<ElemSet>(m)),
                 HyperTable(m, std::vector<ElemSet>(m)),
                 HyperTable(m, std::vector<ElemSet>(m)),
                 std::nullopt, Kind::IHL, std::nullopt};
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < m; ++d) {
      ElemSet meet = image(h.meet_cell(rel.classes[c][0], rel.classes[d][0]));
      ElemSet join = image(h.join_cell(rel.classes[c][0], rel.classes[d][0]));
      for (int x : rel.classes[c])
        for (int y : rel.classes[d]) {
          if (!(image(h.meet_cell(x, y)) == meet) ||
              !(image(h.join_cell(x, y)) == join))
            throw std::logic_error("quotient tables not representative-independent");
        }
      q.meet[c][d] = meet;
      q.join[c][d] = join;
      q.imp[c][d] = qp.canonical_implication(c, d);
      // The paper builds R over the quotient as the image of R; the
      // canonical implication must agree with the image of Max(R(x,y)).
      ElemSet imp_image = image(h.imp_cell(rel.classes[c][0], rel.classes[d][0]));
      if (!(q.imp[c][d] == imp_image))
        throw std::logic_error("quotient implication disagrees with image of Max(R)");
    }

  if (!verify_ihl(q).ok())
    throw std::logic_error("quotient of an enriched algebra failed IHL verification");
  return {std::move(q), std::move(projection)};
}

}  // namespace hyperkalman
