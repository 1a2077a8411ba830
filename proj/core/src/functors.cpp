#include "hyperkalman/functors.hpp"

#include <stdexcept>

#include "hyperkalman/errors.hpp"

namespace hyperkalman {

namespace {

std::string map_entry(const Morphism& m, int x) {
  return m.source.proset.label(x) + " ↦ " + m.target.proset.label(m.apply(x));
}

void require_verified(const Morphism& m, const char* who) {
  Report r = verify_morphism(m);
  if (!r.ok()) {
    const Check* f = r.first_failure();
    throw precondition_error(std::string(who) + " needs a verified morphism; " +
                             f->name + " fails at " + f->witness);
  }
}

}  // namespace

Morphism identity_morphism(const Hyperalgebra& h, MorphKind kind) {
  std::vector<int> map(h.size());
  for (int i = 0; i < h.size(); ++i) map[i] = i;
  return {h, h, std::move(map), kind};
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!(f.target == g.source))
    throw precondition_error("compose: target of first is not source of second");
  std::vector<int> map(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) map[i] = g.map[f.map[i]];
  return {f.source, g.target, std::move(map), f.kind};
}

Report verify_morphism(const Morphism& m) {
  Report report;
  int n = m.source.size();
  if (static_cast<int>(m.map.size()) != n) {
    report.add_fail("total", "map", "map must cover every source index");
    return report;
  }
  for (int x : m.map)
    if (x < 0 || x >= m.target.size()) {
      report.add_fail("total", std::to_string(x), "image outside target domain");
      return report;
    }

  struct Clause {
    const char* name;
    const HyperTable Hyperalgebra::*table;
  };
  const Clause clauses[] = {{"meet", &Hyperalgebra::meet},
                            {"join", &Hyperalgebra::join},
                            {"imp", &Hyperalgebra::imp}};
  for (const Clause& clause : clauses) {
    bool failed = false;
    for (int x = 0; x < n && !failed; ++x)
      for (int y = 0; y < n && !failed; ++y)
        for (int z : (m.source.*clause.table)[x][y].members())
          if (!(m.target.*clause.table)[m.apply(x)][m.apply(y)].contains(m.apply(z))) {
            report.add_fail(clause.name, render_triple(m.source.proset, x, y, z),
                            map_entry(m, z) + " escapes the image cell");
            failed = true;
            break;
          }
    if (!failed) report.add_pass(clause.name);
  }

  if (m.kind == MorphKind::HC) {
    if (!m.source.neg || !m.target.neg) {
      report.add_fail("neg", "missing", "HC morphisms need negation tables");
      return report;
    }
    bool failed = false;
    for (int x = 0; x < n && !failed; ++x)
      for (int z : m.source.neg_cell(x).members())
        if (!m.target.neg_cell(m.apply(x)).contains(m.apply(z))) {
          report.add_fail("neg", render_pair(m.source.proset, x, z),
                          map_entry(m, z) + " escapes ÷" +
                              m.target.proset.label(m.apply(x)));
          failed = true;
          break;
        }
    if (!failed) report.add_pass("neg");
  }
  return report;
}

bool monotone_check(const Morphism& m) {
  require_verified(m, "monotone_check");
  int n = m.source.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m.source.proset.leq(x, y) &&
          !m.target.proset.leq(m.apply(x), m.apply(y)))
        return false;
  return true;
}

Morphism lift_swap_morphism(const Morphism& f, Variant variant) {
  require_verified(f, "lift_swap_morphism");
  SwapStructure src = build_hyper_swap(f.source, variant);
  SwapStructure tgt = build_hyper_swap(f.target, variant);
  std::vector<int> map(src.snapshots.size());
  for (std::size_t i = 0; i < src.snapshots.size(); ++i) {
    Snapshot image{f.apply(src.snapshots[i].z1), f.apply(src.snapshots[i].z2)};
    int j = tgt.index_of(image);
    if (j < 0)
      throw precondition_error("componentwise image of snapshot " +
                               src.algebra.proset.label(static_cast<int>(i)) +
                               " is not a snapshot of the target");
    map[i] = j;
  }
  Morphism lifted{src.algebra, tgt.algebra, std::move(map), MorphKind::HC};
  Report check = verify_morphism(lifted);
  if (!check.ok())
    throw std::logic_error("lifted swap morphism fails verification at " +
                           check.first_failure()->witness);
  return lifted;
}

Morphism quotient_morphism(const Morphism& g, Variant variant) {
  require_verified(g, "quotient_morphism");
  QuotientResult src = quotient(g.source, variant);
  QuotientResult tgt = quotient(g.target, variant);
  SimRelation src_rel = sim_relation(g.source);

  int m = src.quotient.size();
  std::vector<int> map(m, -1);
  for (int x = 0; x < g.source.size(); ++x) {
    int cls = src.projection[x];
    int image = tgt.projection[g.apply(x)];
    if (map[cls] < 0)
      map[cls] = image;
    else if (map[cls] != image)
      throw precondition_error("induced map is not well-defined on class " +
                               src.quotient.proset.label(cls));
  }
  // x ∼ x' must force g(x) ∼ g(x'); the check above caught any violation,
  // but assert the relation-level statement too.
  for (int x = 0; x < g.source.size(); ++x)
    for (int y = 0; y < g.source.size(); ++y)
      if (src_rel.related(x, y) &&
          tgt.projection[g.apply(x)] != tgt.projection[g.apply(y)])
        throw precondition_error("induced map is not well-defined");

  Morphism induced{src.quotient, tgt.quotient, std::move(map), MorphKind::IHL};
  Report check = verify_morphism(induced);
  if (!check.ok())
    throw std::logic_error("quotient morphism fails verification at " +
                           check.first_failure()->witness);
  return induced;
}

Morphism phi(const Hyperalgebra& base, Variant variant) {
  SwapStructure s = build_hyper_swap(base, variant);
  QuotientResult q = quotient(s.algebra, variant);
  int n = base.size();
  std::vector<int> map(n);
  for (int x = 0; x < n; ++x) {
    int y = base.imp_cell(x, x).least();
    int idx = s.index_of({x, y});
    if (idx < 0)
      throw std::logic_error("(x, y) with y in x ⊸ x must be a snapshot");
    map[x] = q.projection[idx];
    // Witness independence: every snapshot (x, y') lands in the same class.
    for (std::size_t i = 0; i < s.snapshots.size(); ++i)
      if (s.snapshots[i].z1 == x && q.projection[i] != map[x])
        throw std::logic_error("Φ witness choice is not class-independent");
  }
  return {base, q.quotient, std::move(map), MorphKind::IHL};
}

Morphism psi(const Hyperalgebra& enriched, Variant variant) {
  QuotientResult q = quotient(enriched, variant);
  SwapStructure su = build_hyper_swap(q.quotient, variant);
  int n = enriched.size();
  std::vector<int> map(n);
  for (int x = 0; x < n; ++x) {
    auto negs = enriched.neg_cell(x).members();
    int zclass = q.projection[negs.front()];
    for (int z : negs)
      if (q.projection[z] != zclass)
        throw std::logic_error("Ψ witness choice is not class-independent");
    int idx = su.index_of({q.projection[x], zclass});
    if (idx < 0)
      throw std::logic_error("([x],[z]) must be a snapshot of S(U(A))");
    map[x] = idx;
  }
  return {enriched, su.algebra, std::move(map), MorphKind::HC};
}

Report verify_isomorphism(const Morphism& m) {
  Report report = verify_morphism(m);
  if (!report.ok()) return report;
  int n = m.source.size();
  if (m.target.size() != n) {
    report.add_fail("bijective", "size",
                    std::to_string(n) + " vs " + std::to_string(m.target.size()));
    return report;
  }
  std::vector<int> inverse(n, -1);
  for (int x = 0; x < n; ++x) {
    if (inverse[m.apply(x)] >= 0) {
      report.add_fail("bijective", m.target.proset.label(m.apply(x)),
                      "hit twice (not injective)");
      return report;
    }
    inverse[m.apply(x)] = x;
  }
  for (int y = 0; y < n; ++y)
    if (inverse[y] < 0) {
      report.add_fail("bijective", m.target.proset.label(y), "not in the image");
      return report;
    }
  report.add_pass("bijective");
  Morphism back{m.target, m.source, std::move(inverse), m.kind};
  Report inv = verify_morphism(back);
  report.append(inv, "inverse-");
  return report;
}

Report verify_naturality_phi(const Morphism& f, Variant variant) {
  require_verified(f, "verify_naturality_phi");
  Report report;
  Morphism phi_src = phi(f.source, variant);
  Morphism phi_tgt = phi(f.target, variant);
  Morphism lifted = lift_swap_morphism(f, variant);
  Morphism usf = quotient_morphism(lifted, variant);
  for (int x = 0; x < f.source.size(); ++x) {
    int via_top = usf.apply(phi_src.apply(x));
    int via_bottom = phi_tgt.apply(f.apply(x));
    if (via_top != via_bottom) {
      report.add_fail("phi-square", f.source.proset.label(x),
                      "U(S(f))(Φ(x)) = " +
                          usf.target.proset.label(via_top) + " but Φ(f(x)) = " +
                          phi_tgt.target.proset.label(via_bottom));
      return report;
    }
  }
  report.add_pass("phi-square");
  return report;
}

Report verify_naturality_psi(const Morphism& g, Variant variant) {
  require_verified(g, "verify_naturality_psi");
  Report report;
  Morphism psi_src = psi(g.source, variant);
  Morphism psi_tgt = psi(g.target, variant);
  Morphism uq = quotient_morphism(g, variant);
  Morphism sug = lift_swap_morphism(uq, variant);
  for (int x = 0; x < g.source.size(); ++x) {
    int via_top = sug.apply(psi_src.apply(x));
    int via_bottom = psi_tgt.apply(g.apply(x));
    if (via_top != via_bottom) {
      report.add_fail("psi-square", g.source.proset.label(x),
                      "S(U(g))(Ψ(x)) = " + sug.target.proset.label(via_top) +
                          " but Ψ(g(x)) = " +
                          psi_tgt.target.proset.label(via_bottom));
      return report;
    }
  }
  report.add_pass("psi-square");
  return report;
}

Report functor_laws(const std::vector<Morphism>& corpus, Variant variant) {
  Report report;

  for (const Morphism& f : corpus) {
    Morphism lifted_id = lift_swap_morphism(identity_morphism(f.source, f.kind), variant);
    if (!(lifted_id == identity_morphism(lifted_id.source, MorphKind::HC))) {
      report.add_fail("S-identity", "id", "S(1) differs from 1 on S(source)");
      return report;
    }
  }
  report.add_pass("S-identity");

  int pairs = 0;
  for (const Morphism& f : corpus)
    for (const Morphism& g : corpus) {
      if (!(f.target == g.source)) continue;
      ++pairs;
      Morphism lhs = lift_swap_morphism(compose(f, g), variant);
      Morphism rhs = compose(lift_swap_morphism(f, variant),
                             lift_swap_morphism(g, variant));
      if (!(lhs == rhs)) {
        report.add_fail("S-composition", "pair " + std::to_string(pairs),
                        "S(g∘f) differs from S(g)∘S(f)");
        return report;
      }
    }
  report.add_pass("S-composition", std::to_string(pairs) + " composable pairs");

  // U laws run on the lifted corpus (swap structures are enriched).
  std::vector<Morphism> lifted;
  for (const Morphism& f : corpus) lifted.push_back(lift_swap_morphism(f, variant));
  for (const Morphism& g : lifted) {
    Morphism id_src = identity_morphism(g.source, MorphKind::HC);
    Morphism uid = quotient_morphism(id_src, variant);
    if (!(uid == identity_morphism(uid.source, MorphKind::IHL))) {
      report.add_fail("U-identity", "id", "U(1) differs from 1 on U(source)");
      return report;
    }
  }
  report.add_pass("U-identity");

  pairs = 0;
  for (const Morphism& f : lifted)
    for (const Morphism& g : lifted) {
      if (!(f.target == g.source)) continue;
      ++pairs;
      Morphism lhs = quotient_morphism(compose(f, g), variant);
      Morphism rhs = compose(quotient_morphism(f, variant),
                             quotient_morphism(g, variant));
      if (!(lhs == rhs)) {
        report.add_fail("U-composition", "pair " + std::to_string(pairs),
                        "U(g∘f) differs from U(g)∘U(f)");
        return report;
      }
    }
  report.add_pass("U-composition", std::to_string(pairs) + " composable pairs");
  return report;
}

std::vector<Morphism> all_morphisms(const Hyperalgebra& source,
                                    const Hyperalgebra& target, MorphKind kind) {
  std::vector<Morphism> out;
  int n = source.size(), m = target.size();
  std::vector<int> map(n, 0);
  while (true) {
    Morphism candidate{source, target, map, kind};
    if (verify_morphism(candidate).ok()) out.push_back(candidate);
    int i = 0;
    while (i < n && ++map[i] == m) map[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace hyperkalman
