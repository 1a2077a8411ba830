#include "hyperkalman/swap.hpp"

#include <stdexcept>

#include "hyperkalman/errors.hpp"

namespace hyperkalman {

int SwapStructure::index_of(Snapshot z) const {
  for (std::size_t i = 0; i < snapshots.size(); ++i)
    if (snapshots[i] == z) return static_cast<int>(i);
  return -1;
}

std::vector<Snapshot> swap_domain(const Hyperalgebra& base) {
  Report ihl = verify_ihl(base);
  if (!ihl.ok()) {
    const Check* f = ihl.first_failure();
    throw precondition_error("swap domain needs an IHL base; " + f->name +
                             " fails at " + f->witness);
  }
  const Proset& p = base.proset;
  ElemSet top = p.top_set();
  std::vector<Snapshot> out;
  for (int z1 = 0; z1 < p.size(); ++z1)
    for (int z2 = 0; z2 < p.size(); ++z2)
      if (base.join_cell(z1, z2).subset_of(top)) out.push_back({z1, z2});
  // Fact 1: (a,b) is a snapshot for every a and every b in ⊤.
  for (int a = 0; a < p.size(); ++a)
    for (int b : top.members()) {
      bool present = false;
      for (const Snapshot& z : out)
        if (z.z1 == a && z.z2 == b) present = true;
      if (!present)
        throw std::logic_error("snapshot domain misses (" + p.label(a) + "," +
                               p.label(b) + ")");
    }
  return out;
}

SwapStructure build_hyper_swap(const Hyperalgebra& base, Variant variant,
                               bool allow_large) {
  if (base.size() > 12 && !allow_large)
    throw precondition_error(
        "base has more than 12 elements; pass allow_large to override");
  if (variant == Variant::Cmin) {
    Report cihl = verify_cihl(base);
    if (!cihl.ok())
      throw precondition_error(
          "the C_min construction needs a classical base; I4 fails at " +
          cihl.first_failure()->witness);
  }

  const Proset& p = base.proset;
  std::vector<Snapshot> snaps = swap_domain(base);
  int m = static_cast<int>(snaps.size());

  std::vector<std::string> labels(m);
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) {
    labels[i] = "(" + p.label(snaps[i].z1) + "," + p.label(snaps[i].z2) + ")";
    for (int j = 0; j < m; ++j) leq[i][j] = p.leq(snaps[i].z1, snaps[j].z1);
  }
  Proset sp(labels, leq);

  Kind kind = variant == Variant::Cw      ? Kind::HCw
              : variant == Variant::Cmin  ? Kind::HCmin
                                          : Kind::HCwPlus;
  Hyperalgebra alg{sp, HyperTable(m, std::vector<ElemSet>(m)),
                   HyperTable(m, std::vector<ElemSet>(m)),
                   HyperTable(m, std::vector<ElemSet>(m)),
                   NegTable(m, ElemSet(m)), kind, ElemSet(m)};

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const ElemSet& meet1 = base.meet_cell(snaps[i].z1, snaps[j].z1);
      const ElemSet& join1 = base.join_cell(snaps[i].z1, snaps[j].z1);
      const ElemSet& imp1 = base.imp_cell(snaps[i].z1, snaps[j].z1);
      ElemSet meet(m), join(m), imp(m);
      for (int u = 0; u < m; ++u) {
        if (meet1.contains(snaps[u].z1)) meet.insert(u);
        if (join1.contains(snaps[u].z1)) join.insert(u);
        if (imp1.contains(snaps[u].z1)) imp.insert(u);
      }
      alg.meet[i][j] = meet;
      alg.join[i][j] = join;
      alg.imp[i][j] = imp;
    }
    ElemSet negs(m);
    for (int u = 0; u < m; ++u) {
      if (snaps[u].z1 != snaps[i].z2) continue;
      bool second_ok = variant == Variant::CwPlus
                           ? p.sim(snaps[u].z2, snaps[i].z1)
                           : p.leq(snaps[u].z2, snaps[i].z1);
      if (second_ok) negs.insert(u);
    }
    (*alg.neg)[i] = negs;
  }

  ElemSet top = p.top_set();
  ElemSet designated(m);
  for (int i = 0; i < m; ++i)
    if (top.contains(snaps[i].z1)) designated.insert(i);
  alg.designated = designated;

  SwapStructure s{base, variant, std::move(snaps), std::move(alg)};

  // Post-build assertions: the designated set is the maxima of the
  // snapshot proset, rows and columns depend only on first coordinates,
  // and the matching verifier accepts.
  if (!(designated == sp.top_set()))
    throw std::logic_error("designated set differs from Max of the snapshot proset");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (s.snapshots[i].z1 != s.snapshots[j].z1) continue;
      for (int k = 0; k < m; ++k)
        if (!(s.algebra.meet[i][k] == s.algebra.meet[j][k]) ||
            !(s.algebra.meet[k][i] == s.algebra.meet[k][j]) ||
            !(s.algebra.join[i][k] == s.algebra.join[j][k]) ||
            !(s.algebra.join[k][i] == s.algebra.join[k][j]) ||
            !(s.algebra.imp[i][k] == s.algebra.imp[j][k]) ||
            !(s.algebra.imp[k][i] == s.algebra.imp[k][j]))
          throw std::logic_error("swap table row/column not first-coordinate determined");
    }
  Report check = variant == Variant::Cw      ? verify_hcw(s.algebra)
                 : variant == Variant::Cmin  ? verify_hcmin(s.algebra)
                                             : verify_hcwplus(s.algebra);
  if (!check.ok()) {
    const Check* f = check.first_failure();
    throw std::logic_error("freshly built swap structure fails " + f->name +
                           " at " + f->witness);
  }
  return s;
}

bool snapshot_order(const SwapStructure& s, Snapshot z, Snapshot w) {
  int i = s.index_of(z), j = s.index_of(w);
  if (i < 0 || j < 0)
    throw precondition_error("snapshot is not in the swap domain");
  bool by_base = s.base.proset.leq(z.z1, w.z1);
  if (by_base != s.algebra.proset.leq(i, j))
    throw std::logic_error("snapshot proset disagrees with first-coordinate order");
  return by_base;
}

Hyperalgebra embed_deterministic_lattice(
    const Proset& order, const std::function<int(int, int)>& meet,
    const std::function<int(int, int)>& join,
    const std::function<int(int, int)>& imp) {
  if (!order.antisymmetric())
    throw precondition_error("embedding needs a partial order");
  Hyperalgebra h = canonical_hyperalgebra(order, Kind::IHL);
  int n = order.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ElemSet m = ElemSet::of(n, {meet(x, y)});
      ElemSet j = ElemSet::of(n, {join(x, y)});
      ElemSet i = ElemSet::of(n, {imp(x, y)});
      if (!(h.meet[x][y] == m))
        throw precondition_error("meet(" + order.label(x) + "," + order.label(y) +
                                 ") disagrees with the canonical infimoid");
      if (!(h.join[x][y] == j))
        throw precondition_error("join(" + order.label(x) + "," + order.label(y) +
                                 ") disagrees with the canonical supremoid");
      if (!(h.imp[x][y] == i))
        throw precondition_error("imp(" + order.label(x) + "," + order.label(y) +
                                 ") disagrees with the canonical residual");
    }
  if (!verify_ihl(h).ok())
    throw precondition_error("the order does not carry an implicative lattice");
  return h;
}

}  // namespace hyperkalman
