#include "hyperkalman/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hyperkalman/errors.hpp"

namespace hyperkalman {

namespace {

bool transitive(const std::vector<std::vector<bool>>& leq, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq[x][y])
        for (int z = 0; z < n; ++z)
          if (leq[y][z] && !leq[x][z]) return false;
  return true;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

}  // namespace

std::vector<Proset> enumerate_prosets(int n, int max_n) {
  if (n < 1) throw precondition_error("element count must be at least 1");
  if (n > max_n)
    throw precondition_error("element count " + std::to_string(n) +
                             " exceeds the configured bound " +
                             std::to_string(max_n));
  int bits = n * (n - 1);
  std::vector<Proset> out;
  for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    int bit = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y)
          leq[x][y] = true;
        else
          leq[x][y] = (mask >> bit++) & 1;
      }
    if (!transitive(leq, n)) continue;
    out.emplace_back(default_labels(n), std::move(leq));
  }
  return out;
}

std::vector<bool> canonical_form(const Proset& p) {
  int n = p.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> cur;
    cur.reserve(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) cur.push_back(p.leq(perm[x], perm[y]));
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Hyperalgebra> enumerate_structures(Kind kind, int n, int max_n,
                                               bool dedup) {
  if (kind != Kind::Proset && kind != Kind::HL && kind != Kind::IHL &&
      kind != Kind::CIHL)
    throw precondition_error("enumerate supports proset, hl, ihl, cihl");
  std::vector<Hyperalgebra> out;
  std::set<std::vector<bool>> seen;
  for (Proset& p : enumerate_prosets(n, max_n)) {
    Hyperalgebra h = canonical_hyperalgebra(p, kind);
    if (kind != Kind::Proset) {
      if (!p.is_hyperlattice()) continue;
      if (kind != Kind::HL) {
        bool imp_total = true;
        for (int x = 0; x < n && imp_total; ++x)
          for (int y = 0; y < n && imp_total; ++y)
            if (h.imp[x][y].empty()) imp_total = false;
        if (!imp_total) continue;
        if (kind == Kind::CIHL && !verify_cihl(h).ok()) continue;
      }
    }
    if (dedup) {
      auto form = canonical_form(p);
      if (!seen.insert(std::move(form)).second) continue;
    }
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace hyperkalman
