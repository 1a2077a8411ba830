#include "hyperkalman/proset.hpp"

#include <algorithm>
#include <set>

#include "hyperkalman/errors.hpp"

namespace hyperkalman {

Proset::Proset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
  if (n_ < 1) throw precondition_error("a proset needs at least one element");
  std::set<std::string> distinct(labels_.begin(), labels_.end());
  if (static_cast<int>(distinct.size()) != n_)
    throw shape_error("labels are not distinct");
  if (static_cast<int>(leq.size()) != n_)
    throw shape_error("leq table has " + std::to_string(leq.size()) +
                      " rows, expected " + std::to_string(n_));
  table_.assign(n_ * n_, 0);
  for (int x = 0; x < n_; ++x) {
    if (static_cast<int>(leq[x].size()) != n_)
      throw shape_error("leq row " + std::to_string(x) + " has wrong length");
    for (int y = 0; y < n_; ++y) table_[x * n_ + y] = leq[x][y] ? 1 : 0;
  }
  for (int x = 0; x < n_; ++x)
    if (!this->leq(x, x))
      throw shape_error("relation is not reflexive at " + labels_[x]);
  // Recompute the transitive closure and compare; never close silently.
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (this->leq(x, y))
        for (int z = 0; z < n_; ++z)
          if (this->leq(y, z) && !this->leq(x, z))
            throw shape_error("relation is not transitive: " + labels_[x] +
                              " ⪯ " + labels_[y] + " ⪯ " + labels_[z] +
                              " but not " + labels_[x] + " ⪯ " + labels_[z]);
}

Proset Proset::chain(std::vector<std::string> labels) {
  int n = static_cast<int>(labels.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) leq[x][y] = true;
  return Proset(std::move(labels), std::move(leq));
}

bool Proset::antisymmetric() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (x != y && sim(x, y)) return false;
  return true;
}

bool Proset::set_precedes(const ElemSet& b, const ElemSet& c) const {
  for (int x : b.members())
    for (int y : c.members())
      if (!leq(x, y)) return false;
  return true;
}

bool Proset::elem_precedes_set(int x, const ElemSet& b) const {
  for (int y : b.members())
    if (!leq(x, y)) return false;
  return true;
}

bool Proset::set_precedes_elem(const ElemSet& b, int x) const {
  for (int y : b.members())
    if (!leq(y, x)) return false;
  return true;
}

bool Proset::set_similar(const ElemSet& a, const ElemSet& b) const {
  return set_precedes(a, b) && set_precedes(b, a);
}

bool Proset::is_stable(const ElemSet& a) const {
  if (a.empty())
    throw precondition_error("stability is defined for nonempty sets only");
  auto xs = a.members();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!sim(xs[i], xs[j])) return false;
  return true;
}

ElemSet Proset::minima(const ElemSet& b) const {
  ElemSet out(n_);
  for (int x : b.members())
    if (elem_precedes_set(x, b)) out.insert(x);
  return out;
}

ElemSet Proset::maxima(const ElemSet& b) const {
  ElemSet out(n_);
  for (int x : b.members())
    if (set_precedes_elem(b, x)) out.insert(x);
  return out;
}

ElemSet Proset::upper_bounds(const ElemSet& b) const {
  ElemSet out(n_);
  for (int z = 0; z < n_; ++z)
    if (set_precedes_elem(b, z)) out.insert(z);
  return out;
}

ElemSet Proset::lower_bounds(const ElemSet& b) const {
  ElemSet out(n_);
  for (int z = 0; z < n_; ++z)
    if (elem_precedes_set(z, b)) out.insert(z);
  return out;
}

ElemSet Proset::supremoid(int x, int y) const {
  return minima(upper_bounds(ElemSet::of(n_, {x, y})));
}

ElemSet Proset::infimoid(int x, int y) const {
  return maxima(lower_bounds(ElemSet::of(n_, {x, y})));
}

bool Proset::is_hyperlattice(std::pair<int, int>* witness) const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (infimoid(x, y).empty() || supremoid(x, y).empty()) {
        if (witness) *witness = {x, y};
        return false;
      }
  return true;
}

ElemSet Proset::relative_set(int x, int y) const {
  ElemSet out(n_);
  ElemSet target = ElemSet::of(n_, {y});
  for (int z = 0; z < n_; ++z)
    if (set_precedes(infimoid(x, z), target)) out.insert(z);
  return out;
}

ElemSet Proset::canonical_implication(int x, int y) const {
  return maxima(relative_set(x, y));
}

ElemSet Proset::top_set() const { return maxima(ElemSet::full(n_)); }

ElemSet Proset::bottom_set() const { return minima(ElemSet::full(n_)); }

std::vector<std::vector<int>> Proset::similarity_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(n_, false);
  for (int x = 0; x < n_; ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int y = x; y < n_; ++y)
      if (sim(x, y)) {
        cls.push_back(y);
        seen[y] = true;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace hyperkalman
