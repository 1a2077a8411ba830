#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperkalman/elem_set.hpp"

namespace hyperkalman {

/// A finite preordered set: elements are indices 0..n-1, the relation is a
/// dense boolean membership table. The relation must be reflexive and
/// transitive; construction rejects anything else rather than closing it.
///
/// Similarity x ≡ y (mutual ⪯) is the central non-classical feature here:
/// the preorder need not be antisymmetric, so distinct elements can be
/// similar.
class Proset {
 public:
  Proset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);

  /// Chain 0 ⪯ 1 ⪯ ... ⪯ n-1 with the given labels.
  static Proset chain(std::vector<std::string> labels);

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_[x]; }

  bool leq(int x, int y) const { return table_[x * n_ + y]; }
  bool sim(int x, int y) const { return leq(x, y) && leq(y, x); }
  bool antisymmetric() const;

  /// B ⪯ C: every element of b precedes every element of c. Vacuously true
  /// when either set is empty.
  bool set_precedes(const ElemSet& b, const ElemSet& c) const;
  bool elem_precedes_set(int x, const ElemSet& b) const;
  bool set_precedes_elem(const ElemSet& b, int x) const;

  /// A ≡ B: mutual set_precedes. Both directions vacuous on empty input.
  bool set_similar(const ElemSet& a, const ElemSet& b) const;

  /// A nonempty set is stable when all members are pairwise similar.
  /// Throws precondition_error on empty input.
  bool is_stable(const ElemSet& a) const;

  /// Min(B) = {x in B : x ⪯ B} and Max(B) = {x in B : B ⪯ x}.
  /// Min(∅) = Max(∅) = ∅.
  ElemSet minima(const ElemSet& b) const;
  ElemSet maxima(const ElemSet& b) const;

  /// Ub(B) = {z : B ⪯ z}, Lb(B) = {z : z ⪯ B}. Ub(∅) = Lb(∅) = full domain.
  ElemSet upper_bounds(const ElemSet& b) const;
  ElemSet lower_bounds(const ElemSet& b) const;

  /// Supremoid x ⋎ y = Min(Ub{x,y}); infimoid x ⋏ y = Max(Lb{x,y}).
  /// Either may be empty, in which case the proset is not a hyperlattice
  /// at (x,y).
  ElemSet supremoid(int x, int y) const;
  ElemSet infimoid(int x, int y) const;

  /// True when every pair has nonempty infimoid and supremoid; otherwise
  /// the first failing pair in (x,y) index order.
  bool is_hyperlattice(std::pair<int, int>* witness = nullptr) const;

  /// R(x,y) = {z : x ⋏ z ⪯ y}. Precondition: hyperlattice.
  ElemSet relative_set(int x, int y) const;

  /// Max(R(x,y)); empty output means no IHL exists at (x,y).
  ElemSet canonical_implication(int x, int y) const;

  /// ⊤ = Max(P) and ⊥ = Min(P); may be empty for a bare proset.
  ElemSet top_set() const;
  ElemSet bottom_set() const;

  /// Partition of the domain into ≡-classes, each listed ascending and the
  /// classes ordered by least member.
  std::vector<std::vector<int>> similarity_classes() const;

  friend bool operator==(const Proset& a, const Proset& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  int n_;
  std::vector<std::string> labels_;
  std::vector<char> table_;  // row-major n*n
};

}  // namespace hyperkalman
