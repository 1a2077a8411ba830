#pragma once

#include <vector>

#include "hyperkalman/hyperalgebra.hpp"

namespace hyperkalman {

/// Which hyper C algebra class a structure is checked against. Cmin and
/// CwPlus differ from Cw only in the base condition (CIHL reduct) and in
/// H2 being strengthened to H3, respectively.
enum class Variant { Cw, Cmin, CwPlus };

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

/// H1: y in ÷x and w in x ⋎ y imply w in ⊤ (equivalently x ⋎ ÷x ≡ ⊤), and
/// H2: y in ÷x and w in ÷y imply w ⪯ x (equivalently ÷÷x ⪯ x).
/// Checked elementwise because ÷-stability is an enrichment axiom, not an
/// assumption on the input; on stable tables the two readings agree.
/// Runs verify_ihl on the reduct first.
Report verify_hcw(const Hyperalgebra& h);

/// verify_hcw plus the CIHL condition on the reduct.
Report verify_hcmin(const Hyperalgebra& h);

/// H1 plus H3: y in ÷x and w in ÷y imply w ≡ x (÷÷x ≡ x).
Report verify_hcwplus(const Hyperalgebra& h);

/// The relation x ∼ y iff some z has x,y in ÷z, computed extensionally
/// from the negation table. classes is populated only when the relation is
/// an equivalence; class indices are ordered by least member.
struct SimRelation {
  std::vector<std::vector<bool>> table;
  bool is_equivalence = false;
  std::vector<std::vector<int>> classes;

  bool related(int x, int y) const { return table[x][y]; }
  /// Class index of x; requires is_equivalence.
  int class_of(int x) const;
};

SimRelation sim_relation(const Hyperalgebra& h);

/// Enrichment axioms E0-E4 on top of the variant's base verification.
/// The base checks always run; the E-axioms are evaluated in order and
/// stop at the first failure (later axioms may not be meaningful once ∼
/// degenerates). E3 searches all z for a witness.
Report verify_enriched(const Hyperalgebra& h, Variant variant);

/// The quotient U(A) = A/∼ with pointwise-image meet/join, canonical
/// implication over the quotient proset, and the projection map.
/// Requires verify_enriched to pass; throws precondition_error otherwise.
/// The construction re-verifies the result as an IHL and asserts that the
/// canonical implication agrees with the image {[z] : z in Max(R(x,y))}.
struct QuotientResult {
  Hyperalgebra quotient;
  std::vector<int> projection;  // element index -> class index
};

QuotientResult quotient(const Hyperalgebra& h, Variant variant = Variant::Cw);

}  // namespace hyperkalman
