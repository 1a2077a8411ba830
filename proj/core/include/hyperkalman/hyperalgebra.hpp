#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperkalman/proset.hpp"
#include "hyperkalman/report.hpp"

namespace hyperkalman {

/// What a structure claims to be. Verification is always table-vs-axiom
/// checking against this claim, never trust.
enum class Kind {
  Proset,    // bare preorder, no operation tables
  HL,        // Morgado hyperlattice (meet/join tables)
  IHL,       // Sette implicative hyperlattice
  CIHL,      // classical IHL (Peirce condition)
  HCw,       // hyper C_omega algebra (negation, H1+H2)
  HCmin,     // HCw whose reduct is a CIHL
  HCwPlus,   // HCw with H2 replaced by H3 (involutive-up-to-similarity)
};

std::string kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& name);
bool kind_has_ops(Kind k);    // meet/join tables expected
bool kind_has_imp(Kind k);    // implication table expected
bool kind_has_neg(Kind k);    // negation table expected

using HyperTable = std::vector<std::vector<ElemSet>>;  // n x n of ElemSet
using NegTable = std::vector<ElemSet>;                 // n of ElemSet

/// A finite hyperalgebra: a proset plus explicit set-valued operation
/// tables. Tables are stored even when canonical so verification is a
/// table-vs-recomputation comparison and hand-made tables get axiom-level
/// diagnostics. The optional designated set turns the algebra into an
/// Nmatrix.
struct Hyperalgebra {
  Proset proset;
  HyperTable meet;
  HyperTable join;
  HyperTable imp;
  std::optional<NegTable> neg;
  Kind kind = Kind::Proset;
  std::optional<ElemSet> designated;

  int size() const { return proset.size(); }

  const ElemSet& meet_cell(int x, int y) const { return meet[x][y]; }
  const ElemSet& join_cell(int x, int y) const { return join[x][y]; }
  const ElemSet& imp_cell(int x, int y) const { return imp[x][y]; }
  const ElemSet& neg_cell(int x) const { return (*neg)[x]; }

  bool is_designated(int x) const { return designated && designated->contains(x); }

  friend bool operator==(const Hyperalgebra& a, const Hyperalgebra& b) = default;
};

/// Builds the canonical structure of the requested kind over p: meet/join
/// from infimoid/supremoid, imp from Max(R(x,y)). No negation table is
/// attached (there is no canonical one). Cells may be empty only when the
/// proset genuinely lacks the structure; the verifiers report that.
Hyperalgebra canonical_hyperalgebra(const Proset& p, Kind kind);

/// Checks that the proset is a hyperlattice and that the stored meet/join
/// tables equal the infimoid/supremoid everywhere.
Report verify_hl(const Hyperalgebra& h);

/// Checks that h is a Sette implicative hyperlattice:
///  - the reduct is a hyperlattice and meet/join equal infimoid/supremoid,
///  - the implication table equals Max(R(x,y)) everywhere,
///  - axioms I1-I3 hold (diagnosed individually so hand-made tables get
///    pinpointed witnesses).
/// Every violated check is listed with its first witness.
Report verify_ihl(const Hyperalgebra& h);

/// Checks the Peirce condition (I4'): x ⋎ (x ⊸ y) ≡ ⊤ for all pairs.
/// Composites are evaluated on the least-index representative of the
/// stable set x ⊸ y. Meaningful once verify_ihl passes.
Report verify_cihl(const Hyperalgebra& h);

std::string render_pair(const Proset& p, int x, int y);
std::string render_triple(const Proset& p, int x, int y, int z);
std::string render_set(const Proset& p, const ElemSet& s);

}  // namespace hyperkalman
