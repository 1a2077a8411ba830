#pragma once

#include <functional>
#include <vector>

#include "hyperkalman/hc.hpp"
#include "hyperkalman/hyperalgebra.hpp"

namespace hyperkalman {

/// A snapshot records the values of a formula and its negation over the
/// base structure: an ordered pair of base element indices.
struct Snapshot {
  int z1 = 0;
  int z2 = 0;
  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

/// The hyper swap structure over a base IHL: the snapshot list in
/// lexicographic (z1,z2) order, the hyperalgebra over the snapshots, and
/// the designated set {z : z1 in ⊤}. The algebra's kind matches the
/// variant.
struct SwapStructure {
  Hyperalgebra base;
  Variant variant = Variant::Cw;
  std::vector<Snapshot> snapshots;
  Hyperalgebra algebra;  // carries the designated set

  int index_of(Snapshot z) const;  // -1 when absent
};

/// All pairs z with z1 ⋎ z2 ≡ ⊤ in the base, in lexicographic order.
/// The membership test is implemented as supremoid(z1,z2) ⊆ ⊤, which is
/// equivalent because supremoids are stable and ⊤ is the set of maxima.
/// Requires the base to pass verify_ihl.
std::vector<Snapshot> swap_domain(const Hyperalgebra& base);

/// Builds the hyper swap structure for the variant:
///   meet/join/imp: u in z # w iff u1 in z1 # w1,
///   Cw/Cmin negation: u1 = z2 and u2 ⪯ z1,
///   Cw+  negation:    u1 = z2 and u2 ≡ z1.
/// Cmin is the Cw construction gated by a CIHL check on the base.
/// The matching verifier runs as a post-build assertion. Bases larger
/// than 12 elements need allow_large (tables grow quartically).
SwapStructure build_hyper_swap(const Hyperalgebra& base, Variant variant,
                               bool allow_large = false);

/// Snapshot order: z ⪯ w iff z1 ⪯ w1 in the base. Also the order of
/// s.algebra.proset; the two are asserted equal at build time.
bool snapshot_order(const SwapStructure& s, Snapshot z, Snapshot w);

/// Wraps a deterministic implicative lattice (an antisymmetric proset with
/// lattice operations) as an IHL with singleton tables, so the classical
/// swap construction is the hyper one over the embedding. Throws when the
/// supplied operations disagree with the canonical ones.
Hyperalgebra embed_deterministic_lattice(
    const Proset& order, const std::function<int(int, int)>& meet,
    const std::function<int(int, int)>& join,
    const std::function<int(int, int)>& imp);

}  // namespace hyperkalman
