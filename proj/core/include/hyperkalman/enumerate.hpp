#pragma once

#include <functional>
#include <vector>

#include "hyperkalman/hyperalgebra.hpp"

namespace hyperkalman {

/// All labeled prosets on n elements, in increasing order of the
/// off-diagonal bitmask (row-major). Labels are "e0","e1",...
/// n must satisfy 1 <= n <= max_n; the default bound keeps the brute-force
/// search at 2^12 masks.
std::vector<Proset> enumerate_prosets(int n, int max_n = 4);

/// Labeled structures of the requested kind (Proset, HL, IHL or CIHL) on n
/// elements, with canonical tables attached, in the enumeration order of
/// the underlying prosets. When dedup is set, only the representative with
/// the least canonical relabeled matrix of each isomorphism class is kept.
std::vector<Hyperalgebra> enumerate_structures(Kind kind, int n, int max_n = 4,
                                               bool dedup = false);

/// Least row-major relation matrix over all relabelings; equal canonical
/// forms mean isomorphic prosets.
std::vector<bool> canonical_form(const Proset& p);

}  // namespace hyperkalman
