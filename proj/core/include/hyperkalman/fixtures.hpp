#pragma once

#include "hyperkalman/hyperalgebra.hpp"

namespace hyperkalman {
namespace fixtures {

/// The two-element chain 0 ⪯ 1 with canonical IHL tables.
Hyperalgebra ch2();

/// The three-element chain 0 ⪯ a ⪯ 1 with canonical IHL tables.
Hyperalgebra ch3();

/// Domain {x, x', t} with x ≡ x' and both below t: the smallest genuinely
/// non-antisymmetric IHL. Canonical tables.
Hyperalgebra eq3();

/// The one-element IHL.
Hyperalgebra point();

/// The shipped C_min batteries (formula @ weakest-proving-system lines).
/// The theorem battery has ten entries including PL, EM and cf; the
/// non-theorem battery has five including ce and a bare variable.
std::string cmin_theorem_battery();
std::string cmin_non_theorem_battery();

}  // namespace fixtures
}  // namespace hyperkalman
