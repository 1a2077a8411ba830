#include "hyperkalman/fixtures.hpp"

namespace hyperkalman {
namespace fixtures {

Hyperalgebra ch2() {
  return canonical_hyperalgebra(Proset::chain({"0", "1"}), Kind::IHL);
}

Hyperalgebra ch3() {
  return canonical_hyperalgebra(Proset::chain({"0", "a", "1"}), Kind::IHL);
}

Hyperalgebra eq3() {
  // x ≡ x', both strictly below t.
  std::vector<std::vector<bool>> leq = {
      {true, true, true},
      {true, true, true},
      {false, false, true},
  };
  return canonical_hyperalgebra(Proset({"x", "x'", "t"}, leq), Kind::IHL);
}

Hyperalgebra point() {
  return canonical_hyperalgebra(Proset::chain({"1"}), Kind::IHL);
}

std::string cmin_theorem_battery() {
  return "# C_min theorem battery: formula @ weakest proving system\n"
         "p0 -> p0 @ cw\n"
         "p0 | ~p0 @ cw\n"
         "~~p0 -> p0 @ cw\n"
         "p0 -> (p1 -> p0) @ cw\n"
         "(p0 & p1) -> p0 @ cw\n"
         "(p0 & p1) -> p1 @ cw\n"
         "p0 -> (p0 | p1) @ cw\n"
         "p0 -> (p1 -> (p0 & p1)) @ cw\n"
         "p1 -> (p0 -> p0) @ cw\n"
         "p0 | (p0 -> p1) @ cmin\n";
}

std::string cmin_non_theorem_battery() {
  return "# refutable in C_min bivaluation semantics\n"
         "p0 -> ~~p0 @ cw+\n"
         "q @ none\n"
         "~p0 @ none\n"
         "p0 -> p1 @ none\n"
         "~(p0 & ~p0) @ none\n";
}

}  // namespace fixtures
}  // namespace hyperkalman
