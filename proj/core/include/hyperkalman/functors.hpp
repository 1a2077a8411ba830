#pragma once

#include <vector>

#include "hyperkalman/hc.hpp"
#include "hyperkalman/swap.hpp"

namespace hyperkalman {

enum class MorphKind { IHL, HC };

/// A hyperalgebra morphism: a total map on element indices that preserves
/// membership in every hyperoperation cell (and in the negation cells for
/// kind HC). Endpoints are stored by value; all structures here are small.
struct Morphism {
  Hyperalgebra source;
  Hyperalgebra target;
  std::vector<int> map;
  MorphKind kind = MorphKind::IHL;

  int apply(int x) const { return map[x]; }

  friend bool operator==(const Morphism& a, const Morphism& b) = default;
};

Morphism identity_morphism(const Hyperalgebra& h, MorphKind kind);

/// g after f; endpoints must match structurally.
Morphism compose(const Morphism& f, const Morphism& g);

/// Exhaustively checks the preservation clauses for the kind; the report
/// carries the first violating triple per clause.
Report verify_morphism(const Morphism& m);

/// Monotonicity x ⪯ y implies f(x) ⪯ f(y). A theorem for verified
/// morphisms; a failure here signals a bug, so callers treat false as one.
bool monotone_check(const Morphism& m);

/// The Kalman functor on morphisms: S(f)(z1,z2) = (f(z1), f(z2)), between
/// the swap structures of the endpoints for the given variant. Asserts
/// componentwise images are snapshots of the target and that the result
/// verifies as an HC morphism.
Morphism lift_swap_morphism(const Morphism& f, Variant variant);

/// The quotient functor on morphisms: U(f)([x]) = [f(x)], between the
/// quotients of the (enriched) endpoints. Asserts well-definedness and the
/// IHL-morphism property.
Morphism quotient_morphism(const Morphism& g, Variant variant);

/// Φ_L : L → U(S(L)), x ↦ [(x,y)] with y the least-index member of
/// x ⊸ x. Asserts that every valid witness (any y with (x,y) a snapshot)
/// lands in the same class.
Morphism phi(const Hyperalgebra& base, Variant variant = Variant::Cw);

/// Ψ_A : A → S(U(A)), x ↦ ([x],[z]) with z the least-index member of ÷x.
/// Asserts all members of ÷x land in the same class.
Morphism psi(const Hyperalgebra& enriched, Variant variant = Variant::Cw);

/// Bijective and the inverse map is itself a verified morphism of the same
/// kind; both are required.
Report verify_isomorphism(const Morphism& m);

/// Pointwise commutation of the Φ square for an IHL morphism f:
/// U(S(f)) ∘ Φ_src = Φ_tgt ∘ f.
Report verify_naturality_phi(const Morphism& f, Variant variant = Variant::Cw);

/// Pointwise commutation of the Ψ square for an HC morphism g between
/// enriched algebras: S(U(g)) ∘ Ψ_src = Ψ_tgt ∘ g.
Report verify_naturality_psi(const Morphism& g, Variant variant = Variant::Cw);

/// Identity and composition laws for S and U over a corpus of verified
/// morphisms; composable pairs are found by matching endpoints.
Report functor_laws(const std::vector<Morphism>& corpus, Variant variant = Variant::Cw);

/// All verified morphisms between two structures (|source|^|source| maps
/// filtered); practical for the small corpus sizes used in tests.
std::vector<Morphism> all_morphisms(const Hyperalgebra& source,
                                    const Hyperalgebra& target, MorphKind kind);

}  // namespace hyperkalman
