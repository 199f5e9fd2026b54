#pragma once

// Separability idempotents e = Σ t_ab e_a⊗e_b with Σ t_ab e_a e_b = 1 and
// x·e = e·x for the outer actions x·(p⊗q) = xp⊗q, (p⊗q)·x = p⊗qx.

#include <optional>

#include "zpd/properties.hpp"

namespace zpd {

template <class F>
struct SeparabilityElement {
  /// Coordinates in tensor_index order.
  Vector<F> tensor;
};

/// Any solution of the defining system, re-verified; nullopt when inconsistent.
template <class F>
std::optional<SeparabilityElement<F>> separability_idempotent(const StructureAlgebra<F>& a);

template <class F>
bool is_separable(const StructureAlgebra<F>& a) {
  return separability_idempotent(a).has_value();
}

template <class F>
bool verify_separability_element(const StructureAlgebra<F>& a, const SeparabilityElement<F>& e);

/// τ1(w) = Σ t_ab φ(e_a, e_b w), τ2(w) = φ(1, w) - τ1(w). φ must annihilate the
/// zero-pair span. Throws InternalError when the result fails to reproduce φ.
template <class F>
Decomposition<F> reconstruct_decomposition(const StructureAlgebra<F>& a, const BilinearForm<F>& phi,
                                           const SeparabilityElement<F>& e);

}  // namespace zpd
