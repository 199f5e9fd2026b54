#pragma once

// Derivations A -> A (and into ideals M ⊆ A) and A -> A*, where A* carries the
// actions (x·f)(y) = f(yx) and (f·x)(y) = f(xy).
//
// A linear map δ is stored as an n x n matrix whose column j is δ(e_j); in
// subspaces of maps the coordinate of entry (k, j) is j*n + k. For A -> A* the
// column j lists δ(e_j) in the dual basis, i.e. entry (k, j) = δ(e_j)(e_k).

#include <cstddef>
#include <optional>

#include "zpd/zerospans.hpp"

namespace zpd {

template <class F>
struct Derivation {
  Matrix<F> matrix;

  Vector<F> apply(std::span<const typename F::value_type> x) const { return matrix.apply(x); }
};

template <class F>
Derivation<F> derivation_from_coords(const F& field, std::size_t n, std::span<const typename F::value_type> v);

template <class F>
Vector<F> derivation_coords(const Derivation<F>& d);

/// Leibniz rule on all basis pairs.
template <class F>
bool is_derivation(const StructureAlgebra<F>& a, const Derivation<F>& d);

/// Leibniz rule into A* on all basis pairs.
template <class F>
bool is_dual_derivation(const StructureAlgebra<F>& a, const Derivation<F>& d);

template <class F>
Subspace<F> derivation_space(const StructureAlgebra<F>& a);

/// Derivations A -> M for an ideal M ⊆ A.
template <class F>
Subspace<F> derivations_into(const StructureAlgebra<F>& a, const Subspace<F>& module_basis);

/// x ↦ xm - mx for m in A.
template <class F>
Subspace<F> inner_derivation_space(const StructureAlgebra<F>& a);

/// dim Der - dim Inn.
template <class F>
std::size_t h1_dimension(const StructureAlgebra<F>& a);

template <class F>
Subspace<F> dual_derivation_space(const StructureAlgebra<F>& a);

/// x ↦ x·τ - τ·x for τ in A*.
template <class F>
Subspace<F> dual_inner_space(const StructureAlgebra<F>& a);

template <class F>
std::size_t dual_h1_dimension(const StructureAlgebra<F>& a);

template <class F>
bool all_dual_derivations_inner(const StructureAlgebra<F>& a);

/// A derivation carrying a basis element outside the required span.
template <class F>
struct DerivationEscape {
  Derivation<F> derivation;
  std::size_t basis_index;
  Vector<F> image;
};

/// First basis derivation δ and basis e_j with δ(e_j) ∉ N_A. Needs an exhaustive strategy.
template <class F>
std::optional<DerivationEscape<F>> find_corollary_me_escape(const StructureAlgebra<F>& a,
                                                            const SpanStrategy& strategy);

template <class F>
bool corollary_me_check(const StructureAlgebra<F>& a, const SpanStrategy& strategy) {
  return !find_corollary_me_escape(a, strategy);
}

/// First basis derivation A -> M and basis e_j with δ(e_j) ∉ Θ. Needs an exhaustive strategy.
template <class F>
std::optional<DerivationEscape<F>> find_theorem_we_escape(const StructureAlgebra<F>& a, const Subspace<F>& module_basis,
                                                          const SpanStrategy& strategy);

template <class F>
bool theorem_we_check(const StructureAlgebra<F>& a, const Subspace<F>& module_basis, const SpanStrategy& strategy) {
  return !find_theorem_we_escape(a, module_basis, strategy);
}

/// δ(Σ a_p u^p) = Σ p a_p u^p on tensor_with_trunc(a0, k).
template <class F>
Derivation<F> euler_derivation(const F& field, std::size_t a0_dim, std::size_t k);

/// 1⊗w - w⊗1 ∈ zero_pairs for every basis element w; this writes every inner
/// derivation ad_w as Σ L_x R_y over two-sided zero pairs (x, y).
template <class F>
bool inner_derivations_decompose(const StructureAlgebra<F>& a, const Subspace<F>& zero_pairs);

}  // namespace zpd
