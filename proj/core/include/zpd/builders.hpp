#pragma once

// Named algebra families. Basis conventions:
//   mat(k)                 matrix units E_rs, row-major (index r*k + s)
//   tri(k)                 E_rs with r <= s, row-major
//   trunc(k)               1, u, ..., u^(k-1)
//   direct_product(a, b)   basis of a followed by basis of b
//   tensor_with_trunc(a,k) e_i ⊗ u^p at index i*k + p (a-index major)
//   mat_over(k, c)         E_rs ⊗ c_t at index (r*k + s)*dim(c) + t
// Builder outputs satisfy the algebra axioms by construction.

#include <cstddef>

#include "zpd/algebra.hpp"

namespace zpd {

/// Full matrix algebra M_k(F). Throws InvalidSize for k < 1.
template <class F>
StructureAlgebra<F> mat(std::size_t k, const F& field);

/// Upper triangular matrices T_k(F).
template <class F>
StructureAlgebra<F> tri(std::size_t k, const F& field);

/// F[X]/(X^k); k >= 2.
template <class F>
StructureAlgebra<F> trunc(std::size_t k, const F& field);

/// The base field as a 1-dimensional algebra.
template <class F>
StructureAlgebra<F> field_algebra(const F& field) {
  return mat(1, field);
}

template <class F>
StructureAlgebra<F> direct_product(const StructureAlgebra<F>& a, const StructureAlgebra<F>& b);

/// a0 ⊗ F[u]/(u^k); k >= 2.
template <class F>
StructureAlgebra<F> tensor_with_trunc(const StructureAlgebra<F>& a0, std::size_t k);

/// M_k(C).
template <class F>
StructureAlgebra<F> mat_over(std::size_t k, const StructureAlgebra<F>& c);

/// The nilpotent generator 1 ⊗ u of tensor_with_trunc(a0, k).
template <class F>
Vector<F> trunc_generator(const StructureAlgebra<F>& a0, std::size_t k);

/// Coordinates of x ⊗ u^power inside tensor_with_trunc(a0, k).
template <class F>
Vector<F> embed_power(const StructureAlgebra<F>& a0, std::size_t k,
                      std::span<const typename F::value_type> x, std::size_t power);

}  // namespace zpd
