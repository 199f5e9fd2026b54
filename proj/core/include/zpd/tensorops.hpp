#pragma once

// Coordinates on A⊗A: e_i ⊗ e_j sits at index i*n + j. A⊗A is never built as
// an algebra; only the multiplication maps below act on it.

#include <cstddef>
#include <span>

#include "zpd/algebra.hpp"

namespace zpd {

inline std::size_t tensor_index(std::size_t n, std::size_t i, std::size_t j) noexcept {
  return i * n + j;
}

/// φ(x, y) = Σ B_ij x_i y_j.
template <class F>
struct BilinearForm {
  Matrix<F> coeffs;

  std::size_t dim() const noexcept { return coeffs.rows(); }
  bool is_symmetric() const { return coeffs == coeffs.transpose(); }
};

/// n x n² matrix: e_i ⊗ e_j ↦ e_i e_j.
template <class F>
Matrix<F> mu1(const StructureAlgebra<F>& a);

/// n x n² matrix: e_i ⊗ e_j ↦ e_j e_i.
template <class F>
Matrix<F> mu2(const StructureAlgebra<F>& a);

/// mu1 stacked over mu2 (2n x n²).
template <class F>
Matrix<F> mu(const StructureAlgebra<F>& a);

/// mu1 - mu2: e_i ⊗ e_j ↦ [e_i, e_j].
template <class F>
Matrix<F> kappa(const StructureAlgebra<F>& a);

template <class F>
Vector<F> simple_tensor(const StructureAlgebra<F>& a, std::span<const typename F::value_type> x,
                        std::span<const typename F::value_type> y);

/// Swaps the tensor factors: x⊗y ↦ y⊗x.
template <class F>
Vector<F> swap_tensor(std::size_t n, std::span<const typename F::value_type> t);

template <class F>
typename F::value_type apply_form(const BilinearForm<F>& phi, std::span<const typename F::value_type> t);

/// φ(x, y) evaluated directly.
template <class F>
typename F::value_type evaluate_form(const BilinearForm<F>& phi, std::span<const typename F::value_type> x,
                                     std::span<const typename F::value_type> y);

/// Row-major n² vector of coefficients; flatten(φ)·t = apply_form(φ, t).
template <class F>
Vector<F> flatten(const BilinearForm<F>& phi);

template <class F>
BilinearForm<F> unflatten(const F& field, std::size_t n, std::span<const typename F::value_type> v);

}  // namespace zpd
