#include "zpd/separability.hpp"

#include <stdexcept>

#include "zpd/errors.hpp"

namespace zpd {

template <class F>
std::optional<SeparabilityElement<F>> separability_idempotent(const StructureAlgebra<F>& a) {
  const auto n = a.dim();
  const F& f = a.field();
  const auto unknowns = n * n;
  // n rows for the product, n·n² rows for the commutation with each e_k.
  Matrix<F> system(f, n + n * n * n, unknowns);
  Vector<F> rhs(n + n * n * n, f.zero());
  for (std::size_t a1 = 0; a1 < n; ++a1) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t m = 0; m < n; ++m) system(m, tensor_index(n, a1, b)) = a.constant(a1, b, m);
    }
  }
  for (std::size_t m = 0; m < n; ++m) rhs[m] = a.unit()[m];
  // coefficient of e_c⊗e_d: Σ_a t_ad c^c_ka - Σ_b t_cb c^d_bk = 0
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t d = 0; d < n; ++d) {
        const auto row = n + (k * n + c) * n + d;
        for (std::size_t s = 0; s < n; ++s) {
          auto& left = system(row, tensor_index(n, s, d));
          left = f.add(left, a.constant(k, s, c));
          auto& right = system(row, tensor_index(n, c, s));
          right = f.sub(right, a.constant(s, k, d));
        }
      }
    }
  }
  auto solution = solve_linear(system, std::span<const typename F::value_type>(rhs));
  if (!solution) return std::nullopt;
  SeparabilityElement<F> e{std::move(*solution)};
  if (!verify_separability_element(a, e)) throw InternalError("separability_idempotent: solution fails verification");
  return e;
}

template <class F>
bool verify_separability_element(const StructureAlgebra<F>& a, const SeparabilityElement<F>& e) {
  const auto n = a.dim();
  const F& f = a.field();
  if (e.tensor.size() != n * n) return false;
  if (mu1(a).apply(e.tensor) != a.unit()) return false;
  for (std::size_t k = 0; k < n; ++k) {
    auto left = zero_vector(f, n * n);
    auto right = zero_vector(f, n * n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        const auto t = e.tensor[tensor_index(n, p, q)];
        if (t == f.zero()) continue;
        for (std::size_t m = 0; m < n; ++m) {
          auto& l = left[tensor_index(n, m, q)];
          l = f.add(l, f.mul(t, a.constant(k, p, m)));
          auto& r = right[tensor_index(n, p, m)];
          r = f.add(r, f.mul(t, a.constant(q, k, m)));
        }
      }
    }
    if (left != right) return false;
  }
  return true;
}

template <class F>
Decomposition<F> reconstruct_decomposition(const StructureAlgebra<F>& a, const BilinearForm<F>& phi,
                                           const SeparabilityElement<F>& e) {
  const auto n = a.dim();
  const F& f = a.field();
  if (phi.dim() != n) throw DimensionMismatch("reconstruct_decomposition: form has the wrong size");
  if (!verify_separability_element(a, e)) throw std::invalid_argument("reconstruct_decomposition: invalid element");
  Decomposition<F> d{zero_vector(f, n), zero_vector(f, n)};
  const auto one = std::span<const typename F::value_type>(a.unit());
  for (std::size_t w = 0; w < n; ++w) {
    auto tau1 = f.zero();
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        const auto t = e.tensor[tensor_index(n, p, q)];
        if (t == f.zero()) continue;
        auto pe = a.basis_element(p);
        tau1 = f.add(tau1, f.mul(t, evaluate_form(phi, std::span<const typename F::value_type>(pe), a.product(q, w))));
      }
    }
    auto ew = a.basis_element(w);
    d.tau1[w] = tau1;
    d.tau2[w] = f.sub(evaluate_form(phi, one, std::span<const typename F::value_type>(ew)), tau1);
  }
  if (!verify_decomposition(a, phi, d)) {
    throw InternalError("reconstruct_decomposition: reconstructed pair does not reproduce the form");
  }
  return d;
}

#define ZPD_INSTANTIATE_SEPARABILITY(F)                                                                        \
  template std::optional<SeparabilityElement<F>> separability_idempotent<F>(const StructureAlgebra<F>&);      \
  template bool verify_separability_element<F>(const StructureAlgebra<F>&, const SeparabilityElement<F>&);     \
  template Decomposition<F> reconstruct_decomposition<F>(const StructureAlgebra<F>&, const BilinearForm<F>&, \
                                                         const SeparabilityElement<F>&);

ZPD_INSTANTIATE_SEPARABILITY(PrimeField)
ZPD_INSTANTIATE_SEPARABILITY(RationalField)

}  // namespace zpd
