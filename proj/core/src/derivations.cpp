#include "zpd/derivations.hpp"

#include <type_traits>

#include "zpd/bitlinalg.hpp"
#include "zpd/errors.hpp"
#include "zpd/tensorops.hpp"

namespace zpd {

namespace {

// Homogeneous linear system assembled row by row; rows are reduced as they
// arrive so storage stays at most unknowns x unknowns. GF(2) rows are packed.
template <class F>
class HomogeneousSystem {
 public:
  HomogeneousSystem(const F& field, std::size_t unknowns) : field_(field), rows_(field, unknowns), bits_(unknowns) {
    if constexpr (std::is_same_v<F, PrimeField>) packed_ = field.modulus() == 2;
  }

  void add(const Vector<F>& row) {
    if (is_zero_vector(field_, std::span<const typename F::value_type>(row))) return;
    if constexpr (std::is_same_v<F, PrimeField>) {
      if (packed_) {
        bits_.insert(to_bits(field_, row));
        return;
      }
    }
    rows_.insert(row);
  }

  Subspace<F> solutions() const {
    if constexpr (std::is_same_v<F, PrimeField>) {
      if (packed_) return to_subspace(bit_kernel(bits_.echelon().basis));
    }
    return kernel(rows_.to_subspace().basis());
  }

 private:
  F field_;
  SpanAccumulator<F> rows_;
  BitSpan bits_;
  bool packed_ = false;
};

template <class F>
std::size_t map_index(std::size_t n, std::size_t column, std::size_t coord) {
  return column * n + coord;
}

// Leibniz equations into A: δ(e_i e_j) - δ(e_i) e_j - e_i δ(e_j) = 0.
template <class F>
void add_leibniz(const StructureAlgebra<F>& a, HomogeneousSystem<F>& system) {
  const auto n = a.dim();
  const F& f = a.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0; r < n; ++r) {
        auto row = zero_vector(f, n * n);
        for (std::size_t m = 0; m < n; ++m) {
          auto& e = row[map_index<F>(n, m, r)];
          e = f.add(e, a.constant(i, j, m));
        }
        for (std::size_t s = 0; s < n; ++s) {
          auto& e1 = row[map_index<F>(n, i, s)];
          e1 = f.sub(e1, a.constant(s, j, r));
          auto& e2 = row[map_index<F>(n, j, s)];
          e2 = f.sub(e2, a.constant(i, s, r));
        }
        system.add(row);
      }
    }
  }
}

}  // namespace

template <class F>
Derivation<F> derivation_from_coords(const F& field, std::size_t n, std::span<const typename F::value_type> v) {
  if (v.size() != n * n) throw DimensionMismatch("derivation_from_coords: wrong length");
  Matrix<F> m(field, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) m(k, j) = v[map_index<F>(n, j, k)];
  }
  return {std::move(m)};
}

template <class F>
Vector<F> derivation_coords(const Derivation<F>& d) {
  const auto n = d.matrix.rows();
  Vector<F> v(n * n, d.matrix.field().zero());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) v[map_index<F>(n, j, k)] = d.matrix(k, j);
  }
  return v;
}

template <class F>
bool is_derivation(const StructureAlgebra<F>& a, const Derivation<F>& d) {
  const auto n = a.dim();
  const F& f = a.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto lhs = d.apply(a.product(i, j));
      auto di = d.matrix.column(i), dj = d.matrix.column(j);
      auto rhs = add(f, std::span<const typename F::value_type>(multiply(a, std::span<const typename F::value_type>(di),
                                                                         std::span<const typename F::value_type>(a.basis_element(j)))),
                     std::span<const typename F::value_type>(multiply(a, std::span<const typename F::value_type>(a.basis_element(i)),
                                                                      std::span<const typename F::value_type>(dj))));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

template <class F>
bool is_dual_derivation(const StructureAlgebra<F>& a, const Derivation<F>& d) {
  const auto n = a.dim();
  const F& f = a.field();
  // δ(v)(w) = wᵀ D v
  auto pairing = [&](std::span<const typename F::value_type> v, std::span<const typename F::value_type> w) {
    return dot(f, w, std::span<const typename F::value_type>(d.apply(v)));
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        auto ei = a.basis_element(i), ej = a.basis_element(j), ek = a.basis_element(k);
        auto lhs = pairing(a.product(i, j), ek);
        auto rhs = f.add(pairing(ei, a.product(j, k)), pairing(ej, a.product(k, i)));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

template <class F>
Subspace<F> derivation_space(const StructureAlgebra<F>& a) {
  HomogeneousSystem<F> system(a.field(), a.dim() * a.dim());
  add_leibniz(a, system);
  auto der = system.solutions();
  for (std::size_t r = 0; r < der.dim(); ++r) {
    if (!is_derivation(a, derivation_from_coords(a.field(), a.dim(), der.basis().row(r)))) {
      throw InternalError("derivation_space: solution violates the Leibniz rule");
    }
  }
  return der;
}

template <class F>
Subspace<F> derivations_into(const StructureAlgebra<F>& a, const Subspace<F>& module_basis) {
  const auto n = a.dim();
  const F& f = a.field();
  if (module_basis.ambient_dim() != n) throw DimensionMismatch("derivations_into: module lives in the wrong space");
  if (!is_two_sided_ideal(a, module_basis)) throw BimoduleError("derivations_into: module is not an ideal");
  HomogeneousSystem<F> system(f, n * n);
  add_leibniz(a, system);
  auto constraints = annihilator(module_basis);
  for (std::size_t g = 0; g < constraints.dim(); ++g) {
    for (std::size_t j = 0; j < n; ++j) {
      auto row = zero_vector(f, n * n);
      for (std::size_t k = 0; k < n; ++k) row[map_index<F>(n, j, k)] = constraints.basis()(g, k);
      system.add(row);
    }
  }
  return system.solutions();
}

template <class F>
Subspace<F> inner_derivation_space(const StructureAlgebra<F>& a) {
  const auto n = a.dim();
  const F& f = a.field();
  std::vector<Vector<F>> gens;
  for (std::size_t t = 0; t < n; ++t) {
    // x ↦ x e_t - e_t x; column j is e_j e_t - e_t e_j
    auto v = zero_vector(f, n * n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) v[map_index<F>(n, j, k)] = f.sub(a.constant(j, t, k), a.constant(t, j, k));
    }
    gens.push_back(std::move(v));
  }
  auto inner = Subspace<F>::span_of(f, n * n, gens);
  if (inner.dim() + center(a).dim() != n) throw InternalError("inner_derivation_space: dimension mismatch with center");
  return inner;
}

template <class F>
std::size_t h1_dimension(const StructureAlgebra<F>& a) {
  auto der = derivation_space(a);
  auto inner = inner_derivation_space(a);
  if (!subspace_leq(inner, der)) throw InternalError("inner derivations outside the derivation space");
  return der.dim() - inner.dim();
}

template <class F>
Subspace<F> dual_derivation_space(const StructureAlgebra<F>& a) {
  const auto n = a.dim();
  const F& f = a.field();
  HomogeneousSystem<F> system(f, n * n);
  // δ(e_i e_j)(e_k) = δ(e_i)(e_j e_k) + δ(e_j)(e_k e_i)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        auto row = zero_vector(f, n * n);
        for (std::size_t m = 0; m < n; ++m) {
          auto& e0 = row[map_index<F>(n, m, k)];
          e0 = f.add(e0, a.constant(i, j, m));
          auto& e1 = row[map_index<F>(n, i, m)];
          e1 = f.sub(e1, a.constant(j, k, m));
          auto& e2 = row[map_index<F>(n, j, m)];
          e2 = f.sub(e2, a.constant(k, i, m));
        }
        system.add(row);
      }
    }
  }
  auto der = system.solutions();
  for (std::size_t r = 0; r < der.dim(); ++r) {
    if (!is_dual_derivation(a, derivation_from_coords(f, n, der.basis().row(r)))) {
      throw InternalError("dual_derivation_space: solution violates the Leibniz rule");
    }
  }
  return der;
}

template <class F>
Subspace<F> dual_inner_space(const StructureAlgebra<F>& a) {
  const auto n = a.dim();
  const F& f = a.field();
  std::vector<Vector<F>> gens;
  for (std::size_t m = 0; m < n; ++m) {
    // τ = e*_m: δ(e_j)(e_k) = τ(e_k e_j) - τ(e_j e_k)
    auto v = zero_vector(f, n * n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) v[map_index<F>(n, j, k)] = f.sub(a.constant(k, j, m), a.constant(j, k, m));
    }
    gens.push_back(std::move(v));
  }
  return Subspace<F>::span_of(f, n * n, gens);
}

template <class F>
std::size_t dual_h1_dimension(const StructureAlgebra<F>& a) {
  auto der = dual_derivation_space(a);
  auto inner = dual_inner_space(a);
  if (!subspace_leq(inner, der)) throw InternalError("inner dual derivations outside the derivation space");
  return der.dim() - inner.dim();
}

template <class F>
bool all_dual_derivations_inner(const StructureAlgebra<F>& a) {
  return dual_h1_dimension(a) == 0;
}

namespace {

template <class F>
std::optional<DerivationEscape<F>> first_escape(const StructureAlgebra<F>& a, const Subspace<F>& maps,
                                                const Subspace<F>& target) {
  const auto n = a.dim();
  for (std::size_t r = 0; r < maps.dim(); ++r) {
    auto d = derivation_from_coords(a.field(), n, maps.basis().row(r));
    for (std::size_t j = 0; j < n; ++j) {
      auto image = d.matrix.column(j);
      if (!target.contains(image)) return DerivationEscape<F>{std::move(d), j, std::move(image)};
    }
  }
  return std::nullopt;
}

}  // namespace

template <class F>
std::optional<DerivationEscape<F>> find_corollary_me_escape(const StructureAlgebra<F>& a,
                                                            const SpanStrategy& strategy) {
  if (!strategy.is_exhaustive()) throw StrategyError("square-zero criterion needs an exhaustive strategy");
  auto square_zero = square_zero_span(a, strategy);
  return first_escape(a, derivation_space(a), square_zero.span);
}

template <class F>
std::optional<DerivationEscape<F>> find_theorem_we_escape(const StructureAlgebra<F>& a, const Subspace<F>& module_basis,
                                                          const SpanStrategy& strategy) {
  if (!strategy.is_exhaustive()) throw StrategyError("theta criterion needs an exhaustive strategy");
  auto theta = theta_span(a, module_basis, strategy);
  return first_escape(a, derivations_into(a, module_basis), theta.span);
}

template <class F>
Derivation<F> euler_derivation(const F& field, std::size_t a0_dim, std::size_t k) {
  if (k < 2) throw InvalidSize("euler_derivation requires k >= 2");
  const auto n = a0_dim * k;
  Matrix<F> m(field, n, n);
  for (std::size_t i = 0; i < a0_dim; ++i) {
    for (std::size_t p = 1; p < k; ++p) m(i * k + p, i * k + p) = field.from_int(static_cast<std::int64_t>(p));
  }
  return {std::move(m)};
}

template <class F>
bool inner_derivations_decompose(const StructureAlgebra<F>& a, const Subspace<F>& zero_pairs) {
  const F& f = a.field();
  const auto one = std::span<const typename F::value_type>(a.unit());
  for (std::size_t w = 0; w < a.dim(); ++w) {
    auto e = a.basis_element(w);
    auto t = sub(f, std::span<const typename F::value_type>(simple_tensor(a, one, std::span<const typename F::value_type>(e))),
                 std::span<const typename F::value_type>(simple_tensor(a, std::span<const typename F::value_type>(e), one)));
    if (!zero_pairs.contains(t)) return false;
  }
  return true;
}

#define ZPD_INSTANTIATE_DERIVATIONS(F)                                                                          \
  template Derivation<F> derivation_from_coords<F>(const F&, std::size_t, std::span<const F::value_type>);     \
  template Vector<F> derivation_coords<F>(const Derivation<F>&);                                                \
  template bool is_derivation<F>(const StructureAlgebra<F>&, const Derivation<F>&);                             \
  template bool is_dual_derivation<F>(const StructureAlgebra<F>&, const Derivation<F>&);                        \
  template Subspace<F> derivation_space<F>(const StructureAlgebra<F>&);                                         \
  template Subspace<F> derivations_into<F>(const StructureAlgebra<F>&, const Subspace<F>&);                     \
  template Subspace<F> inner_derivation_space<F>(const StructureAlgebra<F>&);                                   \
  template std::size_t h1_dimension<F>(const StructureAlgebra<F>&);                                             \
  template Subspace<F> dual_derivation_space<F>(const StructureAlgebra<F>&);                                    \
  template Subspace<F> dual_inner_space<F>(const StructureAlgebra<F>&);                                         \
  template std::size_t dual_h1_dimension<F>(const StructureAlgebra<F>&);                                        \
  template bool all_dual_derivations_inner<F>(const StructureAlgebra<F>&);                                      \
  template std::optional<DerivationEscape<F>> find_corollary_me_escape<F>(const StructureAlgebra<F>&,           \
                                                                         const SpanStrategy&);                  \
  template std::optional<DerivationEscape<F>> find_theorem_we_escape<F>(const StructureAlgebra<F>&,             \
                                                                       const Subspace<F>&, const SpanStrategy&); \
  template Derivation<F> euler_derivation<F>(const F&, std::size_t, std::size_t);                               \
  template bool inner_derivations_decompose<F>(const StructureAlgebra<F>&, const Subspace<F>&);

ZPD_INSTANTIATE_DERIVATIONS(PrimeField)
ZPD_INSTANTIATE_DERIVATIONS(RationalField)

}  // namespace zpd
