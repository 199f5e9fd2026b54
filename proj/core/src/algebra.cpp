#include "zpd/algebra.hpp"

#include <stdexcept>

#include "zpd/errors.hpp"

namespace zpd {

template <class F>
StructureAlgebra<F>::StructureAlgebra(F field, std::size_t dim, const std::vector<Vector<F>>& table,
                                      Vector<F> unit, std::string label)
    : field_(std::move(field)), dim_(dim), unit_(std::move(unit)), label_(std::move(label)) {
  if (dim_ == 0) throw InvalidSize("algebra dimension must be at least 1");
  if (table.size() != dim_ * dim_) {
    throw DimensionMismatch("structure table has " + std::to_string(table.size()) +
                            " entries, expected " + std::to_string(dim_ * dim_));
  }
  if (unit_.size() != dim_) throw DimensionMismatch("unit has wrong length");
  table_.reserve(dim_ * dim_ * dim_);
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    if (table[idx].size() != dim_) {
      throw DimensionMismatch("product e_" + std::to_string(idx / dim_) + " e_" +
                              std::to_string(idx % dim_) + " has wrong length");
    }
    table_.insert(table_.end(), table[idx].begin(), table[idx].end());
  }
}

template <class F>
ValidationResult validate(const StructureAlgebra<F>& a) {
  const auto n = a.dim();
  const F& f = a.field();
  for (std::size_t i = 0; i < n; ++i) {
    auto e = a.basis_element(i);
    if (multiply(a, a.unit(), e) != e) {
      return {ValidationResult::Failure::left_unit, {i, 0, 0},
              "unit law fails: 1*e_" + std::to_string(i) + " != e_" + std::to_string(i)};
    }
    if (multiply(a, e, a.unit()) != e) {
      return {ValidationResult::Failure::right_unit, {i, 0, 0},
              "unit law fails: e_" + std::to_string(i) + "*1 != e_" + std::to_string(i)};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        auto lhs = zero_vector(f, n);  // (e_i e_j) e_k
        auto rhs = zero_vector(f, n);  // e_i (e_j e_k)
        for (std::size_t m = 0; m < n; ++m) {
          axpy(f, std::span(lhs), a.constant(i, j, m), a.product(m, k));
          axpy(f, std::span(rhs), a.constant(j, k, m), a.product(i, m));
        }
        if (lhs != rhs) {
          return {ValidationResult::Failure::associativity, {i, j, k},
                  "associativity fails at (e_" + std::to_string(i) + " e_" + std::to_string(j) +
                      ") e_" + std::to_string(k)};
        }
      }
    }
  }
  return {};
}

template <class F>
void require_valid(const StructureAlgebra<F>& a) {
  auto r = validate(a);
  if (!r) throw std::invalid_argument(r.message);
}

template <class F>
Vector<F> multiply(const StructureAlgebra<F>& a, std::span<const typename F::value_type> x,
                   std::span<const typename F::value_type> y) {
  const auto n = a.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("multiply: element of wrong length");
  const F& f = a.field();
  auto out = zero_vector(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (f.is_zero(y[j])) continue;
      axpy(f, std::span(out), f.mul(x[i], y[j]), a.product(i, j));
    }
  }
  return out;
}

template <class F>
Matrix<F> left_mult(const StructureAlgebra<F>& a, std::span<const typename F::value_type> x) {
  const auto n = a.dim();
  if (x.size() != n) throw DimensionMismatch("left_mult: element of wrong length");
  const F& f = a.field();
  Matrix<F> m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      auto p = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!f.is_zero(p[k])) m(k, j) = f.add(m(k, j), f.mul(x[i], p[k]));
      }
    }
  }
  return m;
}

template <class F>
Matrix<F> right_mult(const StructureAlgebra<F>& a, std::span<const typename F::value_type> y) {
  const auto n = a.dim();
  if (y.size() != n) throw DimensionMismatch("right_mult: element of wrong length");
  const F& f = a.field();
  Matrix<F> m(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (f.is_zero(y[j])) continue;
    for (std::size_t i = 0; i < n; ++i) {
      auto p = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!f.is_zero(p[k])) m(k, i) = f.add(m(k, i), f.mul(y[j], p[k]));
      }
    }
  }
  return m;
}

template <class F>
Subspace<F> center(const StructureAlgebra<F>& a) {
  const auto n = a.dim();
  Matrix<F> constraints(a.field(), 0, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto e = a.basis_element(i);
    constraints = constraints.vstack(left_mult(a, e) - right_mult(a, e));
  }
  return kernel(constraints);
}

template <class F>
Subspace<F> commutator_subspace(const StructureAlgebra<F>& a) {
  const auto n = a.dim();
  std::vector<Vector<F>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(sub(a.field(), a.product(i, j), a.product(j, i)));
  }
  return Subspace<F>::span_of(a.field(), n, gens);
}

template <class F>
Subspace<F> zero_pair_slice(const StructureAlgebra<F>& a, std::span<const typename F::value_type> x) {
  return kernel(left_mult(a, x).vstack(right_mult(a, x)));
}

template <class F>
Subspace<F> centralizer(const StructureAlgebra<F>& a, std::span<const typename F::value_type> x) {
  return kernel(left_mult(a, x) - right_mult(a, x));
}

template <class F>
Subspace<F> one_sided_slice(const StructureAlgebra<F>& a, std::span<const typename F::value_type> x) {
  return kernel(left_mult(a, x));
}

template <class F>
bool is_two_sided_ideal(const StructureAlgebra<F>& a, const Subspace<F>& s) {
  if (s.ambient_dim() != a.dim()) throw DimensionMismatch("is_two_sided_ideal: ambient mismatch");
  for (std::size_t r = 0; r < s.dim(); ++r) {
    auto m = s.basis_vector(r);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      auto e = a.basis_element(i);
      if (!s.contains(multiply(a, e, m)) || !s.contains(multiply(a, m, e))) return false;
    }
  }
  return true;
}

template <class F>
Subspace<F> left_ideal_generated(const StructureAlgebra<F>& a, std::span<const typename F::value_type> x) {
  return image(right_mult(a, x));
}

template <class F>
bool is_relabeling(const StructureAlgebra<F>& a, const StructureAlgebra<F>& b,
                   std::span<const std::size_t> perm) {
  const auto n = a.dim();
  if (b.dim() != n || perm.size() != n || !(a.field() == b.field())) return false;
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (a.unit()[k] != b.unit()[perm[k]]) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a.constant(i, j, k) != b.constant(perm[i], perm[j], perm[k])) return false;
      }
    }
  }
  return true;
}

#define ZPD_INSTANTIATE_ALGEBRA(F)                                                              \
  template class StructureAlgebra<F>;                                                           \
  template ValidationResult validate<F>(const StructureAlgebra<F>&);                            \
  template void require_valid<F>(const StructureAlgebra<F>&);                                   \
  template Vector<F> multiply<F>(const StructureAlgebra<F>&, std::span<const F::value_type>,    \
                                 std::span<const F::value_type>);                               \
  template Matrix<F> left_mult<F>(const StructureAlgebra<F>&, std::span<const F::value_type>);  \
  template Matrix<F> right_mult<F>(const StructureAlgebra<F>&, std::span<const F::value_type>); \
  template Subspace<F> center<F>(const StructureAlgebra<F>&);                                   \
  template Subspace<F> commutator_subspace<F>(const StructureAlgebra<F>&);                      \
  template Subspace<F> zero_pair_slice<F>(const StructureAlgebra<F>&,                           \
                                          std::span<const F::value_type>);                      \
  template Subspace<F> centralizer<F>(const StructureAlgebra<F>&, std::span<const F::value_type>); \
  template Subspace<F> one_sided_slice<F>(const StructureAlgebra<F>&,                           \
                                          std::span<const F::value_type>);                      \
  template bool is_two_sided_ideal<F>(const StructureAlgebra<F>&, const Subspace<F>&);          \
  template Subspace<F> left_ideal_generated<F>(const StructureAlgebra<F>&,                      \
                                               std::span<const F::value_type>);                 \
  template bool is_relabeling<F>(const StructureAlgebra<F>&, const StructureAlgebra<F>&,        \
                                 std::span<const std::size_t>);

ZPD_INSTANTIATE_ALGEBRA(PrimeField)
ZPD_INSTANTIATE_ALGEBRA(RationalField)

}  // namespace zpd
