#include "zpd/builders.hpp"

#include <string>

#include "zpd/errors.hpp"

namespace zpd {

namespace {

template <class F>
std::vector<Vector<F>> empty_table(const F& field, std::size_t n) {
  return std::vector<Vector<F>>(n * n, zero_vector(field, n));
}

}  // namespace

template <class F>
StructureAlgebra<F> mat(std::size_t k, const F& field) {
  if (k < 1) throw InvalidSize("mat(k) requires k >= 1");
  const auto n = k * k;
  auto table = empty_table(field, n);
  // E_rs E_tv = [s == t] E_rv
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t v = 0; v < k; ++v) table[(r * k + s) * n + (s * k + v)][r * k + v] = field.one();
    }
  }
  auto unit = zero_vector(field, n);
  for (std::size_t r = 0; r < k; ++r) unit[r * k + r] = field.one();
  return StructureAlgebra<F>(field, n, table, std::move(unit), "mat(" + std::to_string(k) + ")");
}

template <class F>
StructureAlgebra<F> tri(std::size_t k, const F& field) {
  if (k < 1) throw InvalidSize("tri(k) requires k >= 1");
  std::vector<std::size_t> index(k * k, 0);
  std::size_t n = 0;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r; s < k; ++s) index[r * k + s] = n++;
  }
  auto table = empty_table(field, n);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r; s < k; ++s) {
      for (std::size_t v = s; v < k; ++v) {
        table[index[r * k + s] * n + index[s * k + v]][index[r * k + v]] = field.one();
      }
    }
  }
  auto unit = zero_vector(field, n);
  for (std::size_t r = 0; r < k; ++r) unit[index[r * k + r]] = field.one();
  return StructureAlgebra<F>(field, n, table, std::move(unit), "tri(" + std::to_string(k) + ")");
}

template <class F>
StructureAlgebra<F> trunc(std::size_t k, const F& field) {
  if (k < 2) throw InvalidSize("trunc(k) requires k >= 2");
  auto table = empty_table(field, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; i + j < k; ++j) table[i * k + j][i + j] = field.one();
  }
  return StructureAlgebra<F>(field, k, table, unit_vector(field, k, 0), "trunc(" + std::to_string(k) + ")");
}

template <class F>
StructureAlgebra<F> direct_product(const StructureAlgebra<F>& a, const StructureAlgebra<F>& b) {
  if (!(a.field() == b.field())) throw DimensionMismatch("direct_product: factors over different fields");
  const F& f = a.field();
  const auto na = a.dim(), nb = b.dim(), n = na + nb;
  auto table = empty_table(f, n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      auto p = a.product(i, j);
      std::copy(p.begin(), p.end(), table[i * n + j].begin());
    }
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      auto p = b.product(i, j);
      std::copy(p.begin(), p.end(), table[(na + i) * n + (na + j)].begin() + na);
    }
  }
  Vector<F> unit(a.unit());
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return StructureAlgebra<F>(f, n, table, std::move(unit), "prod(" + a.label() + "," + b.label() + ")");
}

template <class F>
StructureAlgebra<F> tensor_with_trunc(const StructureAlgebra<F>& a0, std::size_t k) {
  if (k < 2) throw InvalidSize("tensor_with_trunc requires k >= 2");
  const F& f = a0.field();
  const auto m = a0.dim(), n = m * k;
  auto table = empty_table(f, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t q = 0; p + q < k; ++q) {
          auto prod = a0.product(i, j);
          auto& out = table[(i * k + p) * n + (j * k + q)];
          for (std::size_t l = 0; l < m; ++l) out[l * k + p + q] = prod[l];
        }
      }
    }
  }
  auto unit = zero_vector(f, n);
  for (std::size_t l = 0; l < m; ++l) unit[l * k] = a0.unit()[l];
  return StructureAlgebra<F>(f, n, table, std::move(unit),
                             "tensor_trunc(" + a0.label() + "," + std::to_string(k) + ")");
}

template <class F>
StructureAlgebra<F> mat_over(std::size_t k, const StructureAlgebra<F>& c) {
  if (k < 1) throw InvalidSize("mat_over(k, C) requires k >= 1");
  const F& f = c.field();
  const auto d = c.dim(), n = k * k * d;
  auto table = empty_table(f, n);
  // (E_rs ⊗ c_t)(E_sv ⊗ c_w) = E_rv ⊗ c_t c_w
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t v = 0; v < k; ++v) {
        for (std::size_t t = 0; t < d; ++t) {
          for (std::size_t w = 0; w < d; ++w) {
            auto prod = c.product(t, w);
            auto& out = table[((r * k + s) * d + t) * n + ((s * k + v) * d + w)];
            for (std::size_t l = 0; l < d; ++l) out[(r * k + v) * d + l] = prod[l];
          }
        }
      }
    }
  }
  auto unit = zero_vector(f, n);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t l = 0; l < d; ++l) unit[(r * k + r) * d + l] = c.unit()[l];
  }
  return StructureAlgebra<F>(f, n, table, std::move(unit),
                             "mat_over(" + std::to_string(k) + "," + c.label() + ")");
}

template <class F>
Vector<F> embed_power(const StructureAlgebra<F>& a0, std::size_t k,
                      std::span<const typename F::value_type> x, std::size_t power) {
  if (power >= k) throw InvalidSize("embed_power: power must be below k");
  if (x.size() != a0.dim()) throw DimensionMismatch("embed_power: element of wrong length");
  auto out = zero_vector(a0.field(), a0.dim() * k);
  for (std::size_t l = 0; l < a0.dim(); ++l) out[l * k + power] = x[l];
  return out;
}

template <class F>
Vector<F> trunc_generator(const StructureAlgebra<F>& a0, std::size_t k) {
  return embed_power(a0, k, std::span<const typename F::value_type>(a0.unit()), 1);
}

#define ZPD_INSTANTIATE_BUILDERS(F)                                                       \
  template StructureAlgebra<F> mat<F>(std::size_t, const F&);                             \
  template StructureAlgebra<F> tri<F>(std::size_t, const F&);                             \
  template StructureAlgebra<F> trunc<F>(std::size_t, const F&);                           \
  template StructureAlgebra<F> direct_product<F>(const StructureAlgebra<F>&,              \
                                                 const StructureAlgebra<F>&);             \
  template StructureAlgebra<F> tensor_with_trunc<F>(const StructureAlgebra<F>&, std::size_t); \
  template StructureAlgebra<F> mat_over<F>(std::size_t, const StructureAlgebra<F>&);      \
  template Vector<F> trunc_generator<F>(const StructureAlgebra<F>&, std::size_t);         \
  template Vector<F> embed_power<F>(const StructureAlgebra<F>&, std::size_t,              \
                                    std::span<const F::value_type>, std::size_t);

ZPD_INSTANTIATE_BUILDERS(PrimeField)
ZPD_INSTANTIATE_BUILDERS(RationalField)

}  // namespace zpd
