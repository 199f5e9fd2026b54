#include "zpd/tensorops.hpp"

#include "zpd/errors.hpp"

namespace zpd {

template <class F>
Matrix<F> mu1(const StructureAlgebra<F>& a) {
  const auto n = a.dim();
  Matrix<F> m(a.field(), n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto p = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) m(k, tensor_index(n, i, j)) = p[k];
    }
  }
  return m;
}

template <class F>
Matrix<F> mu2(const StructureAlgebra<F>& a) {
  const auto n = a.dim();
  Matrix<F> m(a.field(), n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto p = a.product(j, i);
      for (std::size_t k = 0; k < n; ++k) m(k, tensor_index(n, i, j)) = p[k];
    }
  }
  return m;
}

template <class F>
Matrix<F> mu(const StructureAlgebra<F>& a) {
  return mu1(a).vstack(mu2(a));
}

template <class F>
Matrix<F> kappa(const StructureAlgebra<F>& a) {
  return mu1(a) - mu2(a);
}

template <class F>
Vector<F> simple_tensor(const StructureAlgebra<F>& a, std::span<const typename F::value_type> x,
                        std::span<const typename F::value_type> y) {
  const auto n = a.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("simple_tensor: element of wrong length");
  const F& f = a.field();
  auto t = zero_vector(f, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) t[tensor_index(n, i, j)] = f.mul(x[i], y[j]);
  }
  return t;
}

template <class F>
Vector<F> swap_tensor(std::size_t n, std::span<const typename F::value_type> t) {
  if (t.size() != n * n) throw DimensionMismatch("swap_tensor: tensor of wrong length");
  Vector<F> out(t.begin(), t.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[tensor_index(n, j, i)] = t[tensor_index(n, i, j)];
  }
  return out;
}

template <class F>
Vector<F> flatten(const BilinearForm<F>& phi) {
  const auto n = phi.dim();
  Vector<F> v;
  v.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = phi.coeffs.row(i);
    v.insert(v.end(), r.begin(), r.end());
  }
  return v;
}

template <class F>
BilinearForm<F> unflatten(const F& field, std::size_t n, std::span<const typename F::value_type> v) {
  if (v.size() != n * n) throw DimensionMismatch("unflatten: vector of wrong length");
  Matrix<F> m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[tensor_index(n, i, j)];
  }
  return {std::move(m)};
}

template <class F>
typename F::value_type apply_form(const BilinearForm<F>& phi, std::span<const typename F::value_type> t) {
  const auto n = phi.dim();
  if (t.size() != n * n || phi.coeffs.cols() != n) throw DimensionMismatch("apply_form: shape mismatch");
  const F& f = phi.coeffs.field();
  auto acc = f.zero();
  for (std::size_t i = 0; i < n; ++i) acc = f.add(acc, dot(f, phi.coeffs.row(i), t.subspan(i * n, n)));
  return acc;
}

template <class F>
typename F::value_type evaluate_form(const BilinearForm<F>& phi, std::span<const typename F::value_type> x,
                                     std::span<const typename F::value_type> y) {
  const auto n = phi.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("evaluate_form: element of wrong length");
  return dot(phi.coeffs.field(), x, std::span<const typename F::value_type>(phi.coeffs.apply(y)));
}

#define ZPD_INSTANTIATE_TENSOROPS(F)                                                              \
  template Matrix<F> mu1<F>(const StructureAlgebra<F>&);                                          \
  template Matrix<F> mu2<F>(const StructureAlgebra<F>&);                                          \
  template Matrix<F> mu<F>(const StructureAlgebra<F>&);                                           \
  template Matrix<F> kappa<F>(const StructureAlgebra<F>&);                                        \
  template Vector<F> simple_tensor<F>(const StructureAlgebra<F>&, std::span<const F::value_type>, \
                                      std::span<const F::value_type>);                            \
  template Vector<F> swap_tensor<F>(std::size_t, std::span<const F::value_type>);                 \
  template Vector<F> flatten<F>(const BilinearForm<F>&);                                          \
  template BilinearForm<F> unflatten<F>(const F&, std::size_t, std::span<const F::value_type>);   \
  template F::value_type apply_form<F>(const BilinearForm<F>&, std::span<const F::value_type>);   \
  template F::value_type evaluate_form<F>(const BilinearForm<F>&, std::span<const F::value_type>, \
                                          std::span<const F::value_type>);

ZPD_INSTANTIATE_TENSOROPS(PrimeField)
ZPD_INSTANTIATE_TENSOROPS(RationalField)

}  // namespace zpd
