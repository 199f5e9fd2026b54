#pragma once

// Brute-force reference computations for small algebras over GF(p). They walk
// every element or every pair and share no code with the enumeration engine.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "zpd/algebra.hpp"
#include "zpd/builders.hpp"
#include "zpd/tensorops.hpp"

namespace zpdtest {

using zpd::PrimeField;
using zpd::StructureAlgebra;
using Algebra = StructureAlgebra<PrimeField>;
using Vec = zpd::Vector<PrimeField>;

inline std::vector<Vec> all_elements(const PrimeField& f, std::size_t n) {
  std::vector<Vec> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= f.modulus();
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    Vec v(n);
    auto c = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<std::uint32_t>(c % f.modulus());
      c /= f.modulus();
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Plain triple loop product, independent of left_mult/right_mult.
inline Vec product(const Algebra& a, const Vec& x, const Vec& y) {
  const auto& f = a.field();
  const auto n = a.dim();
  Vec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      auto c = f.mul(x[i], y[j]);
      for (std::size_t k = 0; k < n; ++k) out[k] = f.add(out[k], f.mul(c, a.constant(i, j, k)));
    }
  }
  return out;
}

inline Vec tensor(const PrimeField& f, const Vec& x, const Vec& y) {
  const auto n = x.size();
  Vec t(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = f.mul(x[i], y[j]);
  }
  return t;
}

inline bool is_zero(const Vec& v) {
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

/// span{x⊗y : keep(xy, yx)} over all pairs.
inline zpd::Subspace<PrimeField> pair_span(const Algebra& a, const std::function<bool(const Vec&, const Vec&)>& keep) {
  const auto& f = a.field();
  const auto n = a.dim();
  auto elems = all_elements(f, n);
  zpd::SpanAccumulator<PrimeField> acc(f, n * n);
  for (const auto& x : elems) {
    if (is_zero(x)) continue;
    for (const auto& y : elems) {
      if (is_zero(y)) continue;
      if (keep(product(a, x, y), product(a, y, x))) acc.insert(tensor(f, x, y));
    }
  }
  return acc.to_subspace();
}

inline zpd::Subspace<PrimeField> brute_zero_pairs(const Algebra& a) {
  return pair_span(a, [](const Vec& xy, const Vec& yx) { return is_zero(xy) && is_zero(yx); });
}

inline zpd::Subspace<PrimeField> brute_one_sided(const Algebra& a) {
  return pair_span(a, [](const Vec& xy, const Vec&) { return is_zero(xy); });
}

inline zpd::Subspace<PrimeField> brute_commuting(const Algebra& a) {
  return pair_span(a, [](const Vec& xy, const Vec& yx) { return xy == yx; });
}

inline zpd::Subspace<PrimeField> brute_square_zero(const Algebra& a) {
  zpd::SpanAccumulator<PrimeField> acc(a.field(), a.dim());
  for (const auto& x : all_elements(a.field(), a.dim())) {
    if (is_zero(product(a, x, x))) acc.insert(x);
  }
  return acc.to_subspace();
}

/// span{am : ama = 0, m ∈ M} with M given by its element list.
inline zpd::Subspace<PrimeField> brute_theta(const Algebra& a, const std::vector<Vec>& module_elements) {
  zpd::SpanAccumulator<PrimeField> acc(a.field(), a.dim());
  for (const auto& x : all_elements(a.field(), a.dim())) {
    for (const auto& m : module_elements) {
      auto am = product(a, x, m);
      if (is_zero(product(a, am, x))) acc.insert(am);
    }
  }
  return acc.to_subspace();
}

/// Elements of a subspace listed by brute force.
inline std::vector<Vec> subspace_elements(const zpd::Subspace<PrimeField>& s) {
  std::vector<Vec> out;
  for (const auto& c : all_elements(s.field(), s.dim())) {
    Vec v(s.ambient_dim(), 0);
    for (std::size_t r = 0; r < s.dim(); ++r) {
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = s.field().add(v[k], s.field().mul(c[r], s.basis()(r, k)));
    }
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
zpd::Matrix<F> random_matrix(std::mt19937_64& rng, const F& f, std::size_t rows, std::size_t cols, int lo = -3,
                             int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  zpd::Matrix<F> m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.from_int(d(rng));
  }
  return m;
}

template <class F>
zpd::Vector<F> random_vector(std::mt19937_64& rng, const F& f, std::size_t n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  zpd::Vector<F> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f.from_int(d(rng)));
  return v;
}

struct Named {
  std::string name;
  Algebra algebra;
};

/// Small algebras whose exhaustive spans are cheap; every member has p^n ≤ 2^9.
inline std::vector<Named> small_algebras() {
  PrimeField f2(2), f3(3);
  auto f = zpd::field_algebra(f2);
  return {
      {"F2", f},
      {"F3", zpd::field_algebra(f3)},
      {"mat2_F2", zpd::mat(2, f2)},
      {"mat2_F3", zpd::mat(2, f3)},
      {"tri2_F2", zpd::tri(2, f2)},
      {"tri2_F3", zpd::tri(2, f3)},
      {"tri3_F2", zpd::tri(3, f2)},
      {"trunc2_F2", zpd::trunc(2, f2)},
      {"trunc3_F2", zpd::trunc(3, f2)},
      {"trunc2_F3", zpd::trunc(2, f3)},
      {"F2xF2", zpd::direct_product(f, f)},
      {"F2xF2xF2", zpd::direct_product(zpd::direct_product(f, f), f)},
      {"F2xtrunc2", zpd::direct_product(f, zpd::trunc(2, f2))},
      {"trunc2xtrunc2_F2", zpd::tensor_with_trunc(zpd::trunc(2, f2), 2)},
  };
}

/// GF(4) as a 2-dimensional GF(2)-algebra on basis (1, w), w² = w + 1.
inline Algebra gf4() {
  PrimeField f2(2);
  std::vector<Vec> table = {{1, 0}, {0, 1}, {0, 1}, {1, 1}};
  return Algebra(f2, 2, table, {1, 0}, "GF(4)");
}

}  // namespace zpdtest
