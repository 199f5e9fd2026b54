#include "zpd/properties.hpp"

#include <atomic>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "enumeration.hpp"
#include "f2engine.hpp"
#include "zpd/errors.hpp"
#include "zpd/parallel.hpp"

namespace zpd {

std::string to_string(Property p) {
  switch (p) {
    case Property::zpd: return "zpd";
    case Property::zlpd: return "zlpd";
    case Property::two_zpd: return "2zpd";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

template <class F>
Matrix<F> defining_map(const StructureAlgebra<F>& a, Property p) {
  switch (p) {
    case Property::zpd: return mu1(a);
    case Property::zlpd: return kappa(a);
    case Property::two_zpd: return mu(a);
  }
  throw std::invalid_argument("unknown property");
}

template <class F>
SpanResult<F> property_span(const StructureAlgebra<F>& a, Property p, const SpanStrategy& strategy) {
  switch (p) {
    case Property::zpd: return one_sided_zero_span(a, strategy);
    case Property::zlpd: return commuting_span(a, strategy);
    case Property::two_zpd: return zero_pair_span(a, strategy);
  }
  throw std::invalid_argument("unknown property");
}

namespace {

// Canonical solution (free variables zero) of φ·s = 0 for s in span, φ·t = 1.
template <class F>
Vector<F> separating_functional(const Subspace<F>& span, std::span<const typename F::value_type> t) {
  const F& f = span.field();
  auto system = span.basis().vstack(Matrix<F>::from_rows(f, t.size(), {Vector<F>(t.begin(), t.end())}));
  auto rhs = zero_vector(f, system.rows());
  rhs.back() = f.one();
  auto phi = solve_linear(system, std::span<const typename F::value_type>(rhs));
  if (!phi) throw InternalError("no functional separates a tensor outside the span");
  return *phi;
}

}  // namespace

template <class F>
bool verify_certificate(const StructureAlgebra<F>& a, const Certificate<F>& c) {
  const F& f = a.field();
  const auto map = defining_map(a, c.property);
  if (!(kernel(map) == c.kernel)) return false;
  if (!subspace_leq(c.span, c.kernel)) return false;
  const bool contained = subspace_leq(c.kernel, c.span);
  switch (c.verdict) {
    case Verdict::holds:
      return contained && !c.witness;
    case Verdict::inconclusive:
      return !contained && !c.span_exact && !c.witness;
    case Verdict::fails: {
      if (contained || !c.span_exact || !c.witness) return false;
      const auto& w = *c.witness;
      if (!is_zero_vector(f, std::span<const typename F::value_type>(map.apply(w.tensor)))) return false;
      if (f.is_zero(apply_form(w.form, w.tensor))) return false;
      for (std::size_t k = 0; k < c.span.dim(); ++k) {
        if (!f.is_zero(apply_form(w.form, c.span.basis().row(k)))) return false;
      }
      return true;
    }
  }
  return false;
}

template <class F>
Certificate<F> decide(const StructureAlgebra<F>& a, Property p, const SpanResult<F>& span) {
  const auto n = a.dim();
  Certificate<F> c{p, Verdict::holds, Certificate<F>::Route::tensor, kernel(defining_map(a, p)), span.span,
                   span.exact, span.points_processed, std::nullopt};
  if (c.kernel.ambient_dim() != span.span.ambient_dim()) throw DimensionMismatch("decide: span has wrong ambient");
  if (!subspace_leq(c.kernel, c.span)) {
    if (!span.exact) {
      c.verdict = Verdict::inconclusive;
    } else {
      c.verdict = Verdict::fails;
      std::size_t k = 0;
      while (c.span.contains(c.kernel.basis().row(k))) ++k;
      auto t = c.kernel.basis_vector(k);
      auto phi = separating_functional(c.span, std::span<const typename F::value_type>(t));
      c.witness = Witness<F>{unflatten(a.field(), n, std::span<const typename F::value_type>(phi)), std::move(t)};
    }
  }
  if (!verify_certificate(a, c)) throw InternalError("certificate for " + to_string(p) + " failed re-verification");
  return c;
}

template <class F>
Certificate<F> is_2zpd_dual(const StructureAlgebra<F>& a, const SpanResult<F>& zero_pairs) {
  const F& f = a.field();
  const auto n = a.dim();
  const auto map = mu(a);
  auto perp = annihilator(zero_pairs.span);
  auto decomposable = rref(map);
  Certificate<F> c{Property::two_zpd, Verdict::holds, Certificate<F>::Route::functional, kernel(map),
                   zero_pairs.span, zero_pairs.exact, zero_pairs.points_processed, std::nullopt};
  if (!subspace_leq(perp, decomposable)) {
    if (!zero_pairs.exact) {
      c.verdict = Verdict::inconclusive;
    } else {
      c.verdict = Verdict::fails;
      std::size_t k = 0;
      while (decomposable.contains(perp.basis().row(k))) ++k;
      auto phi = perp.basis_vector(k);
      // phi is outside ker(mu)⊥, so some kernel vector detects it
      for (std::size_t r = 0; r < c.kernel.dim(); ++r) {
        auto t = c.kernel.basis_vector(r);
        auto value = dot(f, std::span<const typename F::value_type>(phi), std::span<const typename F::value_type>(t));
        if (f.is_zero(value)) continue;
        t = scale(f, f.inv(value), std::span<const typename F::value_type>(t));
        c.witness = Witness<F>{unflatten(f, n, std::span<const typename F::value_type>(phi)), std::move(t)};
        break;
      }
    }
  }
  if (!verify_certificate(a, c)) throw InternalError("dual 2zpd certificate failed re-verification");
  return c;
}

template <class F>
bool check_teq_iii(const StructureAlgebra<F>& a, const SpanStrategy& strategy) {
  if (!strategy.is_exhaustive()) throw StrategyError("condition (iii) check needs an exhaustive strategy");
  auto zero_pairs = zero_pair_span(a, strategy);
  return check_teq_iii(a, strategy, zero_pairs.span);
}

template <class F>
bool check_teq_iii(const StructureAlgebra<F>& a, const SpanStrategy& strategy, const Subspace<F>& zero_pairs) {
  if (!strategy.is_exhaustive()) throw StrategyError("condition (iii) check needs an exhaustive strategy");
  check_strategy(a, strategy);
  if constexpr (std::is_same_v<F, RationalField>) {
    throw StrategyError("condition (iii) check needs a prime field");
  } else {
    const auto n = a.dim();
    const F& f = a.field();
    const auto workers = strategy.workers == 0 ? default_worker_count() : strategy.workers;
    const auto points = field_point_count(f.modulus(), n);
    std::atomic<bool> ok{true};

    if (strategy.packed && detail::F2Engine::supports(a)) {
      const detail::F2Engine e(a);
      BitSpan span(n * n);
      for (std::size_t k = 0; k < zero_pairs.dim(); ++k) span.insert(to_bits(f, zero_pairs.basis().row(k)));
      parallel_chunks(1, points, workers, [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t z = lo; z < hi && ok.load(std::memory_order_relaxed); ++z) {
          for (auto w : e.centralizer(z)) {
            auto t = e.tensor(z, w);
            t ^= e.tensor(e.multiply(z, w), e.unit());
            if (!span.contains(std::move(t))) {
              ok = false;
              return;
            }
          }
        }
      });
      return ok;
    }

    const auto& unit = a.unit();
    parallel_chunks(1, points, workers, [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
      detail::for_each_projective(f, n, lo, hi, [&](std::span<const std::uint32_t> z) {
        if (!ok.load(std::memory_order_relaxed)) return false;
        auto cent = centralizer(a, z);
        for (std::size_t k = 0; k < cent.dim(); ++k) {
          auto w = cent.basis().row(k);
          auto t = sub(f, std::span<const std::uint32_t>(simple_tensor(a, z, w)),
                       std::span<const std::uint32_t>(simple_tensor(a, std::span<const std::uint32_t>(multiply(a, z, w)),
                                                                    std::span<const std::uint32_t>(unit))));
          if (!zero_pairs.contains(t)) {
            ok = false;
            return false;
          }
        }
        return true;
      });
    });
    return ok;
  }
}

namespace {

template <class F>
using Sparse = std::vector<std::pair<std::size_t, typename F::value_type>>;

template <class F>
Sparse<F> sparsify(const F& f, std::span<const typename F::value_type> v) {
  Sparse<F> s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!f.is_zero(v[i])) s.emplace_back(i, v[i]);
  }
  return s;
}

template <class F>
typename F::value_type sparse_form(const F& f, const BilinearForm<F>& phi, const Sparse<F>& x, const Sparse<F>& y) {
  auto acc = f.zero();
  for (const auto& [i, xi] : x) {
    for (const auto& [j, yj] : y) {
      const auto& b = phi.coeffs(i, j);
      if (!f.is_zero(b)) acc = f.add(acc, f.mul(b, f.mul(xi, yj)));
    }
  }
  return acc;
}

}  // namespace

template <class F>
bool check_xyzw_identity(const StructureAlgebra<F>& a, std::span<const BilinearForm<F>> forms) {
  const auto n = a.dim();
  const F& f = a.field();
  for (const auto& phi : forms) {
    if (phi.dim() != n) throw DimensionMismatch("check_xyzw_identity: form of wrong size");
  }
  std::vector<Sparse<F>> basis(n), pair(n * n), triple(n * n * n);
  for (std::size_t i = 0; i < n; ++i) basis[i] = {{i, f.one()}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pair[i * n + j] = sparsify(f, a.product(i, j));
      auto ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        auto v = multiply(a, ij, std::span<const typename F::value_type>(a.basis_element(k)));
        triple[(i * n + j) * n + k] = sparsify(f, std::span<const typename F::value_type>(v));
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t w = 0; w < n; ++w) {
          const auto& xy = pair[x * n + y];
          const auto& zw = pair[z * n + w];
          const auto& wx = pair[w * n + x];
          const auto& yz = pair[y * n + z];
          const auto& yzw = triple[(y * n + z) * n + w];
          const auto& wxy = triple[(w * n + x) * n + y];
          for (const auto& phi : forms) {
            auto lhs = f.add(sparse_form(f, phi, xy, zw), sparse_form(f, phi, wx, yz));
            auto rhs = f.add(sparse_form(f, phi, basis[x], yzw), sparse_form(f, phi, wxy, basis[z]));
            if (lhs != rhs) return false;
          }
        }
      }
    }
  }
  return true;
}

template <class F>
bool check_xyzw_identity(const StructureAlgebra<F>& a, const BilinearForm<F>& phi) {
  return check_xyzw_identity(a, std::span<const BilinearForm<F>>(&phi, 1));
}

template <class F>
bool verify_decomposition(const StructureAlgebra<F>& a, const BilinearForm<F>& phi, const Decomposition<F>& d) {
  const auto n = a.dim();
  const F& f = a.field();
  if (phi.dim() != n || d.tau1.size() != n || d.tau2.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto value = f.add(dot(f, std::span<const typename F::value_type>(d.tau1), a.product(i, j)),
                         dot(f, std::span<const typename F::value_type>(d.tau2), a.product(j, i)));
      if (value != phi.coeffs(i, j)) return false;
    }
  }
  return true;
}

template <class F>
std::optional<Decomposition<F>> decompose_functional(const StructureAlgebra<F>& a, const BilinearForm<F>& phi) {
  const auto n = a.dim();
  if (phi.dim() != n) throw DimensionMismatch("decompose_functional: form of wrong size");
  auto rhs = flatten(phi);
  auto x = solve_linear(mu(a).transpose(), std::span<const typename F::value_type>(rhs));
  if (!x) return std::nullopt;
  Decomposition<F> d{Vector<F>(x->begin(), x->begin() + n), Vector<F>(x->begin() + n, x->end())};
  if (!verify_decomposition(a, phi, d)) throw InternalError("decompose_functional: reconstruction mismatch");
  return d;
}

template <class F>
bool check_symmetric_half(const StructureAlgebra<F>& a, const BilinearForm<F>& phi) {
  const F& f = a.field();
  if (f.characteristic() == 2) throw UnsupportedCharacteristic("the halving identity needs characteristic != 2");
  if (phi.dim() != a.dim()) throw DimensionMismatch("check_symmetric_half: form of wrong size");
  if (!phi.is_symmetric()) throw std::invalid_argument("check_symmetric_half: form is not symmetric");
  const auto n = a.dim();
  const auto half = f.inv(f.from_int(2));
  const auto one = std::span<const typename F::value_type>(a.unit());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto sym = add(f, a.product(i, j), a.product(j, i));
      auto rhs = f.mul(half, evaluate_form(phi, std::span<const typename F::value_type>(sym), one));
      if (rhs != phi.coeffs(i, j)) return false;
    }
  }
  return true;
}

template <class F>
std::vector<BilinearForm<F>> annihilating_forms(const StructureAlgebra<F>& a, const Subspace<F>& span) {
  auto perp = annihilator(span);
  std::vector<BilinearForm<F>> forms;
  for (std::size_t k = 0; k < perp.dim(); ++k) forms.push_back(unflatten(a.field(), a.dim(), perp.basis().row(k)));
  return forms;
}

#define ZPD_INSTANTIATE_PROPERTIES(F)                                                                          \
  template bool verify_certificate<F>(const StructureAlgebra<F>&, const Certificate<F>&);                      \
  template Matrix<F> defining_map<F>(const StructureAlgebra<F>&, Property);                                    \
  template SpanResult<F> property_span<F>(const StructureAlgebra<F>&, Property, const SpanStrategy&);          \
  template Certificate<F> decide<F>(const StructureAlgebra<F>&, Property, const SpanResult<F>&);               \
  template Certificate<F> is_2zpd_dual<F>(const StructureAlgebra<F>&, const SpanResult<F>&);                   \
  template bool check_teq_iii<F>(const StructureAlgebra<F>&, const SpanStrategy&);                             \
  template bool check_teq_iii<F>(const StructureAlgebra<F>&, const SpanStrategy&, const Subspace<F>&);         \
  template bool check_xyzw_identity<F>(const StructureAlgebra<F>&, const BilinearForm<F>&);                    \
  template bool check_xyzw_identity<F>(const StructureAlgebra<F>&, std::span<const BilinearForm<F>>);          \
  template std::optional<Decomposition<F>> decompose_functional<F>(const StructureAlgebra<F>&,                 \
                                                                   const BilinearForm<F>&);                    \
  template bool verify_decomposition<F>(const StructureAlgebra<F>&, const BilinearForm<F>&,                    \
                                        const Decomposition<F>&);                                              \
  template bool check_symmetric_half<F>(const StructureAlgebra<F>&, const BilinearForm<F>&);                   \
  template std::vector<BilinearForm<F>> annihilating_forms<F>(const StructureAlgebra<F>&, const Subspace<F>&);

ZPD_INSTANTIATE_PROPERTIES(PrimeField)
ZPD_INSTANTIATE_PROPERTIES(RationalField)

}  // namespace zpd
