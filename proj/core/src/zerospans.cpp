#include "zpd/zerospans.hpp"

#include <limits>
#include <random>
#include <string>
#include <type_traits>

#include "enumeration.hpp"
#include "f2engine.hpp"
#include "zpd/errors.hpp"
#include "zpd/parallel.hpp"
#include "zpd/tensorops.hpp"

namespace zpd {

std::uint64_t field_point_count(std::uint32_t p, std::size_t n) noexcept {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    total *= p;
  }
  return total;
}

template <class F>
void check_strategy(const StructureAlgebra<F>& a, const SpanStrategy& strategy) {
  if (strategy.mode == SpanStrategy::Mode::monte_carlo) {
    if (strategy.sample_min > strategy.sample_max) throw StrategyError("empty sample box");
    if (strategy.sample_window == 0) throw StrategyError("sample window must be positive");
    return;
  }
  if constexpr (std::is_same_v<F, RationalField>) {
    throw StrategyError("exhaustive enumeration needs a prime field; use the monte-carlo strategy over QQ");
  } else {
    auto points = field_point_count(a.field().modulus(), a.dim());
    if (points > strategy.enumeration_cap) {
      throw StrategyError("exhaustive enumeration of " + a.field().descriptor().name() + "^" +
                              std::to_string(a.dim()) + " needs cap >= " + std::to_string(points) +
                              " (cap is " + std::to_string(strategy.enumeration_cap) + ")",
                          points);
    }
  }
}

namespace {

enum class SliceKind { zero_pair, one_sided, commuting };

template <class F>
Subspace<F> slice_of(const StructureAlgebra<F>& a, SliceKind kind, std::span<const typename F::value_type> x) {
  switch (kind) {
    case SliceKind::zero_pair:
      return zero_pair_slice(a, x);
    case SliceKind::one_sided:
      return one_sided_slice(a, x);
    case SliceKind::commuting:
      return centralizer(a, x);
  }
  throw InternalError("unknown slice kind");
}

std::size_t resolve_workers(const SpanStrategy& s) {
  return s.workers == 0 ? default_worker_count() : s.workers;
}

// Exhaustive walk with the generic representation. emit(x, acc) adds the
// contribution of the representative x to the worker-local accumulator.
template <class F, class Emit>
SpanResult<F> run_exhaustive(const StructureAlgebra<F>& a, const SpanStrategy& strategy, std::size_t ambient,
                             Emit emit) {
  if constexpr (std::is_same_v<F, RationalField>) {
    throw StrategyError("exhaustive enumeration needs a prime field");
  } else {
    const auto& f = a.field();
    const auto points = field_point_count(f.modulus(), a.dim());
    const auto workers = resolve_workers(strategy);
    std::vector<SpanAccumulator<F>> accs(workers, SpanAccumulator<F>(f, ambient));
    parallel_chunks(1, points, workers, [&](std::size_t w, std::uint64_t lo, std::uint64_t hi) {
      detail::for_each_projective(f, a.dim(), lo, hi, [&](std::span<const std::uint32_t> x) {
        emit(x, accs[w]);
        return true;
      });
    });
    for (std::size_t w = 1; w < accs.size(); ++w) accs[0].merge(accs[w]);
    return {accs[0].to_subspace(), true, detail::projective_count(f.modulus(), points)};
  }
}

// Same walk with the packed GF(2) engine; every nonzero mask is a representative.
template <class Emit>
SpanResult<PrimeField> run_packed(const StructureAlgebra<PrimeField>& a, const SpanStrategy& strategy,
                                  std::size_t ambient, Emit emit) {
  const detail::F2Engine engine(a);
  const auto points = field_point_count(2, a.dim());
  const auto workers = resolve_workers(strategy);
  std::vector<BitSpan> accs(workers, BitSpan(ambient));
  parallel_chunks(1, points, workers, [&](std::size_t w, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t x = lo; x < hi; ++x) emit(engine, x, accs[w]);
  });
  for (std::size_t w = 1; w < accs.size(); ++w) accs[0].merge(accs[w]);
  return {to_subspace(accs[0].echelon()), true, points - 1};
}

template <class F>
Vector<F> sample_point(const F& f, std::size_t n, const SpanStrategy& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coord(s.sample_min, s.sample_max);
  Vector<F> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) x.push_back(f.from_int(coord(rng)));
  return x;
}

// Monte-Carlo accumulation. generate(x) returns the vectors contributed by the
// sample x (empty when x lies off the variety). A round draws until some sample
// contributes; the run ends after sample_window rounds without growth, or as
// soon as the span reaches upper_bound.
template <class F, class Generate>
SpanResult<F> run_sampled(const StructureAlgebra<F>& a, const SpanStrategy& s, std::size_t ambient,
                          std::size_t upper_bound, Generate generate) {
  const F& f = a.field();
  std::mt19937_64 rng(s.seed);
  SpanAccumulator<F> acc(f, ambient);
  std::uint64_t draws = 0;
  std::size_t quiet_rounds = 0;
  while (quiet_rounds < s.sample_window && acc.dim() < upper_bound) {
    bool grew = false;
    for (std::size_t d = 0; d < s.draws_per_round; ++d) {
      auto x = sample_point(f, a.dim(), s, rng);
      ++draws;
      if (is_zero_vector(f, std::span<const typename F::value_type>(x))) continue;
      auto gens = generate(x);
      if (gens.empty()) continue;
      for (const auto& v : gens) grew = acc.insert(v) || grew;
      break;
    }
    quiet_rounds = grew ? 0 : quiet_rounds + 1;
  }
  return {acc.to_subspace(), false, draws};
}

template <class F>
void assert_contained(const Subspace<F>& span, const Subspace<F>& bound, const char* what) {
  if (!subspace_leq(span, bound)) throw InternalError(std::string(what) + " escaped its defining kernel");
}

template <class F>
SpanResult<F> tensor_span(const StructureAlgebra<F>& a, const SpanStrategy& strategy, SliceKind kind,
                          const Matrix<F>& defining_map, const char* what) {
  check_strategy(a, strategy);
  const auto n = a.dim();
  auto bound = kernel(defining_map);
  SpanResult<F> result{Subspace<F>(a.field(), n * n)};

  if (!strategy.is_exhaustive()) {
    result = run_sampled(a, strategy, n * n, bound.dim(), [&](const Vector<F>& x) {
      std::vector<Vector<F>> gens;
      auto slice = slice_of(a, kind, std::span<const typename F::value_type>(x));
      for (std::size_t k = 0; k < slice.dim(); ++k) gens.push_back(simple_tensor(a, x, slice.basis().row(k)));
      return gens;
    });
  } else {
    bool done = false;
    if constexpr (std::is_same_v<F, PrimeField>) {
      if (strategy.packed && detail::F2Engine::supports(a)) {
        result = run_packed(a, strategy, n * n, [kind](const detail::F2Engine& e, std::uint64_t x, BitSpan& acc) {
          std::vector<std::uint64_t> slice;
          switch (kind) {
            case SliceKind::zero_pair: slice = e.zero_pair_slice(x); break;
            case SliceKind::one_sided: slice = e.one_sided_slice(x); break;
            case SliceKind::commuting: slice = e.centralizer(x); break;
          }
          for (auto z : slice) acc.insert(e.tensor(x, z));
        });
        done = true;
      }
    }
    if (!done) {
      result = run_exhaustive(a, strategy, n * n, [&](std::span<const typename F::value_type> x, SpanAccumulator<F>& acc) {
        auto slice = slice_of(a, kind, x);
        for (std::size_t k = 0; k < slice.dim(); ++k) acc.insert(simple_tensor(a, x, slice.basis().row(k)));
      });
    }
  }
  assert_contained(result.span, bound, what);
  return result;
}

}  // namespace

template <class F>
SpanResult<F> zero_pair_span(const StructureAlgebra<F>& a, const SpanStrategy& strategy) {
  return tensor_span(a, strategy, SliceKind::zero_pair, mu(a), "zero-pair span");
}

template <class F>
SpanResult<F> one_sided_zero_span(const StructureAlgebra<F>& a, const SpanStrategy& strategy) {
  return tensor_span(a, strategy, SliceKind::one_sided, mu1(a), "one-sided zero span");
}

template <class F>
SpanResult<F> commuting_span(const StructureAlgebra<F>& a, const SpanStrategy& strategy) {
  return tensor_span(a, strategy, SliceKind::commuting, kappa(a), "commuting span");
}

template <class F>
SpanResult<F> square_zero_span(const StructureAlgebra<F>& a, const SpanStrategy& strategy) {
  check_strategy(a, strategy);
  const auto n = a.dim();
  const F& f = a.field();
  if (!strategy.is_exhaustive()) {
    if constexpr (std::is_same_v<F, RationalField>) {
      // a random rational point is almost never square-zero and the condition
      // is not linear along a slice, so sampling has nothing to grow on
      throw StrategyError("square-zero span cannot be sampled over QQ");
    } else {
      return run_sampled(a, strategy, n, n, [&](const Vector<F>& x) {
        std::vector<Vector<F>> gens;
        if (is_zero_vector(f, std::span<const typename F::value_type>(multiply(a, x, x)))) gens.push_back(x);
        return gens;
      });
    }
  }
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (strategy.packed && detail::F2Engine::supports(a)) {
      return run_packed(a, strategy, n, [](const detail::F2Engine& e, std::uint64_t x, BitSpan& acc) {
        if (e.multiply(x, x) == 0) acc.insert(e.element(x));
      });
    }
  }
  return run_exhaustive(a, strategy, n, [&](std::span<const typename F::value_type> x, SpanAccumulator<F>& acc) {
    auto sq = multiply(a, x, x);
    if (is_zero_vector(f, std::span<const typename F::value_type>(sq))) acc.insert(x);
  });
}

template <class F>
SpanResult<F> theta_span(const StructureAlgebra<F>& a, const Subspace<F>& module_basis,
                         const SpanStrategy& strategy) {
  check_strategy(a, strategy);
  const auto n = a.dim();
  const F& f = a.field();
  if (module_basis.ambient_dim() != n) throw DimensionMismatch("theta_span: module lives in the wrong space");
  if (!is_two_sided_ideal(a, module_basis)) {
    throw BimoduleError("theta_span: module is not closed under multiplication by the algebra");
  }
  const auto d = module_basis.dim();

  // admissible m = Σ c_k m_k with a m a = 0; contributes a m
  auto generate = [&](std::span<const typename F::value_type> x) {
    std::vector<Vector<F>> cols;
    cols.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
      cols.push_back(multiply(a, multiply(a, x, module_basis.basis().row(k)), x));
    }
    auto coeffs = kernel(Matrix<F>::from_columns(f, n, cols));
    std::vector<Vector<F>> gens;
    for (std::size_t r = 0; r < coeffs.dim(); ++r) {
      auto m = zero_vector(f, n);
      for (std::size_t k = 0; k < d; ++k) axpy(f, std::span(m), coeffs.basis()(r, k), module_basis.basis().row(k));
      gens.push_back(multiply(a, x, m));
    }
    return gens;
  };

  SpanResult<F> result{Subspace<F>(f, n)};
  if (d == 0) {
    result.exact = strategy.is_exhaustive();
    return result;
  }
  if (!strategy.is_exhaustive()) {
    result = run_sampled(a, strategy, n, d, [&](const Vector<F>& x) {
      std::vector<Vector<F>> gens;
      for (auto& g : generate(x)) {
        if (!is_zero_vector(f, std::span<const typename F::value_type>(g))) gens.push_back(std::move(g));
      }
      return gens;
    });
  } else {
    bool done = false;
    if constexpr (std::is_same_v<F, PrimeField>) {
      if (strategy.packed && detail::F2Engine::supports(a)) {
        std::vector<std::uint64_t> mods;
        for (std::size_t k = 0; k < d; ++k) mods.push_back(detail::F2Engine::to_mask(module_basis.basis().row(k)));
        result = run_packed(a, strategy, n, [&mods, d](const detail::F2Engine& e, std::uint64_t x, BitSpan& acc) {
          const unsigned n = e.dim();
          std::vector<std::uint64_t> rows(n, 0);  // row r, bit k: coordinate r of x m_k x
          for (std::size_t k = 0; k < d; ++k) {
            auto c = e.multiply(e.multiply(x, mods[k]), x);
            for (auto cs = c; cs; cs &= cs - 1) rows[std::countr_zero(cs)] |= std::uint64_t{1} << k;
          }
          for (auto coeff : mask_kernel(rows, static_cast<unsigned>(d))) {
            std::uint64_t m = 0;
            for (auto cs = coeff; cs; cs &= cs - 1) m ^= mods[std::countr_zero(cs)];
            acc.insert(e.element(e.multiply(x, m)));
          }
        });
        done = true;
      }
    }
    if (!done) {
      result = run_exhaustive(a, strategy, n, [&](std::span<const typename F::value_type> x, SpanAccumulator<F>& acc) {
        for (const auto& g : generate(x)) acc.insert(g);
      });
    }
  }
  assert_contained(result.span, module_basis, "theta span");
  return result;
}

#define ZPD_INSTANTIATE_ZEROSPANS(F)                                                                  \
  template void check_strategy<F>(const StructureAlgebra<F>&, const SpanStrategy&);                   \
  template SpanResult<F> zero_pair_span<F>(const StructureAlgebra<F>&, const SpanStrategy&);          \
  template SpanResult<F> one_sided_zero_span<F>(const StructureAlgebra<F>&, const SpanStrategy&);     \
  template SpanResult<F> commuting_span<F>(const StructureAlgebra<F>&, const SpanStrategy&);          \
  template SpanResult<F> square_zero_span<F>(const StructureAlgebra<F>&, const SpanStrategy&);        \
  template SpanResult<F> theta_span<F>(const StructureAlgebra<F>&, const Subspace<F>&, const SpanStrategy&);

ZPD_INSTANTIATE_ZEROSPANS(PrimeField)
ZPD_INSTANTIATE_ZEROSPANS(RationalField)

}  // namespace zpd
