#pragma once

// Spans of "zero" varieties: (A⊗A)_0 = span{x⊗y : xy = yx = 0}, its one-sided
// and commuting analogues, the square-zero span N_A, and the Θ-span
// span{am : a in A, m in M, ama = 0} for an ideal M of A.
//
// Exhaustive mode walks one representative per scalar line (first nonzero
// coordinate equal to 1) over a prime field; each point contributes a linear
// slice, so the accumulated span is exact. Monte-Carlo mode samples integer
// points and only yields lower bounds.

#include <cstddef>
#include <cstdint>

#include "zpd/algebra.hpp"

namespace zpd {

struct SpanStrategy {
  enum class Mode { exhaustive, monte_carlo };

  Mode mode = Mode::exhaustive;
  /// Largest field-point count p^n an exhaustive run may walk.
  std::uint64_t enumeration_cap = std::uint64_t{1} << 20;
  /// Consecutive no-growth rounds that end a Monte-Carlo run.
  std::size_t sample_window = 20;
  /// Integer box for sampled coordinates.
  std::int64_t sample_min = -3;
  std::int64_t sample_max = 3;
  /// Draws per round before a round is declared empty. A round ends at the
  /// first draw whose slice is nonzero.
  std::size_t draws_per_round = 1000;
  std::uint64_t seed = 0;
  /// 0 picks default_worker_count().
  std::size_t workers = 0;
  /// Use the bit-packed engine over GF(2) when possible.
  bool packed = true;

  static SpanStrategy exhaustive() { return {}; }
  static SpanStrategy monte_carlo(std::uint64_t seed = 0) {
    SpanStrategy s;
    s.mode = Mode::monte_carlo;
    s.seed = seed;
    return s;
  }
  bool is_exhaustive() const noexcept { return mode == Mode::exhaustive; }
};

template <class F>
struct SpanResult {
  Subspace<F> span;
  /// Only exhaustive runs are exact; sampled spans are lower bounds.
  bool exact = false;
  std::uint64_t points_processed = 0;
};

/// p^n saturated at UINT64_MAX.
std::uint64_t field_point_count(std::uint32_t p, std::size_t n) noexcept;

/// Throws StrategyError when the strategy cannot run on a of this field/size.
template <class F>
void check_strategy(const StructureAlgebra<F>& a, const SpanStrategy& strategy);

/// (A⊗A)_0 inside n²-space.
template <class F>
SpanResult<F> zero_pair_span(const StructureAlgebra<F>& a, const SpanStrategy& strategy);

/// span{x⊗y : xy = 0}
template <class F>
SpanResult<F> one_sided_zero_span(const StructureAlgebra<F>& a, const SpanStrategy& strategy);

/// span{x⊗y : xy = yx}
template <class F>
SpanResult<F> commuting_span(const StructureAlgebra<F>& a, const SpanStrategy& strategy);

/// N_A, the span of square-zero elements. Sampling is refused over the rationals.
template <class F>
SpanResult<F> square_zero_span(const StructureAlgebra<F>& a, const SpanStrategy& strategy);

/// Θ for the bimodule M ⊆ A given by module_basis. Throws BimoduleError when M
/// is not a two-sided ideal.
template <class F>
SpanResult<F> theta_span(const StructureAlgebra<F>& a, const Subspace<F>& module_basis,
                         const SpanStrategy& strategy);

}  // namespace zpd
