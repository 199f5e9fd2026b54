#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zpd/matrix.hpp"

namespace zpd {

/// A coordinate subspace of F^ambient held in canonical reduced row echelon
/// form: basis rows are nonzero, each pivot entry is 1, pivot columns are zero
/// outside their pivot row, and pivots increase strictly. Two subspaces are
/// equal as sets iff their canonical bases are identical.
template <class F>
class SpanAccumulator;

template <class F>
class Subspace {
 public:
  using value_type = typename F::value_type;

  /// The zero subspace.
  Subspace(F field, std::size_t ambient_dim);

  static Subspace full(F field, std::size_t ambient_dim);
  /// Row space of m.
  static Subspace span_of(const Matrix<F>& m);
  static Subspace span_of(F field, std::size_t ambient_dim, const std::vector<Vector<F>>& vectors);

  const F& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix<F>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vector<F> basis_vector(std::size_t i) const;

  bool contains(std::span<const value_type> v) const;
  /// Reduces v against the basis; the result is zero iff v is contained.
  Vector<F> reduce(std::span<const value_type> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(Matrix<F> basis, std::vector<std::size_t> pivots);

  template <class G>
  friend Subspace<G> rref(const Matrix<G>& m);
  template <class G>
  friend class SpanAccumulator;

  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

template <class F>
Subspace<F> rref(const Matrix<F>& m);

/// {v : m v = 0}
template <class F>
Subspace<F> kernel(const Matrix<F>& m);

/// Column space of m.
template <class F>
Subspace<F> image(const Matrix<F>& m);

template <class F>
std::size_t rank(const Matrix<F>& m);

/// Some x with m x = b (free variables set to zero), or nullopt when the system
/// is inconsistent. The returned x is checked by substitution.
template <class F>
std::optional<Vector<F>> solve_linear(const Matrix<F>& m, std::span<const typename F::value_type> b);

template <class F>
bool subspace_contains(const Subspace<F>& s, std::span<const typename F::value_type> v);
template <class F>
bool subspace_leq(const Subspace<F>& s, const Subspace<F>& t);
template <class F>
Subspace<F> subspace_sum(const Subspace<F>& s, const Subspace<F>& t);
template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& s, const Subspace<F>& t);

/// Functionals (in the standard dual basis) vanishing on s.
template <class F>
Subspace<F> annihilator(const Subspace<F>& s);

/// Incremental span with the canonical form maintained after every insert.
/// Merging two accumulators is concatenate-then-reduce.
template <class F>
class SpanAccumulator {
 public:
  using value_type = typename F::value_type;

  SpanAccumulator(F field, std::size_t ambient_dim);

  /// Returns true when v was not already in the span.
  bool insert(std::span<const value_type> v);
  void merge(const SpanAccumulator& other);

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  bool contains(std::span<const value_type> v) const;
  Subspace<F> to_subspace() const;

 private:
  Vector<F> reduced(std::span<const value_type> v) const;

  F field_;
  std::size_t ambient_;
  std::vector<Vector<F>> rows_;       // sorted by pivot
  std::vector<std::size_t> pivots_;
};

extern template class Subspace<PrimeField>;
extern template class Subspace<RationalField>;
extern template class SpanAccumulator<PrimeField>;
extern template class SpanAccumulator<RationalField>;

}  // namespace zpd
