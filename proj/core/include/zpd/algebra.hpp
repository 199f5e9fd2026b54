#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zpd/subspace.hpp"

namespace zpd {

/// A finite-dimensional unital associative algebra given by structure
/// constants: product(i, j) holds the coordinates of e_i * e_j.
template <class F>
class StructureAlgebra {
 public:
  using value_type = typename F::value_type;

  /// table holds dim*dim coordinate vectors, pair (i, j) at index i*dim + j.
  /// Throws InvalidSize for dim 0 and DimensionMismatch for ragged input.
  /// Does not validate the algebra axioms; see validate().
  StructureAlgebra(F field, std::size_t dim, const std::vector<Vector<F>>& table, Vector<F> unit,
                   std::string label = {});

  const F& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const Vector<F>& unit() const noexcept { return unit_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  std::span<const value_type> product(std::size_t i, std::size_t j) const {
    return {table_.data() + (i * dim_ + j) * dim_, dim_};
  }
  /// Structure constant: coordinate k of e_i * e_j.
  const value_type& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }

  Vector<F> basis_element(std::size_t i) const { return unit_vector(field_, dim_, i); }

  friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.table_ == b.table_ && a.unit_ == b.unit_;
  }

 private:
  F field_;
  std::size_t dim_;
  std::vector<value_type> table_;
  Vector<F> unit_;
  std::string label_;
};

/// Outcome of checking associativity and the unit law.
struct ValidationResult {
  enum class Failure { none, associativity, left_unit, right_unit };

  Failure failure = Failure::none;
  /// (i, j, k) for associativity; (i, -, -) for the unit laws.
  std::array<std::size_t, 3> triple{};
  std::string message;

  bool ok() const noexcept { return failure == Failure::none; }
  explicit operator bool() const noexcept { return ok(); }
};

template <class F>
ValidationResult validate(const StructureAlgebra<F>& a);

/// Throws std::invalid_argument carrying the failure message if invalid.
template <class F>
void require_valid(const StructureAlgebra<F>& a);

template <class F>
Vector<F> multiply(const StructureAlgebra<F>& a, std::span<const typename F::value_type> x,
                   std::span<const typename F::value_type> y);

/// L_x with L_x * coords(y) = coords(xy).
template <class F>
Matrix<F> left_mult(const StructureAlgebra<F>& a, std::span<const typename F::value_type> x);

/// R_y with R_y * coords(x) = coords(xy).
template <class F>
Matrix<F> right_mult(const StructureAlgebra<F>& a, std::span<const typename F::value_type> y);

template <class F>
Subspace<F> center(const StructureAlgebra<F>& a);

/// [A, A] = span of e_i e_j - e_j e_i.
template <class F>
Subspace<F> commutator_subspace(const StructureAlgebra<F>& a);

/// ker L_x ∩ ker R_x: the y with xy = yx = 0.
template <class F>
Subspace<F> zero_pair_slice(const StructureAlgebra<F>& a, std::span<const typename F::value_type> x);

/// ker(L_x - R_x)
template <class F>
Subspace<F> centralizer(const StructureAlgebra<F>& a, std::span<const typename F::value_type> x);

/// ker L_x
template <class F>
Subspace<F> one_sided_slice(const StructureAlgebra<F>& a, std::span<const typename F::value_type> x);

/// Checks that s is closed under left and right multiplication by A.
template <class F>
bool is_two_sided_ideal(const StructureAlgebra<F>& a, const Subspace<F>& s);

/// A*x = image of R_x.
template <class F>
Subspace<F> left_ideal_generated(const StructureAlgebra<F>& a, std::span<const typename F::value_type> x);

/// True when relabeling basis element i of a as perm[i] of b maps the
/// structure constants and unit of a onto those of b.
template <class F>
bool is_relabeling(const StructureAlgebra<F>& a, const StructureAlgebra<F>& b,
                   std::span<const std::size_t> perm);

extern template class StructureAlgebra<PrimeField>;
extern template class StructureAlgebra<RationalField>;

}  // namespace zpd
