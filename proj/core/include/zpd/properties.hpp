#pragma once

// Deciders for the zero product determined family.
//
// For a finite-dimensional algebra the defining condition dualizes to a
// containment in A⊗A. A bilinear functional φ kills the zero pairs iff flatten(φ)
// annihilates the zero span S; it has the decomposed shape iff flatten(φ) lies
// in the row space of the defining map (mu, mu1 or kappa). The property thus
// holds iff ker(map) ⊆ S. S ⊆ ker(map) always, so equality is the verdict.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zpd/tensorops.hpp"
#include "zpd/zerospans.hpp"

namespace zpd {

enum class Property { zpd, zlpd, two_zpd };
enum class Verdict { holds, fails, inconclusive };

std::string to_string(Property p);
std::string to_string(Verdict v);

/// A functional that kills the zero span but not the kernel tensor.
template <class F>
struct Witness {
  BilinearForm<F> form;
  Vector<F> tensor;
};

template <class F>
struct Decomposition {
  Vector<F> tau1;
  Vector<F> tau2;
};

template <class F>
struct Certificate {
  /// tensor: ker(map) ⊆ S. functional: S⊥ ⊆ rowspace(map).
  enum class Route { tensor, functional };

  Property property;
  Verdict verdict;
  Route route = Route::tensor;
  /// ker of mu, mu1 or kappa.
  Subspace<F> kernel;
  /// The zero span the verdict was computed from.
  Subspace<F> span;
  bool span_exact = false;
  std::uint64_t points_processed = 0;
  /// Present exactly when verdict == fails.
  std::optional<Witness<F>> witness;
};

/// Re-checks a certificate from the algebra with fresh arithmetic.
template <class F>
bool verify_certificate(const StructureAlgebra<F>& a, const Certificate<F>& c);

/// The map whose kernel the property compares against: mu, mu1 or kappa.
template <class F>
Matrix<F> defining_map(const StructureAlgebra<F>& a, Property p);

/// The zero span matching the property.
template <class F>
SpanResult<F> property_span(const StructureAlgebra<F>& a, Property p, const SpanStrategy& strategy);

template <class F>
Certificate<F> decide(const StructureAlgebra<F>& a, Property p, const SpanResult<F>& span);

template <class F>
Certificate<F> is_2zpd(const StructureAlgebra<F>& a, const SpanStrategy& strategy) {
  return decide(a, Property::two_zpd, zero_pair_span(a, strategy));
}

template <class F>
Certificate<F> is_zpd(const StructureAlgebra<F>& a, const SpanStrategy& strategy) {
  return decide(a, Property::zpd, one_sided_zero_span(a, strategy));
}

template <class F>
Certificate<F> is_zlpd(const StructureAlgebra<F>& a, const SpanStrategy& strategy) {
  return decide(a, Property::zlpd, commuting_span(a, strategy));
}

/// 2-zpd decided in functional space: S⊥ ⊆ rowspace(mu).
template <class F>
Certificate<F> is_2zpd_dual(const StructureAlgebra<F>& a, const SpanResult<F>& zero_pairs);

template <class F>
Certificate<F> is_2zpd_dual(const StructureAlgebra<F>& a, const SpanStrategy& strategy) {
  return is_2zpd_dual(a, zero_pair_span(a, strategy));
}

/// For every commuting pair z, w: z⊗w - zw⊗1 ∈ (A⊗A)_0. Needs an exhaustive strategy.
template <class F>
bool check_teq_iii(const StructureAlgebra<F>& a, const SpanStrategy& strategy);

/// As above against a precomputed exact zero-pair span.
template <class F>
bool check_teq_iii(const StructureAlgebra<F>& a, const SpanStrategy& strategy, const Subspace<F>& zero_pairs);

/// φ(xy,zw) + φ(wx,yz) = φ(x,yzw) + φ(wxy,z) on all basis quadruples.
template <class F>
bool check_xyzw_identity(const StructureAlgebra<F>& a, const BilinearForm<F>& phi);

/// Batched form: true iff every form passes.
template <class F>
bool check_xyzw_identity(const StructureAlgebra<F>& a, std::span<const BilinearForm<F>> forms);

/// Solves φ(e_i, e_j) = τ1(e_i e_j) + τ2(e_j e_i); nullopt when no pair exists.
template <class F>
std::optional<Decomposition<F>> decompose_functional(const StructureAlgebra<F>& a, const BilinearForm<F>& phi);

/// Checks φ(x, y) = τ1(xy) + τ2(yx) on all basis pairs.
template <class F>
bool verify_decomposition(const StructureAlgebra<F>& a, const BilinearForm<F>& phi, const Decomposition<F>& d);

/// φ(e_i, e_j) = ½ φ(e_i e_j + e_j e_i, 1) for all pairs. Throws
/// UnsupportedCharacteristic in characteristic 2 and std::invalid_argument when
/// φ is not symmetric.
template <class F>
bool check_symmetric_half(const StructureAlgebra<F>& a, const BilinearForm<F>& phi);

/// Basis of S⊥ as bilinear forms.
template <class F>
std::vector<BilinearForm<F>> annihilating_forms(const StructureAlgebra<F>& a, const Subspace<F>& span);

}  // namespace zpd
