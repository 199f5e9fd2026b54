#pragma once

// Bit-packed view of a GF(2) algebra of dimension at most 64: elements are
// uint64 masks (bit i = coordinate i), multiplication maps are row masks.

#include <cstdint>
#include <vector>

#include "zpd/algebra.hpp"
#include "zpd/bitlinalg.hpp"

namespace zpd::detail {

class F2Engine {
 public:
  static constexpr std::size_t max_dim = 64;

  explicit F2Engine(const StructureAlgebra<PrimeField>& a);

  static bool supports(const StructureAlgebra<PrimeField>& a) {
    return a.field().modulus() == 2 && a.dim() <= max_dim;
  }

  unsigned dim() const noexcept { return n_; }
  std::uint64_t unit() const noexcept { return unit_; }

  std::uint64_t multiply(std::uint64_t x, std::uint64_t y) const noexcept;

  /// Rows of L_x (bit j of row r = coordinate r of x e_j), appended to out.
  void left_rows(std::uint64_t x, std::vector<std::uint64_t>& out) const;
  /// Rows of R_x (bit i of row r = coordinate r of e_i x), appended to out.
  void right_rows(std::uint64_t x, std::vector<std::uint64_t>& out) const;

  std::vector<std::uint64_t> zero_pair_slice(std::uint64_t x) const;
  std::vector<std::uint64_t> one_sided_slice(std::uint64_t x) const;
  std::vector<std::uint64_t> centralizer(std::uint64_t x) const;

  BitVector tensor(std::uint64_t x, std::uint64_t y) const;
  BitVector element(std::uint64_t x) const;

  static std::uint64_t to_mask(std::span<const std::uint32_t> v);
  static Vector<PrimeField> from_mask(std::uint64_t x, unsigned n);

 private:
  unsigned n_;
  std::uint64_t unit_ = 0;
  std::vector<std::uint64_t> prod_;   // prod_[i*n + j] = e_i e_j
  std::vector<std::uint64_t> lrows_;  // lrows_[i*n + r] = row r of L_{e_i}
  std::vector<std::uint64_t> rrows_;  // rrows_[j*n + r] = row r of R_{e_j}
};

}  // namespace zpd::detail
