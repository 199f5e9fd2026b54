#pragma once

// Bit-packed linear algebra over GF(2). Rows are packed 64 coordinates per
// word; coordinate i lives in bit (i % 64) of word (i / 64). Results are
// canonical RREF and agree exactly with the generic Matrix<PrimeField> path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zpd/subspace.hpp"

namespace zpd {

class BitVector {
 public:
  explicit BitVector(std::size_t size = 0) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) noexcept {
    if (value) {
      words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    } else {
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  bool none() const noexcept;
  /// Index of the lowest set bit, or size() when zero.
  std::size_t find_first() const noexcept;

  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  void push_back(BitVector row) { rows_.push_back(std::move(row)); }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_;
  std::vector<BitVector> rows_;
};

/// Canonical reduced row echelon basis of a GF(2) subspace.
struct BitEchelon {
  BitMatrix basis;
  std::vector<std::size_t> pivots;

  std::size_t dim() const noexcept { return pivots.size(); }
};

BitEchelon bit_rref(const BitMatrix& m);
BitEchelon bit_kernel(const BitMatrix& m);

/// Incremental GF(2) span; the packed counterpart of SpanAccumulator.
class BitSpan {
 public:
  explicit BitSpan(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  bool insert(BitVector v);
  void merge(const BitSpan& other);
  bool contains(BitVector v) const;

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  BitEchelon echelon() const;

 private:
  void reduce(BitVector& v) const;

  std::size_t ambient_;
  std::vector<BitVector> rows_;  // sorted by pivot, fully reduced
  std::vector<std::size_t> pivots_;
};

/// Kernel of a GF(2) matrix with at most 64 columns given as row masks.
/// Returns a basis of the kernel as column masks (not canonical).
std::vector<std::uint64_t> mask_kernel(std::span<const std::uint64_t> rows, unsigned cols);

/// Conversions to and from the generic representation; the field must be GF(2).
BitMatrix to_bits(const Matrix<PrimeField>& m);
BitVector to_bits(const PrimeField& field, std::span<const std::uint32_t> v);
Matrix<PrimeField> from_bits(const BitMatrix& m);
Vector<PrimeField> from_bits(const BitVector& v);
Subspace<PrimeField> to_subspace(const BitEchelon& e);

}  // namespace zpd
