#include "zpd/bitlinalg.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "zpd/errors.hpp"

namespace zpd {

bool BitVector::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::find_first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

BitEchelon bit_rref(const BitMatrix& m) {
  BitSpan span(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) span.insert(m.row(r));
  return span.echelon();
}

BitEchelon bit_kernel(const BitMatrix& m) {
  auto reduced = bit_rref(m);
  const auto& piv = reduced.pivots;
  BitMatrix gens(0, m.cols());
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    if (next < piv.size() && piv[next] == col) {
      ++next;
      continue;
    }
    BitVector v(m.cols());
    v.set(col);
    for (std::size_t k = 0; k < piv.size(); ++k) {
      if (reduced.basis.get(k, col)) v.set(piv[k]);
    }
    gens.push_back(std::move(v));
  }
  auto result = bit_rref(gens);
  if (result.dim() + reduced.dim() != m.cols()) {
    throw InternalError("bit_kernel: rank-nullity violated");
  }
  return result;
}

void BitSpan::reduce(BitVector& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (v.test(pivots_[k])) v ^= rows_[k];
  }
}

bool BitSpan::insert(BitVector v) {
  if (v.size() != ambient_) throw DimensionMismatch("BitSpan::insert: wrong length");
  reduce(v);
  auto lead = v.find_first();
  if (lead == v.size()) return false;
  for (auto& row : rows_) {
    if (row.test(lead)) row ^= v;
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

void BitSpan::merge(const BitSpan& other) {
  if (other.ambient_ != ambient_) throw DimensionMismatch("BitSpan::merge: ambient mismatch");
  for (const auto& row : other.rows_) insert(row);
}

bool BitSpan::contains(BitVector v) const {
  if (v.size() != ambient_) throw DimensionMismatch("BitSpan::contains: wrong length");
  reduce(v);
  return v.none();
}

BitEchelon BitSpan::echelon() const {
  BitEchelon e{BitMatrix(0, ambient_), pivots_};
  for (const auto& row : rows_) e.basis.push_back(row);
  return e;
}

std::vector<std::uint64_t> mask_kernel(std::span<const std::uint64_t> rows, unsigned cols) {
  // Gauss-Jordan on row masks, every stored row kept fully reduced
  std::vector<std::uint64_t> reduced;
  std::vector<unsigned> pivot_cols;
  reduced.reserve(cols);
  for (auto r : rows) {
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      if ((r >> pivot_cols[k]) & 1u) r ^= reduced[k];
    }
    if (r == 0) continue;
    auto c = static_cast<unsigned>(std::countr_zero(r));
    for (auto& q : reduced) {
      if ((q >> c) & 1u) q ^= r;
    }
    reduced.push_back(r);
    pivot_cols.push_back(c);
    if (reduced.size() == cols) break;
  }
  std::uint64_t pivot_mask = 0;
  for (auto c : pivot_cols) pivot_mask |= std::uint64_t{1} << c;
  std::vector<std::uint64_t> basis;
  for (unsigned f = 0; f < cols; ++f) {
    if ((pivot_mask >> f) & 1u) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      if ((reduced[k] >> f) & 1u) v |= std::uint64_t{1} << pivot_cols[k];
    }
    basis.push_back(v);
  }
  return basis;
}

namespace {

void require_gf2(const PrimeField& f) {
  if (f.modulus() != 2) {
    throw UnsupportedCharacteristic("bit-packed path requires GF(2), got " + f.descriptor().name());
  }
}

}  // namespace

BitMatrix to_bits(const Matrix<PrimeField>& m) {
  require_gf2(m.field());
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c)) out.set(r, c);
    }
  }
  return out;
}

BitVector to_bits(const PrimeField& field, std::span<const std::uint32_t> v) {
  require_gf2(field);
  BitVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) out.set(i);
  }
  return out;
}

Matrix<PrimeField> from_bits(const BitMatrix& m) {
  Matrix<PrimeField> out(PrimeField(2), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m.get(r, c) ? 1 : 0;
  }
  return out;
}

Vector<PrimeField> from_bits(const BitVector& v) {
  Vector<PrimeField> out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.test(i) ? 1 : 0;
  return out;
}

Subspace<PrimeField> to_subspace(const BitEchelon& e) {
  return Subspace<PrimeField>::span_of(from_bits(e.basis));
}

}  // namespace zpd
