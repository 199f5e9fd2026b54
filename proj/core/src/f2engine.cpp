#include "f2engine.hpp"

#include <bit>

#include "zpd/errors.hpp"

namespace zpd::detail {

F2Engine::F2Engine(const StructureAlgebra<PrimeField>& a) : n_(static_cast<unsigned>(a.dim())) {
  if (!supports(a)) throw UnsupportedCharacteristic("packed engine needs GF(2) and dim <= 64");
  prod_.assign(std::size_t{n_} * n_, 0);
  lrows_.assign(std::size_t{n_} * n_, 0);
  rrows_.assign(std::size_t{n_} * n_, 0);
  unit_ = to_mask(a.unit());
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      auto p = to_mask(a.product(i, j));
      prod_[i * n_ + j] = p;
      for (unsigned r = 0; r < n_; ++r) {
        if ((p >> r) & 1u) {
          lrows_[i * n_ + r] |= std::uint64_t{1} << j;
          rrows_[j * n_ + r] |= std::uint64_t{1} << i;
        }
      }
    }
  }
}

std::uint64_t F2Engine::multiply(std::uint64_t x, std::uint64_t y) const noexcept {
  std::uint64_t out = 0;
  for (auto xs = x; xs; xs &= xs - 1) {
    const unsigned i = static_cast<unsigned>(std::countr_zero(xs));
    const std::uint64_t* row = &prod_[std::size_t{i} * n_];
    for (auto ys = y; ys; ys &= ys - 1) out ^= row[std::countr_zero(ys)];
  }
  return out;
}

void F2Engine::left_rows(std::uint64_t x, std::vector<std::uint64_t>& out) const {
  const auto base = out.size();
  out.resize(base + n_, 0);
  for (auto xs = x; xs; xs &= xs - 1) {
    const unsigned i = static_cast<unsigned>(std::countr_zero(xs));
    for (unsigned r = 0; r < n_; ++r) out[base + r] ^= lrows_[i * n_ + r];
  }
}

void F2Engine::right_rows(std::uint64_t x, std::vector<std::uint64_t>& out) const {
  const auto base = out.size();
  out.resize(base + n_, 0);
  for (auto xs = x; xs; xs &= xs - 1) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(xs));
    for (unsigned r = 0; r < n_; ++r) out[base + r] ^= rrows_[j * n_ + r];
  }
}

std::vector<std::uint64_t> F2Engine::zero_pair_slice(std::uint64_t x) const {
  std::vector<std::uint64_t> rows;
  rows.reserve(2 * n_);
  left_rows(x, rows);
  right_rows(x, rows);
  return mask_kernel(rows, n_);
}

std::vector<std::uint64_t> F2Engine::one_sided_slice(std::uint64_t x) const {
  std::vector<std::uint64_t> rows;
  rows.reserve(n_);
  left_rows(x, rows);
  return mask_kernel(rows, n_);
}

std::vector<std::uint64_t> F2Engine::centralizer(std::uint64_t x) const {
  std::vector<std::uint64_t> rows;
  rows.reserve(2 * n_);
  left_rows(x, rows);
  right_rows(x, rows);
  for (unsigned r = 0; r < n_; ++r) rows[r] ^= rows[n_ + r];  // L_x - R_x
  rows.resize(n_);
  return mask_kernel(rows, n_);
}

BitVector F2Engine::tensor(std::uint64_t x, std::uint64_t y) const {
  BitVector t(std::size_t{n_} * n_);
  for (auto xs = x; xs; xs &= xs - 1) {
    const unsigned i = static_cast<unsigned>(std::countr_zero(xs));
    for (auto ys = y; ys; ys &= ys - 1) t.set(std::size_t{i} * n_ + std::countr_zero(ys));
  }
  return t;
}

BitVector F2Engine::element(std::uint64_t x) const {
  BitVector v(n_);
  for (auto xs = x; xs; xs &= xs - 1) v.set(static_cast<std::size_t>(std::countr_zero(xs)));
  return v;
}

std::uint64_t F2Engine::to_mask(std::span<const std::uint32_t> v) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] & 1u) m |= std::uint64_t{1} << i;
  }
  return m;
}

Vector<PrimeField> F2Engine::from_mask(std::uint64_t x, unsigned n) {
  Vector<PrimeField> v(n, 0);
  for (unsigned i = 0; i < n; ++i) v[i] = (x >> i) & 1u;
  return v;
}

}  // namespace zpd::detail
