#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zpd/bitlinalg.hpp"

using namespace zpd;

TEST(BitLinalg, PackedAgreesWithGenericOnRandomMatrices) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(1, 64);
  PrimeField f(2);
  for (int trial = 0; trial < 1000; ++trial) {
    auto rows = size(rng), cols = size(rng);
    // sparse or dense bits so that both full-rank and deficient cases appear
    auto m = zpdtest::random_matrix(rng, f, rows, cols, 0, trial % 3 == 0 ? 7 : 1);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = m(r, c) & 1u;
    }
    auto bits = to_bits(m);
    ASSERT_EQ(from_bits(bits), m);
    auto packed = bit_rref(bits);
    ASSERT_EQ(to_subspace(packed), rref(m)) << "trial " << trial;
    ASSERT_EQ(to_subspace(bit_kernel(bits)), kernel(m)) << "trial " << trial;
  }
}

TEST(BitLinalg, MaskKernelMatchesGeneric) {
  std::mt19937_64 rng(77);
  PrimeField f(2);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned cols = 1 + trial % 64;
    std::size_t rows = 1 + (trial * 13) % 70;
    std::vector<std::uint64_t> masks(rows);
    Matrix<PrimeField> m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      masks[r] = rng() & (cols == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols) - 1);
      if (trial % 2) masks[r] &= rng();
      for (unsigned c = 0; c < cols; ++c) m(r, c) = (masks[r] >> c) & 1u;
    }
    auto basis = mask_kernel(masks, cols);
    std::vector<Vector<PrimeField>> vs;
    for (auto b : basis) {
      Vector<PrimeField> v(cols);
      for (unsigned c = 0; c < cols; ++c) v[c] = (b >> c) & 1u;
      vs.push_back(v);
    }
    EXPECT_EQ(Subspace<PrimeField>::span_of(f, cols, vs), kernel(m)) << "trial " << trial;
    EXPECT_EQ(basis.size(), kernel(m).dim());
  }
}

TEST(BitLinalg, BitSpanMatchesAccumulator) {
  std::mt19937_64 rng(5);
  PrimeField f(2);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 130;
    BitSpan whole(n), left(n), right(n);
    SpanAccumulator<PrimeField> acc(f, n);
    for (int i = 0; i < 12; ++i) {
      auto v = zpdtest::random_vector(rng, f, n, 0, 1);
      auto b = to_bits(f, v);
      EXPECT_EQ(whole.insert(b), acc.insert(v));
      EXPECT_EQ(whole.contains(b), true);
      (i % 3 ? left : right).insert(b);
    }
    left.merge(right);
    EXPECT_EQ(to_subspace(left.echelon()), acc.to_subspace());
    EXPECT_EQ(to_subspace(whole.echelon()), acc.to_subspace());
  }
}

TEST(BitLinalg, BitVectorBasics) {
  BitVector v(130);
  EXPECT_TRUE(v.none());
  v.set(129);
  v.flip(3);
  EXPECT_EQ(v.find_first(), 3u);
  EXPECT_TRUE(v.test(129));
  BitVector w = v;
  w ^= v;
  EXPECT_TRUE(w.none());
}
