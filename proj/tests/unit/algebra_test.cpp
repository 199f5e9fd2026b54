#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "zpd/errors.hpp"

using namespace zpd;
using zpdtest::Vec;

namespace {

// matrix unit E_rs inside mat(k)
Vec unit_matrix(std::size_t k, std::size_t r, std::size_t s) {
  Vec v(k * k, 0);
  v[r * k + s] = 1;
  return v;
}

}  // namespace

TEST(Builders, Dimensions) {
  PrimeField f(2);
  RationalField q;
  for (std::size_t k = 1; k <= 4; ++k) {
    EXPECT_EQ(mat(k, f).dim(), k * k);
    EXPECT_EQ(tri(k, f).dim(), k * (k + 1) / 2);
    EXPECT_EQ(mat(k, q).dim(), k * k);
  }
  EXPECT_EQ(mat(2, f).dim(), 4u);
  EXPECT_EQ(tri(3, f).dim(), 6u);
  EXPECT_EQ(trunc(5, f).dim(), 5u);
  EXPECT_EQ(direct_product(mat(2, f), tri(2, f)).dim(), 7u);
  EXPECT_EQ(tensor_with_trunc(mat(2, f), 3).dim(), 12u);
  EXPECT_EQ(mat_over(2, trunc(2, f)).dim(), 8u);
  EXPECT_EQ(mat_over(3, trunc(2, f)).dim(), 18u);
}

TEST(Builders, RejectInvalidSizes) {
  PrimeField f(2);
  EXPECT_THROW(mat(0, f), InvalidSize);
  EXPECT_THROW(tri(0, f), InvalidSize);
  EXPECT_THROW(trunc(1, f), InvalidSize);
  EXPECT_THROW(tensor_with_trunc(mat(2, f), 1), InvalidSize);
  EXPECT_THROW(mat_over(0, trunc(2, f)), InvalidSize);
}

TEST(Builders, OutputsValidate) {
  PrimeField f2(2), f3(3);
  RationalField q;
  for (const auto& [name, a] : zpdtest::small_algebras()) EXPECT_TRUE(validate(a).ok()) << name;
  EXPECT_TRUE(validate(mat_over(2, trunc(2, f2))).ok());
  EXPECT_TRUE(validate(mat_over(2, tri(2, f3))).ok());
  EXPECT_TRUE(validate(tensor_with_trunc(tri(2, q), 3)).ok());
  EXPECT_TRUE(validate(mat(3, q)).ok());
  EXPECT_TRUE(validate(zpdtest::gf4()).ok());
}

TEST(Validate, BrokenUnitLaw) {
  PrimeField f(2);
  // e1 e1 = e2 with e1 claimed as unit: e1 e1 should be e1
  std::vector<Vec> table = {{0, 1}, {0, 1}, {0, 1}, {0, 1}};
  StructureAlgebra<PrimeField> a(f, 2, table, {1, 0});
  auto r = validate(a);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failure, ValidationResult::Failure::left_unit);
  EXPECT_EQ(r.triple[0], 0u);
  EXPECT_FALSE(r.message.empty());
  EXPECT_THROW(require_valid(a), std::invalid_argument);
}

TEST(Validate, DualNumbersTableIsValid) {
  PrimeField f(2);
  std::vector<Vec> table = {{1, 0}, {0, 1}, {0, 1}, {0, 0}};
  StructureAlgebra<PrimeField> a(f, 2, table, {1, 0});
  EXPECT_TRUE(validate(a).ok());
  EXPECT_EQ(a, trunc(2, f));
}

TEST(Validate, NonAssociativeReportsTriple) {
  PrimeField f(2);
  std::vector<Vec> table = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 0}, {0, 0, 1},
                            {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 0, 0}};
  StructureAlgebra<PrimeField> a(f, 3, table, {1, 0, 0});
  auto r = validate(a);
  ASSERT_EQ(r.failure, ValidationResult::Failure::associativity);
  auto [i, j, k] = r.triple;
  auto lhs = zpdtest::product(a, zpdtest::product(a, a.basis_element(i), a.basis_element(j)), a.basis_element(k));
  auto rhs = zpdtest::product(a, a.basis_element(i), zpdtest::product(a, a.basis_element(j), a.basis_element(k)));
  EXPECT_NE(lhs, rhs);
}

TEST(Algebra, ConstructorRejectsBadShapes) {
  PrimeField f(2);
  EXPECT_THROW(StructureAlgebra<PrimeField>(f, 0, {}, {}), InvalidSize);
  EXPECT_THROW(StructureAlgebra<PrimeField>(f, 2, {{1, 0}}, {1, 0}), DimensionMismatch);
  EXPECT_THROW(StructureAlgebra<PrimeField>(f, 1, {{1}}, {1, 0}), DimensionMismatch);
}

TEST(Multiply, Examples) {
  PrimeField f(2);
  auto m2 = mat(2, f);
  auto y = unit_matrix(2, 0, 1);
  EXPECT_EQ(multiply(m2, std::span<const std::uint32_t>(m2.unit()), std::span<const std::uint32_t>(y)), y);
  auto e12 = unit_matrix(2, 0, 1), e21 = unit_matrix(2, 1, 0);
  EXPECT_EQ(multiply(m2, std::span<const std::uint32_t>(e12), std::span<const std::uint32_t>(e21)), unit_matrix(2, 0, 0));
  auto t = trunc(2, f);
  Vec u{0, 1};
  EXPECT_EQ(multiply(t, std::span<const std::uint32_t>(u), std::span<const std::uint32_t>(u)), (Vec{0, 0}));
}

TEST(Multiply, AgreesWithOracleAndOperators) {
  std::mt19937_64 rng(1);
  for (const auto& [name, a] : zpdtest::small_algebras()) {
    const auto& f = a.field();
    for (int i = 0; i < 20; ++i) {
      auto x = zpdtest::random_vector(rng, f, a.dim()), y = zpdtest::random_vector(rng, f, a.dim());
      auto xy = multiply(a, std::span<const std::uint32_t>(x), std::span<const std::uint32_t>(y));
      EXPECT_EQ(xy, zpdtest::product(a, x, y)) << name;
      EXPECT_EQ(left_mult(a, std::span<const std::uint32_t>(x)).apply(y), xy) << name;
      EXPECT_EQ(right_mult(a, std::span<const std::uint32_t>(y)).apply(x), xy) << name;
      // associativity restated: L_x R_y = R_y L_x
      auto lx = left_mult(a, std::span<const std::uint32_t>(x));
      auto ry = right_mult(a, std::span<const std::uint32_t>(y));
      EXPECT_EQ(lx * ry, ry * lx) << name;
    }
    auto id = Matrix<PrimeField>::identity(f, a.dim());
    EXPECT_EQ(left_mult(a, std::span<const std::uint32_t>(a.unit())), id) << name;
    EXPECT_EQ(right_mult(a, std::span<const std::uint32_t>(a.unit())), id) << name;
  }
}

TEST(Multiply, DimensionMismatchThrows) {
  PrimeField f(2);
  auto a = mat(2, f);
  Vec x{1, 0};
  EXPECT_THROW(multiply(a, std::span<const std::uint32_t>(x), std::span<const std::uint32_t>(x)), DimensionMismatch);
  EXPECT_THROW(left_mult(a, std::span<const std::uint32_t>(x)), DimensionMismatch);
}

TEST(Slices, Examples) {
  PrimeField f2(2), f3(3);
  EXPECT_EQ(center(mat(2, f3)).dim(), 1u);
  EXPECT_EQ(commutator_subspace(mat(2, f2)).dim(), 3u);
  auto m2 = mat(2, f2);
  auto e11 = unit_matrix(2, 0, 0);
  auto z = zero_pair_slice(m2, std::span<const std::uint32_t>(e11));
  EXPECT_EQ(z, Subspace<PrimeField>::span_of(f2, 4, {unit_matrix(2, 1, 1)}));
}

TEST(Slices, MatchBruteForceDefinitions) {
  for (const auto& [name, a] : zpdtest::small_algebras()) {
    if (a.dim() > 4) continue;
    const auto& f = a.field();
    auto elems = zpdtest::all_elements(f, a.dim());
    for (const auto& x : elems) {
      auto xs = std::span<const std::uint32_t>(x);
      auto z = zero_pair_slice(a, xs), c = centralizer(a, xs), o = one_sided_slice(a, xs);
      EXPECT_TRUE(subspace_leq(z, c)) << name;
      for (const auto& y : elems) {
        auto xy = zpdtest::product(a, x, y), yx = zpdtest::product(a, y, x);
        EXPECT_EQ(z.contains(y), zpdtest::is_zero(xy) && zpdtest::is_zero(yx)) << name;
        EXPECT_EQ(c.contains(y), xy == yx) << name;
        EXPECT_EQ(o.contains(y), zpdtest::is_zero(xy)) << name;
      }
    }
  }
}

TEST(Slices, CenterAndCommutatorMatchBruteForce) {
  for (const auto& [name, a] : zpdtest::small_algebras()) {
    if (a.dim() > 4) continue;
    const auto& f = a.field();
    auto elems = zpdtest::all_elements(f, a.dim());
    SpanAccumulator<PrimeField> comm(f, a.dim());
    for (const auto& x : elems) {
      bool central = true;
      for (const auto& y : elems) {
        auto xy = zpdtest::product(a, x, y), yx = zpdtest::product(a, y, x);
        central = central && xy == yx;
        Vec d(a.dim());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = f.sub(xy[k], yx[k]);
        comm.insert(d);
      }
      EXPECT_EQ(center(a).contains(x), central) << name;
    }
    EXPECT_EQ(commutator_subspace(a), comm.to_subspace()) << name;
  }
}

TEST(DirectProduct, CrossProductsVanish) {
  PrimeField f(2);
  auto a = mat(2, f), b = tri(2, f);
  auto p = direct_product(a, b);
  EXPECT_TRUE(validate(p).ok());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = a.dim(); j < p.dim(); ++j) {
      EXPECT_TRUE(zpdtest::is_zero(Vec(p.product(i, j).begin(), p.product(i, j).end())));
      EXPECT_TRUE(zpdtest::is_zero(Vec(p.product(j, i).begin(), p.product(j, i).end())));
    }
  }
}

TEST(DirectProduct, SwappedFactorsAreRelabelings) {
  PrimeField f(2);
  auto a = mat(2, f), b = trunc(2, f);
  auto ab = direct_product(a, b), ba = direct_product(b, a);
  std::vector<std::size_t> perm(ab.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) perm[i] = b.dim() + i;
  for (std::size_t i = 0; i < b.dim(); ++i) perm[a.dim() + i] = i;
  EXPECT_TRUE(is_relabeling(ab, ba, std::span<const std::size_t>(perm)));
  std::vector<std::size_t> identity(ab.dim());
  std::iota(identity.begin(), identity.end(), 0);
  EXPECT_FALSE(is_relabeling(ab, ba, std::span<const std::size_t>(identity)));
}

TEST(MatOver, IsomorphicToTensorWithTrunc) {
  PrimeField f2(2), f3(3);
  for (std::size_t k : {2u, 3u}) {
    for (std::size_t m : {2u, 3u}) {
      auto lhs = mat_over(k, trunc(m, f2));
      auto rhs = tensor_with_trunc(mat(k, f2), m);
      std::vector<std::size_t> identity(lhs.dim());
      std::iota(identity.begin(), identity.end(), 0);
      EXPECT_TRUE(is_relabeling(lhs, rhs, std::span<const std::size_t>(identity)));
    }
  }
  auto lhs = mat_over(2, trunc(2, f3));
  std::vector<std::size_t> identity(lhs.dim());
  std::iota(identity.begin(), identity.end(), 0);
  EXPECT_TRUE(is_relabeling(lhs, tensor_with_trunc(mat(2, f3), 2), std::span<const std::size_t>(identity)));
}

TEST(TensorWithTrunc, GeneratorIsNilpotentAndCentral) {
  PrimeField f(3);
  auto a0 = tri(2, f);
  auto a = tensor_with_trunc(a0, 3);
  auto u = trunc_generator(a0, 3);
  auto us = std::span<const std::uint32_t>(u);
  auto u2 = multiply(a, us, us);
  EXPECT_FALSE(zpdtest::is_zero(u2));
  EXPECT_TRUE(zpdtest::is_zero(multiply(a, std::span<const std::uint32_t>(u2), us)));
  EXPECT_TRUE(center(a).contains(us));
  auto x = a0.basis_element(1);
  EXPECT_EQ(embed_power(a0, 3, std::span<const std::uint32_t>(x), 1),
            multiply(a, std::span<const std::uint32_t>(embed_power(a0, 3, std::span<const std::uint32_t>(x), 0)), us));
}

TEST(Ideals, LeftIdealOfGeneratorIsTwoSided) {
  PrimeField f(2);
  auto a0 = mat(2, f);
  auto a = mat_over(2, trunc(2, f));
  auto u = trunc_generator(a0, 2);
  auto m = left_ideal_generated(a, std::span<const std::uint32_t>(u));
  EXPECT_EQ(m.dim(), 4u);
  EXPECT_TRUE(is_two_sided_ideal(a, m));
  auto e11 = Subspace<PrimeField>::span_of(f, 8, {a.basis_element(0)});
  EXPECT_FALSE(is_two_sided_ideal(a, e11));
}
