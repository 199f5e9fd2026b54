// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zpd/derivations.hpp"
#include "zpd/properties.hpp"
#include "zpd/separability.hpp"

using namespace zpd;
using zpdtest::Algebra;
using zpdtest::Vec;

namespace {

std::span<const std::uint32_t> sp(const Vec& v) { return v; }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const SpanStrategy kExhaustive = SpanStrategy::exhaustive();

bool holds(const Certificate<PrimeField>& c) { return c.verdict == Verdict::holds; }

/// Every exhaustive test algebra used by the suite-style criteria.
std::vector<zpdtest::Named> exhaustive_set() {
  PrimeField f2(2);
  auto set = zpdtest::small_algebras();
  set.push_back({"mat3_F2", mat(3, f2)});
  set.push_back({"mat2(trunc2)_F2", mat_over(2, trunc(2, f2))});
  set.push_back({"GF4", zpdtest::gf4()});
  return set;
}

Outcome separable_simple() {
  Outcome o;
  PrimeField f2(2), f3(3);
  for (auto a : {mat(2, f2), mat(2, f3), mat(3, f2)}) {
    auto t0 = Clock::now();
    auto name = a.label() + " over " + a.field().descriptor().name();
    o.require(is_separable(a), name + " not separable");
    o.require(holds(is_2zpd(a, kExhaustive)), name + " not 2-zpd");
    o.require(seconds_since(t0) < 5.0, name + " took more than 5 s");
  }
  return o;
}

Outcome triangular() {
  Outcome o;
  PrimeField f2(2);
  auto t0 = Clock::now();
  for (auto a : {tri(2, f2), tri(3, f2)}) {
    o.require(holds(is_2zpd(a, kExhaustive)), a.label() + " not 2-zpd");
    o.require(all_dual_derivations_inner(a), a.label() + " has outer dual derivations");
    o.require(h1_dimension(a) == 0, a.label() + " has h1 != 0");
  }
  o.require(seconds_since(t0) < 5.0, "took more than 5 s");
  return o;
}

Outcome flagship(std::string& note) {
  Outcome o;
  auto t0 = Clock::now();
  PrimeField f2(2);
  auto a0 = mat(2, f2);
  auto a = mat_over(2, trunc(2, f2));
  o.require(validate(a).ok(), "flagship fails validation");
  o.require(holds(is_zpd(a, kExhaustive)), "zpd does not hold");
  o.require(holds(is_zlpd(a, kExhaustive)), "zLpd does not hold");
  auto c = is_2zpd(a, kExhaustive);
  o.require(c.verdict == Verdict::fails, "2-zpd does not fail");
  o.require(c.witness.has_value() && verify_certificate(a, c), "witness does not self-verify");
  if (c.witness) {
    o.require(zpdtest::is_zero(mu(a).apply(c.witness->tensor)), "witness tensor outside ker mu");
    o.require(!a.field().is_zero(apply_form(c.witness->form, sp(c.witness->tensor))), "phi(t) = 0");
  }
  auto u = trunc_generator(a0, 2);
  auto m = left_ideal_generated(a, sp(u));
  o.require(!theorem_we_check(a, m, kExhaustive), "theorem_we_check returned true for M = Au");
  auto e11 = a0.basis_element(0);
  auto e11u = embed_power(a0, 2, sp(e11), 1);
  auto euler = euler_derivation(f2, a0.dim(), 2);
  auto theta = theta_span(a, m, kExhaustive);
  o.require(derivations_into(a, m).contains(derivation_coords(euler)), "Euler map is not a derivation into Au");
  o.require(euler.apply(e11u) == e11u, "Euler map does not fix E11u");
  o.require(!theta.span.contains(e11u), "E11u lies in Theta");
  auto esc = find_theorem_we_escape(a, m, kExhaustive);
  o.require(esc && !theta.span.contains(esc->image), "no escaping derivation reported");
  // the dim-16 member of the same family walks 2^16 points
  auto big0 = mat(2, f2);
  auto big = mat_over(2, trunc(4, f2));
  auto big_c = is_2zpd(big, kExhaustive);
  o.require(holds(is_zpd(big, kExhaustive)) && holds(is_zlpd(big, kExhaustive)), "dim-16 member not zpd and zLpd");
  o.require(big_c.verdict == Verdict::fails && verify_certificate(big, big_c), "dim-16 member does not fail 2-zpd");
  auto big_u = trunc_generator(big0, 4);
  o.require(!theorem_we_check(big, left_ideal_generated(big, sp(big_u)), kExhaustive), "dim-16 member passes Theta check");
  o.require(seconds_since(t0) < 300.0, "took more than 5 min");
  std::ostringstream s;
  s << "dim " << a.dim() << ", dim Theta " << theta.span.dim() << "; dim " << big.dim() << " member "
    << big_c.points_processed << " projective points";
  note = s.str();
  return o;
}

Outcome local_commutative() {
  Outcome o;
  auto t0 = Clock::now();
  PrimeField f2(2);
  auto a = trunc(2, f2);
  o.require(is_zpd(a, kExhaustive).verdict == Verdict::fails, "zpd does not fail");
  auto c = is_2zpd(a, kExhaustive);
  o.require(c.verdict == Verdict::fails, "2-zpd does not fail");
  o.require(c.witness && c.witness->tensor == Vec{0, 1, 1, 0}, "witness t != 1⊗u + u⊗1");
  Vec uu{0, 0, 0, 1};
  o.require(c.span == Subspace<PrimeField>::span_of(f2, 4, {uu}), "zero-pair span != span{u⊗u}");
  o.require(c.span == zpdtest::brute_zero_pairs(a), "zero-pair span disagrees with full enumeration");
  o.require(c.kernel.dim() == 2 && c.span.dim() == 1, "dims are not 2 vs 1");
  o.require(seconds_since(t0) < 1.0, "took more than 1 s");
  return o;
}

Outcome idempotent_generated() {
  Outcome o;
  auto t0 = Clock::now();
  auto f = field_algebra(PrimeField(2));
  o.require(holds(is_2zpd(direct_product(direct_product(f, f), f), kExhaustive)), "F2^3 not 2-zpd");
  o.require(seconds_since(t0) < 1.0, "took more than 1 s");
  return o;
}

Outcome direct_product_law() {
  Outcome o;
  auto t0 = Clock::now();
  PrimeField f2(2);
  std::vector<Algebra> set = {mat(2, f2), tri(2, f2), trunc(2, f2), field_algebra(f2)};
  int pairs = 0;
  for (const auto& a : set) {
    for (const auto& b : set) {
      bool lhs = holds(is_2zpd(direct_product(a, b), kExhaustive));
      bool rhs = holds(is_2zpd(a, kExhaustive)) && holds(is_2zpd(b, kExhaustive));
      o.require(lhs == rhs, "law broken for " + a.label() + " x " + b.label());
      ++pairs;
    }
  }
  o.require(pairs == 16, "wrong pair count");
  o.require(seconds_since(t0) < 120.0, "took more than 2 min");
  return o;
}

Outcome xyzw_suite(std::string& note) {
  Outcome o;
  std::size_t algebras = 0, forms = 0;
  for (const auto& [name, a] : exhaustive_set()) {
    if (!holds(is_zpd(a, kExhaustive))) continue;
    ++algebras;
    auto s = zero_pair_span(a, kExhaustive).span;
    for (const auto& phi : annihilating_forms(a, s)) {
      ++forms;
      o.require(check_xyzw_identity(a, phi), "identity fails on " + name);
    }
  }
  note = std::to_string(algebras) + " zpd algebras, " + std::to_string(forms) + " forms";
  return o;
}

Outcome teq_suite(std::string& note) {
  Outcome o;
  std::size_t count = 0;
  for (const auto& [name, a] : exhaustive_set()) {
    auto zp = zero_pair_span(a, kExhaustive);
    bool lhs = decide(a, Property::two_zpd, zp).verdict == Verdict::holds;
    bool rhs = holds(is_zlpd(a, kExhaustive)) && check_teq_iii(a, kExhaustive, zp.span);
    o.require(lhs == rhs, "disagreement on " + name);
    ++count;
  }
  note = std::to_string(count) + " algebras";
  return o;
}

Outcome duality_suite(std::string& note) {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t functionals = 0;
  for (const auto& [name, a] : exhaustive_set()) {
    auto zp = zero_pair_span(a, kExhaustive);
    o.require(decide(a, Property::two_zpd, zp).verdict == is_2zpd_dual(a, zp).verdict, "verdicts differ on " + name);
    auto rows = rref(mu(a));
    for (int i = 0; i < 200; ++i) {
      BilinearForm<PrimeField> phi{zpdtest::random_matrix(rng, a.field(), a.dim(), a.dim())};
      if (i % 2 == 0) {
        // half of the samples are decomposable by construction
        auto t1 = zpdtest::random_vector(rng, a.field(), a.dim()), t2 = zpdtest::random_vector(rng, a.field(), a.dim());
        for (std::size_t x = 0; x < a.dim(); ++x) {
          for (std::size_t y = 0; y < a.dim(); ++y) {
            phi.coeffs(x, y) = a.field().add(dot(a.field(), a.product(x, y), sp(t1)), dot(a.field(), a.product(y, x), sp(t2)));
          }
        }
      }
      auto d = decompose_functional(a, phi);
      o.require(d.has_value() == rows.contains(flatten(phi)), "decomposition disagrees with row space on " + name);
      if (d) o.require(verify_decomposition(a, phi, *d), "decomposition does not verify on " + name);
      ++functionals;
    }
  }
  note = std::to_string(functionals) + " functionals";
  return o;
}

Outcome reconstruction(std::string& note) {
  Outcome o;
  PrimeField f3(3);
  auto a = mat(2, f3);
  auto e = separability_idempotent(a);
  o.require(e.has_value(), "no separability idempotent");
  if (!e) return o;
  auto s = zero_pair_span(a, kExhaustive).span;
  auto perp = annihilator(s);
  for (const auto& phi : annihilating_forms(a, s)) {
    auto d = reconstruct_decomposition(a, phi, *e);
    o.require(verify_decomposition(a, phi, d), "reconstruction does not reproduce phi");
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        auto v = f3.add(dot(f3, a.product(i, j), sp(d.tau1)), dot(f3, a.product(j, i), sp(d.tau2)));
        o.require(v == phi.coeffs(i, j), "mismatch at a basis pair");
      }
    }
  }
  std::size_t symmetric = 0;
  for (const auto& coeffs : zpdtest::all_elements(f3, perp.dim())) {
    Vec flat(16, 0);
    for (std::size_t r = 0; r < perp.dim(); ++r) {
      for (std::size_t k = 0; k < 16; ++k) flat[k] = f3.add(flat[k], f3.mul(coeffs[r], perp.basis()(r, k)));
    }
    auto phi = unflatten(f3, 4, sp(flat));
    if (!phi.is_symmetric()) continue;
    ++symmetric;
    o.require(check_symmetric_half(a, phi), "symmetric remark fails");
  }
  note = std::to_string(perp.dim()) + " basis forms, " + std::to_string(symmetric) + " symmetric members";
  return o;
}

Outcome monte_carlo(std::string& note) {
  Outcome o;
  auto c = is_2zpd(mat(2, RationalField{}), SpanStrategy::monte_carlo(0));
  o.require(c.verdict == Verdict::holds, "mat(2, QQ) not certified under seed 0");
  o.require(!c.span_exact, "sampled span flagged exact");
  std::size_t checks = 0;
  for (const auto& [name, a] : exhaustive_set()) {
    if (a.dim() > 8) continue;
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      auto mc = SpanStrategy::monte_carlo(seed);
      o.require(subspace_leq(zero_pair_span(a, mc).span, zero_pair_span(a, kExhaustive).span), "zero-pair " + name);
      o.require(subspace_leq(one_sided_zero_span(a, mc).span, one_sided_zero_span(a, kExhaustive).span), "one-sided " + name);
      o.require(subspace_leq(commuting_span(a, mc).span, commuting_span(a, kExhaustive).span), "commuting " + name);
      o.require(subspace_leq(square_zero_span(a, mc).span, square_zero_span(a, kExhaustive).span), "square-zero " + name);
      checks += 4;
    }
  }
  note = std::to_string(checks) + " subset checks";
  return o;
}

Outcome square_zero_is_commutator() {
  Outcome o;
  PrimeField f2(2), f3(3);
  for (auto a : {mat(2, f2), mat(2, f3), mat(3, f2)}) {
    o.require(square_zero_span(a, kExhaustive).span == commutator_subspace(a),
              a.label() + " over " + a.field().descriptor().name());
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome(std::string&)> run;
  };
  auto plain = [](Outcome (*fn)()) { return [fn](std::string&) { return fn(); }; };
  std::vector<Criterion> criteria = {
      {1, "separable simple algebras are 2-zpd", plain(separable_simple)},
      {2, "triangular algebras are 2-zpd with trivial H1", plain(triangular)},
      {3, "M2(F2[u]/u^2) is zpd and zLpd but not 2-zpd", flagship},
      {4, "F2[u]/u^2 fails with witness 1(x)u + u(x)1", plain(local_commutative)},
      {5, "F2 x F2 x F2 is 2-zpd", plain(idempotent_generated)},
      {6, "direct-product law on 16 ordered pairs", plain(direct_product_law)},
      {7, "xyzw identity on annihilating forms of zpd algebras", xyzw_suite},
      {8, "2-zpd iff zLpd and condition (iii)", teq_suite},
      {9, "primal/dual agreement and decomposition oracle", duality_suite},
      {10, "constructive reconstruction on M2(F3)", reconstruction},
      {11, "Monte-Carlo soundness", monte_carlo},
      {12, "square-zero span equals [A,A]", plain(square_zero_is_commutator)},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    std::string note;
    Outcome o;
    try {
      o = c.run(note);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    auto elapsed = seconds_since(t0);
    failures += !o.ok;
    std::printf("%s  %2d  %-52s %8.3f s", o.ok ? "PASS" : "FAIL", c.id, c.title, elapsed);
    if (!note.empty()) std::printf("  [%s]", note.c_str());
    if (!o.ok) std::printf("  -- %s", o.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
