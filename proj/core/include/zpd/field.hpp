#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace zpd {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Names the base field of an algebra: a prime field GF(p) or the rationals.
struct FieldDescriptor {
  enum class Kind { prime, rational };

  Kind kind = Kind::rational;
  std::uint32_t p = 0;  // 0 for the rationals

  static FieldDescriptor prime_field(std::uint32_t p);
  static FieldDescriptor rationals() { return {}; }

  std::uint32_t characteristic() const noexcept { return p; }
  bool is_prime() const noexcept { return kind == Kind::prime; }

  /// "GF(p)" or "QQ".
  std::string name() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

bool is_prime_number(std::uint64_t n) noexcept;

/// GF(p) for a prime 2 <= p <= 2^31. Residues are kept in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  FieldDescriptor descriptor() const { return FieldDescriptor::prime_field(p_); }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  value_type from_int(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }

  value_type add(value_type a, value_type b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  /// Throws std::domain_error on zero.
  value_type inv(value_type a) const;

  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool is_one(value_type a) const noexcept { return a == 1; }

  std::string format(value_type a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// The rationals with exact arbitrary-precision arithmetic.
class RationalField {
 public:
  using value_type = Rational;

  std::uint32_t characteristic() const noexcept { return 0; }
  FieldDescriptor descriptor() const { return FieldDescriptor::rationals(); }

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type from_int(std::int64_t v) const { return Rational(v); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;

  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  /// "n" for integers, "n/d" otherwise.
  std::string format(const value_type& a) const;

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Parses "n", "-n" or "n/d" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

template <class F>
concept ExactField = requires(const F& f, const typename F::value_type& a) {
  typename F::value_type;
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.from_int(std::int64_t{}) } -> std::convertible_to<typename F::value_type>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
  { f.format(a) } -> std::convertible_to<std::string>;
};

static_assert(ExactField<PrimeField>);
static_assert(ExactField<RationalField>);

}  // namespace zpd
