#include "zpd/field.hpp"

#include <stdexcept>
#include <utility>

namespace zpd {

bool is_prime_number(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint32_t p) {
  if (p < 2 || p > (std::uint32_t{1} << 31) || !is_prime_number(p)) {
    throw std::invalid_argument("field modulus " + std::to_string(p) +
                                " is not a prime in [2, 2^31]");
  }
  return FieldDescriptor{Kind::prime, p};
}

std::string FieldDescriptor::name() const {
  return kind == Kind::prime ? "GF(" + std::to_string(p) + ")" : "QQ";
}

PrimeField::PrimeField(std::uint32_t p) : p_(FieldDescriptor::prime_field(p).p) {}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + descriptor().name());
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return from_int(t);
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (a == 0) throw std::domain_error("inverse of zero in QQ");
  return 1 / a;
}

std::string RationalField::format(const value_type& a) const {
  if (boost::multiprecision::denominator(a) == 1) {
    return boost::multiprecision::numerator(a).str();
  }
  return a.str();
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("malformed rational \"" + text + "\""); };
  auto valid_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
  return Rational(n, d);
}

}  // namespace zpd
