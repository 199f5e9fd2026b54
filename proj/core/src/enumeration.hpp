#pragma once

// Walks projective representatives of GF(p)^n. Points are encoded as integers
// N in [0, p^n) with coordinate i equal to digit i of N in base p; a point is a
// representative when its lowest nonzero digit is 1.

#include <cstdint>
#include <span>
#include <vector>

#include "zpd/field.hpp"

namespace zpd::detail {

template <class Visit>
bool for_each_projective(const PrimeField& field, std::size_t n, std::uint64_t lo, std::uint64_t hi,
                         Visit&& visit) {
  const std::uint32_t p = field.modulus();
  std::vector<std::uint32_t> digits(n, 0);
  std::uint64_t rest = lo;
  for (std::size_t i = 0; i < n; ++i) {
    digits[i] = static_cast<std::uint32_t>(rest % p);
    rest /= p;
  }
  for (std::uint64_t code = lo; code < hi; ++code) {
    std::size_t lead = 0;
    while (lead < n && digits[lead] == 0) ++lead;
    if (lead < n && digits[lead] == 1) {
      if (!visit(std::span<const std::uint32_t>(digits))) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return true;
}

/// Number of projective representatives among the nonzero points, (p^n - 1)/(p - 1).
inline std::uint64_t projective_count(std::uint32_t p, std::uint64_t points) noexcept {
  return (points - 1) / (p - 1);
}

}  // namespace zpd::detail
