#pragma once

// Algebra files:
//   {"field": {"gf": p} | "rational", "spec": "<builder expression>"}
//   {"field": ..., "dim": n, "unit": [...], "table": [[[...], ...], ...]}
// table[i][j] holds the coordinates of e_i e_j. GF(p) scalars are integers;
// rational scalars are integers or "num/den" strings.
//
// Builder expressions: mat(k) | tri(k) | trunc(k) | prod(E, E) |
// mat_over(k, E) | tensor_trunc(E, k).

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "zpd/algebra.hpp"

namespace zpdcli {

using Json = nlohmann::ordered_json;
using AnyAlgebra = std::variant<zpd::StructureAlgebra<zpd::PrimeField>, zpd::StructureAlgebra<zpd::RationalField>>;

/// Malformed input; location is a JSON pointer or "spec:<column>".
class LoadError : public std::runtime_error {
 public:
  LoadError(const std::string& location, const std::string& what)
      : std::runtime_error(location.empty() ? what : location + ": " + what), location_(location) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// Well-formed input whose table fails the algebra axioms.
class ValidationError : public LoadError {
 public:
  ValidationError(const zpd::ValidationResult& result) : LoadError("", result.message), result_(result) {}

  const zpd::ValidationResult& result() const noexcept { return result_; }

 private:
  zpd::ValidationResult result_;
};

zpd::FieldDescriptor parse_field(const Json& field);

AnyAlgebra build_expression(const std::string& expression, const zpd::FieldDescriptor& field);

/// Parses without checking the axioms.
AnyAlgebra parse_algebra(const Json& document);

/// Parses and validates; throws ValidationError on an axiom failure.
AnyAlgebra load_algebra(const Json& document);

Json read_json_file(const std::filesystem::path& path);

AnyAlgebra load_algebra_file(const std::filesystem::path& path);

/// Explicit dim/unit/table form; reloads to an equal algebra.
template <class F>
Json algebra_to_json(const zpd::StructureAlgebra<F>& a);

Json algebra_to_json(const AnyAlgebra& a);

Json field_to_json(const zpd::FieldDescriptor& field);

template <class F>
Json scalar_to_json(const F& field, const typename F::value_type& v);

template <class F>
Json vector_to_json(const F& field, std::span<const typename F::value_type> v);

}  // namespace zpdcli
