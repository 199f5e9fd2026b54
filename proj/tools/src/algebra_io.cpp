#include "zpdcli/algebra_io.hpp"

#include <cctype>
#include <fstream>
#include <limits>

#include "zpd/builders.hpp"
#include "zpd/errors.hpp"

namespace zpdcli {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const std::string& text, const zpd::FieldDescriptor& field) : text_(text), field_(field) {}

  AnyAlgebra parse() {
    auto a = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return a;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw LoadError("spec:" + std::to_string(pos_ + 1), what + " in '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    auto start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a builder name");
    return text_.substr(start, pos_ - start);
  }

  std::size_t integer() {
    skip_space();
    auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoul(text_.substr(start, pos_ - start));
  }

  AnyAlgebra expression() {
    if (field_.kind == zpd::FieldDescriptor::Kind::prime) return typed<zpd::PrimeField>(zpd::PrimeField(field_.p));
    return typed<zpd::RationalField>(zpd::RationalField{});
  }

  template <class F>
  zpd::StructureAlgebra<F> typed(const F& field) {
    auto start = pos_;
    auto name = identifier();
    expect('(');
    auto guard = [&](auto build) {
      try {
        return build();
      } catch (const zpd::Error& e) {
        pos_ = start;
        fail(e.what());
      }
    };
    zpd::StructureAlgebra<F> result = [&] {
      if (name == "mat" || name == "tri" || name == "trunc") {
        auto k = integer();
        return guard([&] {
          if (name == "mat") return zpd::mat(k, field);
          if (name == "tri") return zpd::tri(k, field);
          return zpd::trunc(k, field);
        });
      }
      if (name == "prod") {
        auto left = typed(field);
        expect(',');
        auto right = typed(field);
        return guard([&] { return zpd::direct_product(left, right); });
      }
      if (name == "mat_over") {
        auto k = integer();
        expect(',');
        auto inner = typed(field);
        return guard([&] { return zpd::mat_over(k, inner); });
      }
      if (name == "tensor_trunc") {
        auto inner = typed(field);
        expect(',');
        auto k = integer();
        return guard([&] { return zpd::tensor_with_trunc(inner, k); });
      }
      pos_ = start;
      fail("unknown builder '" + name + "'");
    }();
    expect(')');
    return result;
  }

  std::string text_;
  zpd::FieldDescriptor field_;
  std::size_t pos_ = 0;
};

template <class F>
typename F::value_type parse_scalar(const F& field, const Json& j, const std::string& where) {
  if constexpr (std::is_same_v<F, zpd::PrimeField>) {
    if (!j.is_number_integer()) throw LoadError(where, "expected an integer scalar");
    return field.from_int(j.get<std::int64_t>());
  } else {
    if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
    if (!j.is_string()) throw LoadError(where, "expected an integer or \"num/den\" string");
    try {
      return zpd::parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw LoadError(where, e.what());
    }
  }
}

template <class F>
zpd::Vector<F> parse_vector(const F& field, const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw LoadError(where, "expected an array");
  if (j.size() != n) throw LoadError(where, "expected " + std::to_string(n) + " coordinates");
  zpd::Vector<F> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(parse_scalar(field, j[i], where + "/" + std::to_string(i)));
  return v;
}

template <class F>
zpd::StructureAlgebra<F> parse_table(const F& field, const Json& doc) {
  if (!doc.contains("dim")) throw LoadError("/dim", "missing");
  const auto& jd = doc["dim"];
  if (!jd.is_number_unsigned() || jd.get<std::uint64_t>() == 0 || jd.get<std::uint64_t>() > 4096) {
    throw LoadError("/dim", "expected a positive integer");
  }
  const auto n = jd.get<std::size_t>();
  if (!doc.contains("unit")) throw LoadError("/unit", "missing");
  auto unit = parse_vector(field, doc["unit"], n, "/unit");
  if (!doc.contains("table")) throw LoadError("/table", "missing");
  const auto& jt = doc["table"];
  if (!jt.is_array() || jt.size() != n) throw LoadError("/table", "expected " + std::to_string(n) + " rows");
  std::vector<zpd::Vector<F>> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto where = "/table/" + std::to_string(i);
    if (!jt[i].is_array() || jt[i].size() != n) throw LoadError(where, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) table.push_back(parse_vector(field, jt[i][j], n, where + "/" + std::to_string(j)));
  }
  std::string label = doc.contains("label") && doc["label"].is_string() ? doc["label"].get<std::string>() : "table";
  return zpd::StructureAlgebra<F>(field, n, table, std::move(unit), label);
}

}  // namespace

zpd::FieldDescriptor parse_field(const Json& field) {
  if (field.is_string() && field.get<std::string>() == "rational") return zpd::FieldDescriptor::rationals();
  if (field.is_object() && field.contains("gf")) {
    const auto& p = field["gf"];
    if (!p.is_number_unsigned() || p.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max() ||
        !zpd::is_prime_number(p.get<std::uint64_t>())) {
      throw LoadError("/field/gf", "expected a prime below 2^31");
    }
    try {
      return zpd::FieldDescriptor::prime_field(p.get<std::uint32_t>());
    } catch (const std::exception& e) {
      throw LoadError("/field/gf", e.what());
    }
  }
  throw LoadError("/field", "expected {\"gf\": p} or \"rational\"");
}

AnyAlgebra build_expression(const std::string& expression, const zpd::FieldDescriptor& field) {
  return ExpressionParser(expression, field).parse();
}

AnyAlgebra parse_algebra(const Json& document) {
  if (!document.is_object()) throw LoadError("", "expected a JSON object");
  if (!document.contains("field")) throw LoadError("/field", "missing");
  auto field = parse_field(document["field"]);
  if (document.contains("spec")) {
    if (!document["spec"].is_string()) throw LoadError("/spec", "expected a string");
    return build_expression(document["spec"].get<std::string>(), field);
  }
  try {
    if (field.kind == zpd::FieldDescriptor::Kind::prime) return parse_table(zpd::PrimeField(field.p), document);
    return parse_table(zpd::RationalField{}, document);
  } catch (const zpd::Error& e) {
    throw LoadError("", e.what());
  }
}

AnyAlgebra load_algebra(const Json& document) {
  auto a = parse_algebra(document);
  std::visit(
      [](const auto& alg) {
        auto result = zpd::validate(alg);
        if (!result.ok()) throw ValidationError(result);
      },
      a);
  return a;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string(), "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw LoadError(path.string() + "@byte " + std::to_string(e.byte), e.what());
  }
}

AnyAlgebra load_algebra_file(const std::filesystem::path& path) {
  return load_algebra(read_json_file(path));
}

Json field_to_json(const zpd::FieldDescriptor& field) {
  if (field.kind == zpd::FieldDescriptor::Kind::prime) return Json{{"gf", field.p}};
  return "rational";
}

template <class F>
Json scalar_to_json(const F& field, const typename F::value_type& v) {
  if constexpr (std::is_same_v<F, zpd::PrimeField>) {
    (void)field;
    return v;
  } else {
    return field.format(v);
  }
}

template <class F>
Json vector_to_json(const F& field, std::span<const typename F::value_type> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(field, x));
  return out;
}

template <class F>
Json algebra_to_json(const zpd::StructureAlgebra<F>& a) {
  const auto n = a.dim();
  Json table = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(vector_to_json(a.field(), a.product(i, j)));
    table.push_back(std::move(row));
  }
  Json out;
  out["field"] = field_to_json(a.field().descriptor());
  out["label"] = a.label();
  out["dim"] = n;
  out["unit"] = vector_to_json(a.field(), std::span<const typename F::value_type>(a.unit()));
  out["table"] = std::move(table);
  return out;
}

Json algebra_to_json(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) { return algebra_to_json(alg); }, a);
}

template Json algebra_to_json(const zpd::StructureAlgebra<zpd::PrimeField>&);
template Json algebra_to_json(const zpd::StructureAlgebra<zpd::RationalField>&);
template Json scalar_to_json(const zpd::PrimeField&, const std::uint32_t&);
template Json scalar_to_json(const zpd::RationalField&, const zpd::Rational&);
template Json vector_to_json(const zpd::PrimeField&, std::span<const std::uint32_t>);
template Json vector_to_json(const zpd::RationalField&, std::span<const zpd::Rational>);

}  // namespace zpdcli
