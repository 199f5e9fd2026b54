#include "zpdcli/encode.hpp"

namespace zpdcli {

int exit_code(zpd::Verdict v) noexcept {
  switch (v) {
    case zpd::Verdict::holds:
      return 0;
    case zpd::Verdict::fails:
      return 1;
    case zpd::Verdict::inconclusive:
      return 3;
  }
  return 3;
}

Json strategy_to_json(const zpd::SpanStrategy& s) {
  Json out;
  out["mode"] = s.is_exhaustive() ? "exhaustive" : "mc";
  if (s.is_exhaustive()) {
    out["cap"] = s.enumeration_cap;
  } else {
    out["seed"] = s.seed;
    out["window"] = s.sample_window;
    out["box"] = Json::array({s.sample_min, s.sample_max});
    out["draws_per_round"] = s.draws_per_round;
  }
  return out;
}

template <class F>
Json form_to_json(const zpd::BilinearForm<F>& phi) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < phi.dim(); ++i) rows.push_back(vector_to_json(phi.coeffs.field(), phi.coeffs.row(i)));
  return rows;
}

template <class F>
Json certificate_to_json(const zpd::Certificate<F>& c) {
  Json out;
  out["property"] = zpd::to_string(c.property);
  out["verdict"] = zpd::to_string(c.verdict);
  out["route"] = c.route == zpd::Certificate<F>::Route::tensor ? "tensor" : "functional";
  out["kernel_dim"] = c.kernel.dim();
  out["span_dim"] = c.span.dim();
  out["span_exact"] = c.span_exact;
  out["points_processed"] = c.points_processed;
  if (c.witness) {
    const auto& f = c.kernel.basis().field();
    out["witness"] = Json{{"form", form_to_json(c.witness->form)},
                          {"tensor", vector_to_json(f, std::span<const typename F::value_type>(c.witness->tensor))}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

template <class F>
Json escape_to_json(const zpd::DerivationEscape<F>& e) {
  const auto& f = e.derivation.matrix.field();
  Json columns = Json::array();
  for (std::size_t j = 0; j < e.derivation.matrix.cols(); ++j) {
    auto col = e.derivation.matrix.column(j);
    columns.push_back(vector_to_json(f, std::span<const typename F::value_type>(col)));
  }
  return Json{{"derivation_columns", std::move(columns)},
              {"basis_index", e.basis_index},
              {"image", vector_to_json(f, std::span<const typename F::value_type>(e.image))}};
}

template <class F>
Json separability_to_json(const zpd::StructureAlgebra<F>& a, const std::optional<zpd::SeparabilityElement<F>>& e) {
  Json out;
  out["separable"] = e.has_value();
  if (!e) {
    out["witness"] = nullptr;
    return out;
  }
  const auto n = a.dim();
  const auto& f = a.field();
  Json terms = Json::array();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const auto& t = e->tensor[zpd::tensor_index(n, p, q)];
      if (f.is_zero(t)) continue;
      terms.push_back(Json{{"left", p}, {"right", q}, {"coeff", scalar_to_json(f, t)}});
    }
  }
  out["witness"] = Json{{"tensor", vector_to_json(f, std::span<const typename F::value_type>(e->tensor))},
                        {"terms", std::move(terms)}};
  return out;
}

#define ZPDCLI_INSTANTIATE_ENCODE(F)                                                                 \
  template Json form_to_json<F>(const zpd::BilinearForm<F>&);                                        \
  template Json certificate_to_json<F>(const zpd::Certificate<F>&);                                  \
  template Json escape_to_json<F>(const zpd::DerivationEscape<F>&);                                  \
  template Json separability_to_json<F>(const zpd::StructureAlgebra<F>&,                             \
                                        const std::optional<zpd::SeparabilityElement<F>>&);

ZPDCLI_INSTANTIATE_ENCODE(zpd::PrimeField)
ZPDCLI_INSTANTIATE_ENCODE(zpd::RationalField)

}  // namespace zpdcli
