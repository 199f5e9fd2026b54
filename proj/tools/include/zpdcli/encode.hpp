#pragma once

#include "zpd/derivations.hpp"
#include "zpd/properties.hpp"
#include "zpd/separability.hpp"
#include "zpdcli/algebra_io.hpp"

namespace zpdcli {

/// 0 holds, 1 fails, 3 inconclusive.
int exit_code(zpd::Verdict v) noexcept;

Json strategy_to_json(const zpd::SpanStrategy& s);

template <class F>
Json form_to_json(const zpd::BilinearForm<F>& phi);

template <class F>
Json certificate_to_json(const zpd::Certificate<F>& c);

template <class F>
Json escape_to_json(const zpd::DerivationEscape<F>& e);

template <class F>
Json separability_to_json(const zpd::StructureAlgebra<F>& a, const std::optional<zpd::SeparabilityElement<F>>& e);

}  // namespace zpdcli
