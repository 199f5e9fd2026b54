#include "zpdcli/app.hpp"

#include <chrono>
#include <fstream>
#include <functional>

#include <CLI11.hpp>

#include "zpd/errors.hpp"
#include "zpd/tensorops.hpp"
#include "zpdcli/encode.hpp"

namespace zpdcli {

namespace {

struct Options {
  std::string file;
  std::string property = "all";
  std::string strategy;
  std::uint64_t cap = zpd::SpanStrategy{}.enumeration_cap;
  std::uint64_t seed = 0;
  std::size_t workers = 0;
  bool dual = false;
  bool timing = false;
  std::string out_path;
};

std::filesystem::path resolve(const std::string& name) {
  std::filesystem::path p(name);
  if (std::filesystem::exists(p)) return p;
  auto with_ext = p;
  with_ext += ".json";
  if (std::filesystem::exists(with_ext)) return with_ext;
  return p;
}

template <class F>
zpd::SpanStrategy make_strategy(const zpd::StructureAlgebra<F>& a, const Options& o) {
  std::string mode = o.strategy;
  if (mode.empty()) mode = a.field().characteristic() == 0 ? "mc" : "exhaustive";
  auto s = mode == "mc" ? zpd::SpanStrategy::monte_carlo(o.seed) : zpd::SpanStrategy::exhaustive();
  s.enumeration_cap = o.cap;
  s.workers = o.workers;
  return s;
}

template <class F>
Json algebra_summary(const zpd::StructureAlgebra<F>& a) {
  return Json{{"label", a.label()}, {"dim", a.dim()}, {"field", a.field().descriptor().name()}};
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

template <class F>
int cmd_check(const zpd::StructureAlgebra<F>& a, const Options& o, std::ostream& out) {
  auto s = make_strategy(a, o);
  auto one = [&](zpd::Property p) { return zpd::decide(a, p, zpd::property_span(a, p, s)); };
  if (o.property != "all") {
    auto p = o.property == "zpd" ? zpd::Property::zpd : o.property == "zlpd" ? zpd::Property::zlpd : zpd::Property::two_zpd;
    auto c = one(p);
    auto j = certificate_to_json(c);
    j["strategy"] = strategy_to_json(s);
    print(out, j);
    return exit_code(c.verdict);
  }
  Json j;
  j["strategy"] = strategy_to_json(s);
  bool any_fails = false, any_inconclusive = false;
  for (auto p : {zpd::Property::zpd, zpd::Property::zlpd, zpd::Property::two_zpd}) {
    auto c = one(p);
    any_fails |= c.verdict == zpd::Verdict::fails;
    any_inconclusive |= c.verdict == zpd::Verdict::inconclusive;
    j[zpd::to_string(p)] = certificate_to_json(c);
  }
  print(out, j);
  return any_fails ? 1 : any_inconclusive ? 3 : 0;
}

template <class F>
Json span_dims(const zpd::StructureAlgebra<F>& a, const zpd::SpanStrategy& s) {
  Json j;
  auto entry = [&](const zpd::SpanResult<F>& r) {
    return Json{{"dim", r.span.dim()}, {"exact", r.exact}, {"points_processed", r.points_processed}};
  };
  j["zero_pair"] = entry(zpd::zero_pair_span(a, s));
  j["one_sided"] = entry(zpd::one_sided_zero_span(a, s));
  j["commuting"] = entry(zpd::commuting_span(a, s));
  try {
    j["square_zero"] = entry(zpd::square_zero_span(a, s));
  } catch (const zpd::StrategyError& e) {
    j["square_zero"] = Json{{"unavailable", e.what()}};
  }
  j["ker_mu1"] = zpd::kernel(zpd::mu1(a)).dim();
  j["ker_mu"] = zpd::kernel(zpd::mu(a)).dim();
  j["ker_kappa"] = zpd::kernel(zpd::kappa(a)).dim();
  j["commutator"] = zpd::commutator_subspace(a).dim();
  return j;
}

template <class F>
int cmd_spans(const zpd::StructureAlgebra<F>& a, const Options& o, std::ostream& out) {
  auto s = make_strategy(a, o);
  auto j = span_dims(a, s);
  j["strategy"] = strategy_to_json(s);
  print(out, j);
  return 0;
}

template <class F>
Json derivation_dims(const zpd::StructureAlgebra<F>& a, bool dual) {
  Json j;
  if (dual) {
    auto der = zpd::dual_derivation_space(a).dim();
    auto inner = zpd::dual_inner_space(a).dim();
    j["dual_der"] = der;
    j["dual_inner"] = inner;
    j["dual_h1"] = der - inner;
    j["all_dual_inner"] = der == inner;
  } else {
    auto der = zpd::derivation_space(a).dim();
    auto inner = zpd::inner_derivation_space(a).dim();
    j["der"] = der;
    j["inner"] = inner;
    j["h1"] = der - inner;
    j["all_inner"] = der == inner;
  }
  return j;
}

template <class F>
int cmd_derivations(const zpd::StructureAlgebra<F>& a, const Options& o, std::ostream& out) {
  print(out, derivation_dims(a, o.dual));
  return 0;
}

template <class F>
int cmd_separability(const zpd::StructureAlgebra<F>& a, std::ostream& out) {
  auto e = zpd::separability_idempotent(a);
  print(out, separability_to_json(a, e));
  return e ? 0 : 1;
}

template <class F>
int cmd_witness(const zpd::StructureAlgebra<F>& a, const Options& o, std::ostream& out) {
  auto s = make_strategy(a, o);
  auto c = zpd::is_2zpd(a, s);
  Json j;
  j["verdict"] = zpd::to_string(c.verdict);
  j["route"] = nullptr;
  j["witness"] = nullptr;
  if (c.witness) {
    j["route"] = "tensor";
    j["witness"] = certificate_to_json(c)["witness"];
  } else if (c.verdict != zpd::Verdict::holds && s.is_exhaustive()) {
    if (auto esc = zpd::find_corollary_me_escape(a, s)) {
      j["route"] = "derivation";
      j["witness"] = escape_to_json(*esc);
    }
  }
  print(out, j);
  return exit_code(c.verdict);
}

template <class F>
int cmd_report(const zpd::StructureAlgebra<F>& a, const Options& o, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  auto s = make_strategy(a, o);
  Json timing;
  auto timed = [&](const char* key, auto&& fn) {
    auto t0 = clock::now();
    auto r = fn();
    timing[key] = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return r;
  };
  Json j;
  j["algebra"] = algebra_summary(a);
  j["strategy"] = strategy_to_json(s);
  Json props;
  for (auto p : {zpd::Property::zpd, zpd::Property::zlpd, zpd::Property::two_zpd}) {
    auto c = timed(zpd::to_string(p).c_str(), [&] { return zpd::decide(a, p, zpd::property_span(a, p, s)); });
    props[zpd::to_string(p)] = certificate_to_json(c);
  }
  j["properties"] = std::move(props);
  j["spans"] = timed("spans", [&] { return span_dims(a, s); });
  j["derivations"] = timed("derivations", [&] {
    auto d = derivation_dims(a, false);
    d.update(derivation_dims(a, true));
    return d;
  });
  j["separability"] = timed("separability", [&] { return separability_to_json(a, zpd::separability_idempotent(a)); });
  if (o.timing) j["timing_ms"] = std::move(timing);
  if (o.out_path.empty() || o.out_path == "-") {
    print(out, j);
  } else {
    std::ofstream file(o.out_path);
    if (!file) throw LoadError(o.out_path, "cannot open output file");
    print(file, j);
  }
  return exit_code(zpd::Verdict::holds);
}

int dispatch(const std::string& command, const Options& o, std::ostream& out, std::ostream& err) {
  auto alg = command == "validate" ? parse_algebra(read_json_file(resolve(o.file)))
                                   : load_algebra_file(resolve(o.file));
  return std::visit(
      [&](const auto& a) -> int {
        if (command == "validate") {
          auto r = zpd::validate(a);
          if (!r.ok()) {
            err << "invalid: " << r.message << '\n';
            return 2;
          }
          out << "valid: " << a.label() << " dim " << a.dim() << " over " << a.field().descriptor().name() << '\n';
          return 0;
        }
        if (command == "check") return cmd_check(a, o, out);
        if (command == "spans") return cmd_spans(a, o, out);
        if (command == "derivations") return cmd_derivations(a, o, out);
        if (command == "separability") return cmd_separability(a, out);
        if (command == "witness") return cmd_witness(a, o, out);
        if (command == "report") return cmd_report(a, o, out);
        print(out, algebra_to_json(a));
        return 0;
      },
      alg);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide zpd, zLpd and 2-zpd for finite-dimensional algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_strategy = [&](CLI::App* sub) {
    sub->add_option("--strategy", o.strategy, "Span strategy (default: exhaustive over GF(p), mc over QQ)")
        ->check(CLI::IsMember({"exhaustive", "mc"}));
    sub->add_option("--cap", o.cap, "Largest p^n an exhaustive run may walk");
    sub->add_option("--seed", o.seed, "Monte-Carlo seed");
    sub->add_option("--workers", o.workers, "Enumeration threads (default: $ZPD_WORKERS or hardware)");
  };
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "Algebra file")->required(); };

  auto* validate = app.add_subcommand("validate", "Check the algebra axioms");
  add_file(validate);
  auto* check = app.add_subcommand("check", "Decide a property and print its certificate");
  add_file(check);
  add_strategy(check);
  check->add_option("--property", o.property)->check(CLI::IsMember({"zpd", "zlpd", "2zpd", "all"}));
  auto* spans = app.add_subcommand("spans", "Print span and kernel dimensions");
  add_file(spans);
  add_strategy(spans);
  auto* derivations = app.add_subcommand("derivations", "Print derivation and H1 dimensions");
  add_file(derivations);
  derivations->add_flag("--dual", o.dual, "Derivations into the dual bimodule");
  auto* separability = app.add_subcommand("separability", "Search for a separability idempotent");
  add_file(separability);
  auto* witness = app.add_subcommand("witness", "Print the evidence that the algebra is not 2-zpd");
  add_file(witness);
  add_strategy(witness);
  auto* report = app.add_subcommand("report", "Write the full JSON report");
  add_file(report);
  add_strategy(report);
  report->add_option("--out", o.out_path, "Output path ('-' for stdout)");
  report->add_flag("--timing", o.timing, "Include wall-clock timings (breaks byte reproducibility)");
  auto* export_cmd = app.add_subcommand("export", "Print the algebra as an explicit structure-constant table");
  add_file(export_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    auto code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, o, out, err);
  } catch (const ValidationError& e) {
    err << "invalid: " << e.what() << '\n';
    return 2;
  } catch (const LoadError& e) {
    err << "malformed input: " << e.what() << '\n';
    return 2;
  } catch (const zpd::StrategyError& e) {
    err << "strategy error: " << e.what();
    if (e.required_cap() != 0) err << " (required cap " << e.required_cap() << ")";
    err << '\n';
    return 3;
  } catch (const zpd::Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace zpdcli
