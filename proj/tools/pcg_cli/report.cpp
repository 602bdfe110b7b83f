#include "pcg_cli/report.hpp"

#include <sstream>

namespace pcg::cli {

namespace {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Formula: return "formula";
    case Method::Quotient: return "quotient";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

template <typename T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json count_map(const std::map<u64, u64>& m) {
  auto obj = nlohmann::ordered_json::object();
  for (const auto& [k, v] : m) obj[std::to_string(k)] = v;
  return obj;
}

std::string count_list(const std::map<u64, u64>& m) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : m) {
    out << (first ? "" : " ") << k << ':' << v;
    first = false;
  }
  return first ? "-" : out.str();
}

std::string yes_no(const std::optional<bool>& b) {
  if (!b) return "n/a";
  return *b ? "yes" : "NO";
}

}  // namespace

Report analyze(const GroupSpec& spec, const AnalyzeOptions& options) {
  Report r;
  r.spec = spec;
  r.profile = order_profile(spec);
  r.p_set_size = p_set_size(r.profile);
  r.semiprime_divisors = semiprime_divisors(spec.order());
  for (u64 d : r.semiprime_divisors) r.i_d_sizes[d] = i_d_size(r.profile, d);
  r.split = classify_split(r.profile);
  r.formula = alpha_exact_formula(spec);
  r.sp_lower_bound = sp_lower_bound(r.profile);
  if (spec.family() == Family::Cyclic && is_composite(spec.order())) {
    r.cyclic_lower_bound = cyclic_lower_bound(spec.order()).value;
  }

  const auto quotient = mis_quotient(build_quotient(r.profile));
  r.quotient_alpha = quotient.alpha;
  std::map<u64, u64> quotient_witness;
  for (u64 d : quotient.classes) quotient_witness[d] = r.profile.count(d);

  Method method = options.method;
  if (method == Method::Auto) {
    method = r.formula.kind == FormulaKind::Exact ? Method::Formula : Method::Quotient;
  }
  r.alpha.method = method_name(method);
  switch (method) {
    case Method::Formula:
      if (r.formula.kind == FormulaKind::Exact) {
        r.alpha.value = r.formula.value;
        r.alpha.witness_orders = quotient_witness;
      }
      break;
    case Method::Quotient:
      r.alpha.value = quotient.alpha;
      r.alpha.witness_orders = quotient_witness;
      break;
    case Method::Oracle: {
      if (spec.order() > options.max_order) {
        throw std::length_error("oracle bound exceeded: |G| = " + std::to_string(spec.order()) +
                                " > " + std::to_string(options.max_order));
      }
      const auto theta = build_theta(spec, options.max_order);
      try {
        const auto result = mis_oracle(theta.graph(), {options.max_order, options.timeout});
        r.alpha.value = result.alpha;
        for (std::size_t v : result.vertices) ++r.alpha.witness_orders[theta.order(v)];
        r.oracle_vs_quotient = result.alpha == quotient.alpha;
      } catch (const SolverTimeout& t) {
        r.alpha.complete = false;
        r.alpha.best_lower_bound = t.best_lower_bound();
      }
      break;
    }
    case Method::Auto:
      break;
  }

  if (r.formula.kind == FormulaKind::Exact) {
    r.formula_vs_solver = *r.formula.value == quotient.alpha;
  }
  if (r.alpha.value) r.bound_le_alpha = r.sp_lower_bound <= *r.alpha.value;
  return r;
}

nlohmann::ordered_json to_json(const Report& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["schema"] = "pcg/1";
  j["group"] = {{"name", r.spec.name()},
                {"family", std::string(to_string(r.spec.family()))},
                {"parameter", r.spec.parameter()},
                {"order", r.spec.order()}};
  j["order_profile"] = count_map(r.profile.counts);
  j["p_set_size"] = r.p_set_size;
  j["semiprime_divisors"] = r.semiprime_divisors;
  j["i_d_sizes"] = count_map(r.i_d_sizes);

  json split;
  split["verdict"] = std::string(to_string(r.split.kind));
  split["p"] = r.split.p ? json(r.split.p) : json(nullptr);
  split["q"] = r.split.q ? json(r.split.q) : json(nullptr);
  split["witness"] = r.split.witness ? json::array({r.split.witness->first, r.split.witness->second})
                                     : json(nullptr);
  j["split"] = split;

  json alpha;
  alpha["value"] = optional_json(r.alpha.value);
  alpha["method"] = r.alpha.method;
  alpha["complete"] = r.alpha.complete;
  alpha["best_lower_bound"] = optional_json(r.alpha.best_lower_bound);
  alpha["witness_orders"] = count_map(r.alpha.witness_orders);
  j["alpha"] = alpha;

  j["formula"] = {{"kind", std::string(to_string(r.formula.kind))},
                  {"value", optional_json(r.formula.value)},
                  {"provenance", r.formula.provenance}};
  j["bounds"] = {{"sp_lower_bound", r.sp_lower_bound},
                 {"cyclic_lower_bound", optional_json(r.cyclic_lower_bound)}};
  j["quotient_alpha"] = optional_json(r.quotient_alpha);
  j["agreement"] = {{"formula_vs_solver", optional_json(r.formula_vs_solver)},
                    {"bound_le_alpha", optional_json(r.bound_le_alpha)},
                    {"oracle_vs_quotient", optional_json(r.oracle_vs_quotient)}};
  j["warnings"] = r.spec.warnings();
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "group        " << r.spec.name() << " (" << to_string(r.spec.family())
      << ", n = " << r.spec.parameter() << ", |G| = " << r.spec.order() << ")\n";
  out << "orders       " << count_list(r.profile.counts) << '\n';
  out << "|P(G)|       " << r.p_set_size << '\n';
  out << "SP(|G|)     ";
  if (r.semiprime_divisors.empty()) out << " -";
  for (u64 d : r.semiprime_divisors) out << ' ' << d;
  out << '\n';
  out << "|I_d|        " << count_list(r.i_d_sizes) << '\n';
  out << "split        " << to_string(r.split.kind);
  if (r.split.kind == SplitKind::PrimePowerTail) out << " (p = " << r.split.p << ')';
  if (r.split.kind == SplitKind::SemiprimeTail) out << " (p = " << r.split.p << ", q = " << r.split.q << ')';
  if (r.split.witness) {
    out << " (witness orders " << r.split.witness->first << ", " << r.split.witness->second << ')';
  }
  out << '\n';
  out << "alpha        ";
  if (r.alpha.value) {
    out << *r.alpha.value << " [" << r.alpha.method << ']';
    if (!r.alpha.witness_orders.empty()) out << " witness orders " << count_list(r.alpha.witness_orders);
  } else if (!r.alpha.complete) {
    out << "INCOMPLETE [" << r.alpha.method << "] best lower bound " << *r.alpha.best_lower_bound;
  } else {
    out << "unavailable [" << r.alpha.method << ']';
  }
  out << '\n';
  out << "formula      " << to_string(r.formula.kind);
  if (r.formula.value) out << ' ' << *r.formula.value;
  out << " (" << r.formula.provenance << ")\n";
  out << "bounds       sp " << r.sp_lower_bound;
  if (r.cyclic_lower_bound) out << ", cyclic " << *r.cyclic_lower_bound;
  out << '\n';
  if (r.quotient_alpha) out << "quotient     " << *r.quotient_alpha << '\n';
  out << "agreement    formula=solver " << yes_no(r.formula_vs_solver) << ", bound<=alpha "
      << yes_no(r.bound_le_alpha) << ", oracle=quotient " << yes_no(r.oracle_vs_quotient) << '\n';
  for (const auto& w : r.spec.warnings()) out << "warning      " << w << '\n';
  return out.str();
}

}  // namespace pcg::cli
