#include "pcg_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pcg_cli/report.hpp"

namespace pcg::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupArgs {
  std::string family;
  std::string parameter;
  std::string orders_file;
  bool strict_lagrange = false;
};

void add_group_args(CLI::App& cmd, GroupArgs& g) {
  cmd.add_option("family", g.family, "cyclic | dihedral | dicyclic | semidihedral | explicit");
  cmd.add_option("n", g.parameter, "family parameter");
  cmd.add_option("--orders-file", g.orders_file, "explicit group: one element order per line");
  cmd.add_flag("--strict-lagrange", g.strict_lagrange,
               "reject explicit orders that do not divide |G|");
}

u64 parse_u64(const std::string& text, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isdigit(c);
      })) {
    throw UsageError(std::string(what) + ": '" + text + "' is not a nonnegative integer");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw UsageError(std::string(what) + ": '" + text + "' is too large");
  }
}

GroupSpec resolve_group(const GroupArgs& g) {
  const bool is_explicit = g.family == "explicit" || (g.family.empty() && !g.orders_file.empty());
  if (is_explicit) {
    if (g.orders_file.empty()) throw UsageError("explicit groups need --orders-file");
    if (!g.parameter.empty()) throw UsageError("explicit groups take no parameter");
    auto orders = load_orders_file(g.orders_file);  // ios_base::failure -> IO exit
    return GroupSpec::explicit_orders(std::move(orders), g.strict_lagrange
                                                             ? LagrangeCheck::Strict
                                                             : LagrangeCheck::Warn);
  }
  if (!g.orders_file.empty()) throw UsageError("--orders-file cannot be combined with a family");
  if (g.family.empty() || g.parameter.empty()) {
    throw UsageError("expected a group: <family> <n> or --orders-file PATH");
  }
  return GroupSpec::make(parse_family(g.family), parse_u64(g.parameter, "n"));
}

std::size_t default_oracle_bound() {
  if (const char* env = std::getenv("PCG_MAX_ORDER"); env != nullptr && *env != '\0') {
    return parse_u64(env, "PCG_MAX_ORDER");
  }
  return kDefaultOracleBound;
}

std::chrono::milliseconds to_timeout(double seconds) {
  if (!(seconds > 0)) throw UsageError("--timeout must be positive");
  return std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0));
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  GroupArgs group;
  std::string method = "auto";
  std::string format = "text";
  double timeout = 30.0;
  std::optional<std::size_t> max_order;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  AnalyzeOptions options;
  static const std::map<std::string, Method> methods = {
      {"auto", Method::Auto}, {"formula", Method::Formula},
      {"quotient", Method::Quotient}, {"oracle", Method::Oracle}};
  options.method = methods.at(a.method);
  options.max_order = a.max_order.value_or(default_oracle_bound());
  options.timeout = to_timeout(a.timeout);

  const auto spec = resolve_group(a.group);
  Report report;
  try {
    report = analyze(spec, options);
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  if (a.format == "json") {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << to_text(report);
  }
  return report.alpha.complete ? kOk : kTimeout;
}

// ---------------------------------------------------------------- export

struct ExportArgs {
  GroupArgs group;
  std::string format = "edges";
  std::string out_path;
  std::optional<std::size_t> max_order;
};

int cmd_export(const ExportArgs& a, std::ostream& out) {
  const auto spec = resolve_group(a.group);
  const u64 bound = a.max_order.value_or(kDefaultEnumerationBound);
  if (spec.order() > bound) {
    throw UsageError("export bound exceeded: |G| = " + std::to_string(spec.order()) + " > " +
                     std::to_string(bound));
  }
  const auto theta = build_theta(spec, bound);
  const std::string text = a.format == "dot" ? export_dot(theta) : export_edges(theta);
  if (a.out_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) {
    throw std::ios_base::failure("cannot write '" + a.out_path + "'");
  }
  return kOk;
}

// ---------------------------------------------------------------- bound

int cmd_bound(const GroupArgs& g, const std::string& format, std::ostream& out) {
  const auto spec = resolve_group(g);
  const auto profile = order_profile(spec);
  const bool cyclic = spec.family() == Family::Cyclic && is_composite(spec.order());

  nlohmann::ordered_json j;
  j["schema"] = "pcg/1";
  j["group"] = spec.name();
  j["order"] = spec.order();
  auto per_d = nlohmann::ordered_json::array();
  for (u64 d : semiprime_divisors(spec.order())) {
    nlohmann::ordered_json row = {{"d", d}, {"i_d_size", i_d_size(profile, d)}};
    if (cyclic) row["closed_form"] = i_d_size_cyclic(spec.order(), d);
    per_d.push_back(row);
  }
  j["semiprime_divisors"] = per_d;
  j["sp_lower_bound"] = sp_lower_bound(profile);
  j["cyclic_lower_bound"] =
      cyclic ? nlohmann::ordered_json(*cyclic_lower_bound(spec.order()).value) : nullptr;
  const auto f = factorize(spec.order());
  j["squarefree_lower_bound"] = cyclic && f.is_squarefree() && f.omega() >= 2
                                    ? nlohmann::ordered_json(squarefree_lower_bound(spec.order()))
                                    : nullptr;

  if (format == "json") {
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "group                  " << spec.name() << '\n';
  for (const auto& row : j["semiprime_divisors"]) {
    out << "|I_" << row["d"].get<u64>() << "|";
    out << std::string(std::max<int>(1, 20 - static_cast<int>(std::to_string(row["d"].get<u64>()).size())), ' ')
        << row["i_d_size"].get<u64>();
    if (row.contains("closed_form")) out << " (closed form " << row["closed_form"].get<u64>() << ')';
    out << '\n';
  }
  out << "sp lower bound         " << j["sp_lower_bound"].get<u64>() << '\n';
  if (!j["cyclic_lower_bound"].is_null()) {
    out << "cyclic lower bound     " << j["cyclic_lower_bound"].get<u64>() << '\n';
  }
  if (!j["squarefree_lower_bound"].is_null()) {
    out << "squarefree bound       " << j["squarefree_lower_bound"].get<u64>() << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string family;
  std::string range;
  std::string checks = "formula,bound";
  double timeout = 30.0;
  std::optional<std::size_t> max_order;
  unsigned jobs = 1;
};

const std::vector<std::string> kAllChecks = {"formula", "bound", "split", "idmax", "joins"};

std::vector<CheckLine> verify_instance(const GroupSpec& spec, const std::vector<std::string>& checks,
                                       std::size_t max_order, std::chrono::milliseconds timeout) {
  std::vector<CheckLine> lines;
  const auto profile = order_profile(spec);
  const u64 alpha = mis_quotient(build_quotient(profile)).alpha;
  const bool graph_ok = spec.order() <= max_order;
  std::optional<ThetaGraph> theta;
  auto get_theta = [&]() -> const ThetaGraph& {
    if (!theta) theta = build_theta(spec, max_order);
    return *theta;
  };
  auto add = [&](const std::string& check, Outcome o, std::string detail) {
    lines.push_back({check, o, std::move(detail)});
  };
  auto verdict = [](bool ok) { return ok ? Outcome::Pass : Outcome::Fail; };
  const std::string too_big = "|G| = " + std::to_string(spec.order()) + " above --max-order";

  for (const auto& check : checks) {
    if (check == "formula") {
      const auto f = alpha_exact_formula(spec);
      if (f.kind != FormulaKind::Exact) {
        add(check, Outcome::Skip, "no closed form");
      } else {
        add(check, verdict(*f.value == alpha),
            "formula " + std::to_string(*f.value) + " vs solver " + std::to_string(alpha));
      }
    } else if (check == "bound") {
      const u64 sp = sp_lower_bound(profile);
      bool ok = sp <= alpha;
      std::string detail = "bound " + std::to_string(sp) + " <= alpha " + std::to_string(alpha);
      if (spec.family() == Family::Cyclic && is_composite(spec.order())) {
        const u64 closed = *cyclic_lower_bound(spec.order()).value;
        ok = ok && closed == sp;
        detail += ", closed form " + std::to_string(closed);
      }
      add(check, verdict(ok), detail);
    } else if (check == "split") {
      if (!graph_ok) {
        add(check, Outcome::Skip, too_big);
        continue;
      }
      const auto c = classify_split(profile);
      const auto obstruction = find_split_obstruction(get_theta().graph());
      bool ok = c.is_split() == !obstruction.has_value();
      std::string detail = std::string(to_string(c.kind));
      if (obstruction) detail += ", induced " + std::string(to_string(obstruction->first));
      if (ok && c.is_split()) {
        const u64 predicted = *alpha_if_split(profile).value;
        try {
          const u64 exact = mis_oracle(get_theta().graph(), {max_order, timeout}).alpha;
          ok = predicted == exact;
          detail += ", |G|-|P(G)| formula " + std::to_string(predicted) + " vs oracle " +
                    std::to_string(exact);
        } catch (const SolverTimeout&) {
          add(check, Outcome::Timeout, detail + ", oracle timed out");
          continue;
        }
      }
      add(check, verdict(ok), detail);
    } else if (check == "idmax") {
      if (!graph_ok) {
        add(check, Outcome::Skip, too_big);
        continue;
      }
      std::size_t checked = 0;
      try {
        for (u64 d : semiprime_divisors(spec.order())) {
          if (!i_d_set(get_theta(), d).empty()) ++checked;
        }
        add(check, Outcome::Pass, std::to_string(checked) + " nonempty I_d maximal");
      } catch (const std::logic_error& e) {
        add(check, Outcome::Fail, e.what());
      }
    } else if (check == "joins") {
      if (!graph_ok) {
        add(check, Outcome::Skip, too_big);
        continue;
      }
      const u64 n = spec.parameter();
      if (spec.family() == Family::Dihedral) {
        const auto expected = join(build_theta(GroupSpec::cyclic(n)).graph(), Graph::complete(n));
        add(check, verdict(is_isomorphic(get_theta().graph(), expected, max_order)),
            "theta(D_2n) ~ theta(Z_n) v K_n");
      } else if (spec.family() == Family::Dicyclic && n % 2 == 1) {
        const auto expected =
            join(build_theta(GroupSpec::cyclic(2 * n)).graph(), Graph::empty(2 * n));
        add(check, verdict(is_isomorphic(get_theta().graph(), expected, max_order)),
            "theta(Q_4n) ~ theta(Z_2n) v E_2n");
      } else if (spec.family() == Family::Cyclic) {
        if (const auto d = cyclic_decomposition(n)) {
          add(check, verdict(is_isomorphic(get_theta().graph(), h_join(d->shape, d->parts),
                                           max_order)),
              "theta(Z_n) ~ H-join (" + d->description + ")");
        } else {
          add(check, Outcome::Skip, "no decomposition for this shape");
        }
      } else {
        add(check, Outcome::Skip, "no decomposition for this family");
      }
    }
  }
  return lines;
}

std::pair<u64, u64> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like A..B");
  const u64 lo = parse_u64(text.substr(0, dots), "range start");
  const u64 hi = parse_u64(text.substr(dots + 2), "range end");
  if (lo > hi) throw UsageError("range start exceeds range end");
  return {lo, hi};
}

inline constexpr u64 kMaxVerifyInstances = 100'000;

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Family family = parse_family(a.family);
  const auto [lo, hi] = parse_range(a.range);
  if (hi - lo + 1 > kMaxVerifyInstances) {
    throw UsageError("range covers more than " + std::to_string(kMaxVerifyInstances) + " instances");
  }
  std::vector<std::string> checks;
  {
    std::stringstream ss(a.checks);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (std::find(kAllChecks.begin(), kAllChecks.end(), item) == kAllChecks.end()) {
        throw UsageError("unknown check '" + item + "'");
      }
      checks.push_back(item);
    }
  }
  if (checks.empty()) throw UsageError("--checks is empty");
  const std::size_t max_order = a.max_order.value_or(default_oracle_bound());
  const auto timeout = to_timeout(a.timeout);

  std::vector<GroupSpec> specs;
  for (u64 n = lo; n <= hi; ++n) specs.push_back(GroupSpec::make(family, n));

  std::vector<std::vector<CheckLine>> results(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      results[i] = verify_instance(specs[i], checks, max_order, timeout);
    }
  };
  const unsigned jobs = std::max(1u, a.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  std::map<std::string, std::array<std::size_t, 4>> tally;
  for (const auto& c : checks) tally[c] = {};
  static constexpr const char* kNames[] = {"pass", "FAIL", "skip", "TIMEOUT"};
  for (std::size_t i = 0; i < specs.size(); ++i) {
    for (const auto& line : results[i]) {
      out << specs[i].name() << ' ' << line.check << ' '
          << kNames[static_cast<int>(line.outcome)] << "  " << line.detail << '\n';
      ++tally[line.check][static_cast<int>(line.outcome)];
    }
  }
  out << "\ncheck      pass   fail   skip   timeout\n";
  std::vector<CheckLine> all;
  for (auto& r : results) all.insert(all.end(), r.begin(), r.end());
  for (const auto& c : checks) {
    const auto& t = tally[c];
    char row[96];
    std::snprintf(row, sizeof row, "%-8s %6zu %6zu %6zu %9zu\n", c.c_str(), t[0], t[1], t[2], t[3]);
    out << row;
  }
  return verify_exit_code(all);
}

}  // namespace

int verify_exit_code(const std::vector<CheckLine>& lines) {
  auto has = [&](Outcome o) {
    return std::any_of(lines.begin(), lines.end(), [o](const CheckLine& l) { return l.outcome == o; });
  };
  if (has(Outcome::Fail)) return kMismatch;
  if (has(Outcome::Timeout)) return kTimeout;
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime-coprime graphs of finite groups", "pcg"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "report alpha, split structure and bounds");
  add_group_args(*analyze_cmd, analyze_args.group);
  analyze_cmd->add_option("--method", analyze_args.method)
      ->check(CLI::IsMember({"auto", "formula", "quotient", "oracle"}));
  analyze_cmd->add_option("--format", analyze_args.format)->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--timeout", analyze_args.timeout, "oracle time limit in seconds");
  analyze_cmd->add_option("--max-order", analyze_args.max_order, "oracle bound on |G|");

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export", "write the prime-coprime graph");
  add_group_args(*export_cmd, export_args.group);
  export_cmd->add_option("--format", export_args.format)->check(CLI::IsMember({"dot", "edges"}));
  export_cmd->add_option("--out", export_args.out_path, "output file (default stdout)");
  export_cmd->add_option("--max-order", export_args.max_order, "export bound on |G|");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check formulas and constructions");
  verify_cmd->add_option("family", verify_args.family)->required();
  verify_cmd->add_option("range", verify_args.range, "A..B")->required();
  verify_cmd->add_option("--checks", verify_args.checks, "formula,bound,split,idmax,joins");
  verify_cmd->add_option("--timeout", verify_args.timeout, "oracle time limit in seconds");
  verify_cmd->add_option("--max-order", verify_args.max_order, "bound on |G| for graph checks");
  verify_cmd->add_option("--jobs", verify_args.jobs, "worker threads");

  GroupArgs bound_args;
  std::string bound_format = "text";
  auto* bound_cmd = app.add_subcommand("bound", "semiprime-divisor lower bounds");
  add_group_args(*bound_cmd, bound_args);
  bound_cmd->add_option("--format", bound_format)->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_args, out);
    if (*export_cmd) return cmd_export(export_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
    if (*bound_cmd) return cmd_bound(bound_args, bound_format, out);
  } catch (const std::ios_base::failure& e) {
    err << "pcg: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << "pcg: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "pcg: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "pcg: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pcg::cli
