#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pcg/pcg.hpp"

namespace pcg::cli {

enum class Method { Auto, Formula, Quotient, Oracle };

struct AnalyzeOptions {
  Method method = Method::Auto;
  std::size_t max_order = kDefaultOracleBound;  // oracle vertex bound
  std::chrono::milliseconds timeout{30'000};
};

struct AlphaInfo {
  std::optional<u64> value;
  std::string method;
  bool complete = true;
  std::optional<u64> best_lower_bound;  // set when an oracle run timed out
  std::map<u64, u64> witness_orders;    // order -> number of witness elements
};

/// Everything `pcg analyze` reports about one group.
struct Report {
  GroupSpec spec = GroupSpec::cyclic(1);
  OrderProfile profile;
  u64 p_set_size = 0;
  std::vector<u64> semiprime_divisors;
  std::map<u64, u64> i_d_sizes;
  SplitClassification split;
  AlphaInfo alpha;
  FormulaResult formula;
  u64 sp_lower_bound = 0;
  std::optional<u64> cyclic_lower_bound;
  std::optional<u64> quotient_alpha;
  std::optional<bool> formula_vs_solver;
  std::optional<bool> bound_le_alpha;
  std::optional<bool> oracle_vs_quotient;
};

/// Throws std::length_error when the oracle is requested above its bound.
/// Oracle timeouts are reported through alpha.complete = false.
Report analyze(const GroupSpec& spec, const AnalyzeOptions& options);

nlohmann::ordered_json to_json(const Report& report);
std::string to_text(const Report& report);

}  // namespace pcg::cli
