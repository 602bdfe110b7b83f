#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/groups.hpp"

namespace pcg {

enum class MisMethod { Oracle, Quotient };

std::string_view to_string(MisMethod method);

/// Maximum independent set. Oracle results list vertex indices; quotient
/// results list the orders of the classes taken in full.
struct MisResult {
  u64 alpha = 0;
  MisMethod method = MisMethod::Oracle;
  std::vector<std::size_t> vertices;
  std::vector<u64> classes;
};

inline constexpr std::size_t kDefaultOracleBound = 500;

struct OracleOptions {
  std::size_t max_vertices = kDefaultOracleBound;
  std::chrono::milliseconds timeout{30'000};
};

/// Raised when the oracle runs out of time. The best set found so far is a
/// lower bound only.
class SolverTimeout : public std::runtime_error {
 public:
  SolverTimeout(u64 best_lower_bound, std::vector<std::size_t> best_witness);

  u64 best_lower_bound() const { return best_lower_bound_; }
  const std::vector<std::size_t>& best_witness() const { return best_witness_; }

 private:
  u64 best_lower_bound_;
  std::vector<std::size_t> best_witness_;
};

/// Exact maximum independent set of any graph, computed as a maximum clique of
/// the complement by bitset branch and bound with greedy-colouring bounds.
/// Throws std::invalid_argument on an empty graph, std::length_error above
/// options.max_vertices and SolverTimeout when the deadline passes.
MisResult mis_oracle(const Graph& g, const OracleOptions& options = {});

/// Exact maximum-weight set of pairwise non-conflicting classes. alpha is 1
/// when the quotient is empty (Θ(G) is complete). Among optimal selections the
/// lexicographically least list of class orders is returned.
MisResult mis_quotient(const QuotientGraph& q);

/// Vertices whose order is divisible by the semiprime d. Verifies that the set
/// is independent and, when nonempty, maximal; a violation throws
/// std::logic_error. Throws std::invalid_argument unless d divides |G| and is
/// semiprime.
std::vector<std::size_t> i_d_set(const ThetaGraph& theta, u64 d);

/// max |I_d(G)| over the semiprime divisors d of |G|; 0 when there are none.
u64 sp_lower_bound(const OrderProfile& profile);

bool is_independent(const Graph& g, std::span<const std::size_t> vertices);
/// Independent and no outside vertex can be added.
bool is_maximal_independent(const Graph& g, std::span<const std::size_t> vertices);

/// Checks whether the elements of the given orders form an independent set of
/// Θ(G): every order composite and every pair of orders with composite gcd.
/// Returns the first offending pair (equal entries flag a non-composite order).
std::optional<std::pair<u64, u64>> order_set_conflict(std::span<const u64> orders);
inline bool order_set_independent(std::span<const u64> orders) {
  return !order_set_conflict(orders).has_value();
}

/// Number of elements of the profile whose order lies in the set.
u64 order_set_weight(const OrderProfile& profile, std::span<const u64> orders);

}  // namespace pcg
