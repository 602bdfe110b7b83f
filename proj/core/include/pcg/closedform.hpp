#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/groups.hpp"

namespace pcg {

enum class SplitKind {
  CompleteNoComposite,  ///< no element of composite order: Θ(G) is complete
  PrimePowerTail,       ///< every composite order is p^k, k >= 2, for one prime p
  SemiprimeTail,        ///< every composite order equals pq for fixed p != q
  NotSplit,
};

std::string_view to_string(SplitKind kind);

struct SplitClassification {
  SplitKind kind = SplitKind::CompleteNoComposite;
  u64 p = 0;  ///< PrimePowerTail: the prime; SemiprimeTail: the smaller prime
  u64 q = 0;  ///< SemiprimeTail: the larger prime
  /// NotSplit only: the lexicographically least pair of composite orders that
  /// already violates both tail shapes. A repeated order means that single
  /// order has neither shape.
  std::optional<std::pair<u64, u64>> witness;

  bool is_split() const { return kind != SplitKind::NotSplit; }
};

/// Split test by element orders alone. For groups (where the orders present
/// are closed under taking divisors) this agrees with the forbidden-subgraph
/// test on Θ(G).
SplitClassification classify_split(const OrderProfile& profile);

enum class FormulaKind { Exact, LowerBound, Unsupported };

std::string_view to_string(FormulaKind kind);

struct FormulaResult {
  std::optional<u64> value;
  FormulaKind kind = FormulaKind::Unsupported;
  std::string provenance;

  static FormulaResult exact(u64 v, std::string why) {
    return {v, FormulaKind::Exact, std::move(why)};
  }
  static FormulaResult lower_bound(u64 v, std::string why) {
    return {v, FormulaKind::LowerBound, std::move(why)};
  }
  static FormulaResult unsupported(std::string why) {
    return {std::nullopt, FormulaKind::Unsupported, std::move(why)};
  }
};

/// α of a split Θ(G): 1 when complete, |G| - |P(G)| otherwise. Throws
/// std::invalid_argument when the profile is not split.
FormulaResult alpha_if_split(const OrderProfile& profile);

/// |I_d(Z_n)| in closed form:
///   d = p_i^2       ->  (p_i^k_i - p_i)      * prod_{r != i}    p_r^k_r
///   d = p_i p_j     ->  (p_i^k_i - 1)(p_j^k_j - 1) * prod_{r != i,j} p_r^k_r
/// Throws std::invalid_argument unless d is a semiprime divisor of n.
u64 i_d_size_cyclic(u64 n, u64 d);

/// The largest closed-form |I_d(Z_n)|, a lower bound on α(Θ(Z_n)). Throws
/// std::invalid_argument for n = 1 or n prime.
FormulaResult cyclic_lower_bound(u64 n);

/// (p_{t-1} - 1)(p_t - 1) * p_1 ... p_{t-2} for squarefree n with t >= 2 prime
/// factors. Throws std::invalid_argument otherwise.
u64 squarefree_lower_bound(u64 n);

/// Exact α(Θ(G)) where a closed form is known:
///   Z_n,  n = p^m (m >= 2)         n - p
///   Z_n,  n = pq                   (p-1)(q-1)
///   Z_n,  n = p1 p2 p3             p1 (p2-1)(p3-1)
///   Z_n,  n = p q^b (b >= 2)       n - min{pq, q^b + p - 1}
///   Z_n,  n = p^a q^b (a, b >= 2)  n - min{p^a q, p q^b, p^a + q^b - 1}
///   D_2n                           α(Θ(Z_n))
///   Q_4n, n odd                    2n
///   Q_4n, n = 2^k m, k >= 1        4n - 2m
///   SD_8n, n = 2^k m               6n - 2m
/// Z_1 and Z_p give 1 (complete graph). Anything else is Unsupported.
FormulaResult alpha_exact_formula(const GroupSpec& spec);

/// An H-join description of Θ(Z_n): shape H plus one part per vertex of H.
struct JoinDecomposition {
  Graph shape;
  std::vector<Graph> parts;
  std::string description;
};

/// The order-class decomposition of Θ(Z_n) for n = pq^b (b >= 2), p1 p2 p3 and
/// p^a q^b (a, b >= 2). The first part is always the clique on P(Z_n).
std::optional<JoinDecomposition> cyclic_decomposition(u64 n);

}  // namespace pcg
