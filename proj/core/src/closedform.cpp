#include "pcg/closedform.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcg {

namespace {

// Composite orders that are all p^k for one prime p, or all equal to one pq.
SplitClassification tail_shape(std::span<const u64> composites) {
  SplitClassification c;
  if (composites.empty()) return c;
  const auto first = factorize(composites.front());
  if (first.omega() == 1) {
    const u64 p = first.powers().front().prime;
    const bool same_prime = std::all_of(composites.begin(), composites.end(), [&](u64 d) {
      const auto f = factorize(d);
      return f.omega() == 1 && f.powers().front().prime == p;
    });
    if (same_prime) {
      c.kind = SplitKind::PrimePowerTail;
      c.p = p;
      return c;
    }
  } else if (first.omega() == 2 && first.is_squarefree()) {
    const bool same = std::all_of(composites.begin(), composites.end(),
                                  [&](u64 d) { return d == composites.front(); });
    if (same) {
      c.kind = SplitKind::SemiprimeTail;
      c.p = first.powers()[0].prime;
      c.q = first.powers()[1].prime;
      return c;
    }
  }
  c.kind = SplitKind::NotSplit;
  return c;
}

Graph shape_from(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
  return Graph::from_edges(n, std::vector<std::pair<std::size_t, std::size_t>>(edges));
}

}  // namespace

std::string_view to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::CompleteNoComposite: return "complete";
    case SplitKind::PrimePowerTail: return "prime-power-tail";
    case SplitKind::SemiprimeTail: return "semiprime-tail";
    case SplitKind::NotSplit: return "not-split";
  }
  return "?";
}

std::string_view to_string(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::Exact: return "exact";
    case FormulaKind::LowerBound: return "lower-bound";
    case FormulaKind::Unsupported: return "unsupported";
  }
  return "?";
}

SplitClassification classify_split(const OrderProfile& profile) {
  const auto composites = profile.composite_orders();
  auto verdict = tail_shape(composites);
  if (verdict.is_split()) return verdict;

  for (std::size_t i = 0; i < composites.size(); ++i) {
    for (std::size_t j = i; j < composites.size(); ++j) {
      const u64 pair[] = {composites[i], composites[j]};
      if (!tail_shape(std::span<const u64>(pair, i == j ? 1 : 2)).is_split()) {
        verdict.witness = std::make_pair(composites[i], composites[j]);
        return verdict;
      }
    }
  }
  throw std::logic_error("classify_split: no witness for a non-split profile");
}

FormulaResult alpha_if_split(const OrderProfile& profile) {
  const auto verdict = classify_split(profile);
  if (!verdict.is_split()) {
    throw std::invalid_argument("alpha_if_split: profile is not split");
  }
  if (verdict.kind == SplitKind::CompleteNoComposite) {
    return FormulaResult::exact(1, "split: complete graph");
  }
  return FormulaResult::exact(profile.group_order - p_set_size(profile), "split: |G| - |P(G)|");
}

u64 i_d_size_cyclic(u64 n, u64 d) {
  if (!is_semiprime(d) || n % d != 0) {
    throw std::invalid_argument("i_d_size_cyclic: " + std::to_string(d) +
                                " is not a semiprime divisor of " + std::to_string(n));
  }
  const auto dp = factorize(d).powers();
  const u64 pi = dp.front().prime;
  const u64 pj = dp.back().prime;
  u64 value = 1;
  for (const auto& [p, k] : factorize(n).powers()) {
    const u64 pk = ipow(p, k);
    if (dp.size() == 1 && p == pi) {
      value *= pk - p;
    } else if (dp.size() == 2 && (p == pi || p == pj)) {
      value *= pk - 1;
    } else {
      value *= pk;
    }
  }
  return value;
}

FormulaResult cyclic_lower_bound(u64 n) {
  if (!is_composite(n)) {
    throw std::invalid_argument("cyclic_lower_bound: n = " + std::to_string(n) +
                                " is not composite");
  }
  u64 best = 0;
  for (u64 d : semiprime_divisors(n)) best = std::max(best, i_d_size_cyclic(n, d));
  return FormulaResult::lower_bound(best, "cyclic: max closed-form |I_d(Z_n)|");
}

u64 squarefree_lower_bound(u64 n) {
  const auto f = factorize(n);
  if (f.omega() < 2 || !f.is_squarefree()) {
    throw std::invalid_argument("squarefree_lower_bound: n must be squarefree with >= 2 primes");
  }
  const auto& pp = f.powers();
  const std::size_t t = pp.size();
  u64 value = (pp[t - 2].prime - 1) * (pp[t - 1].prime - 1);
  for (std::size_t r = 0; r + 2 < t; ++r) value *= pp[r].prime;
  return value;
}

namespace {

FormulaResult cyclic_formula(u64 n) {
  const auto f = factorize(n);
  const auto& pp = f.powers();
  if (pp.empty() || (pp.size() == 1 && pp[0].exponent == 1)) {
    return FormulaResult::exact(1, "cyclic: no composite orders, complete graph");
  }
  if (pp.size() == 1) {
    return FormulaResult::exact(n - pp[0].prime, "cyclic p^m: n - p");
  }
  if (pp.size() == 2) {
    const u64 p1 = pp[0].prime, p2 = pp[1].prime;
    const unsigned a = pp[0].exponent, b = pp[1].exponent;
    if (a == 1 && b == 1) {
      return FormulaResult::exact((p1 - 1) * (p2 - 1), "cyclic pq: (p-1)(q-1)");
    }
    if (a == 1 || b == 1) {
      // n = p q^b with b >= 2
      const u64 p = a == 1 ? p1 : p2;
      const u64 q = a == 1 ? p2 : p1;
      const u64 qb = ipow(q, a == 1 ? b : a);
      return FormulaResult::exact(n - std::min(p * q, qb + p - 1),
                                  "cyclic pq^b: n - min{pq, q^b + p - 1}");
    }
    const u64 pa = ipow(p1, a), qb = ipow(p2, b);
    return FormulaResult::exact(n - std::min({pa * p2, p1 * qb, pa + qb - 1}),
                                "cyclic p^a q^b: n - min{p^a q, p q^b, p^a + q^b - 1}");
  }
  if (pp.size() == 3 && f.is_squarefree()) {
    return FormulaResult::exact(pp[0].prime * (pp[1].prime - 1) * (pp[2].prime - 1),
                                "cyclic p1 p2 p3: p1 (p2-1)(p3-1)");
  }
  return FormulaResult::unsupported("cyclic: no closed form for this factorization shape");
}

// n = 2^k m with m odd
u64 odd_part(u64 n) {
  while (n % 2 == 0) n /= 2;
  return n;
}

}  // namespace

FormulaResult alpha_exact_formula(const GroupSpec& spec) {
  const u64 n = spec.parameter();
  switch (spec.family()) {
    case Family::Cyclic:
      return cyclic_formula(n);
    case Family::Dihedral: {
      auto r = cyclic_formula(n);
      r.provenance = "dihedral: alpha(Z_n) via " + r.provenance;
      return r;
    }
    case Family::Dicyclic:
      if (n % 2 == 1) return FormulaResult::exact(2 * n, "dicyclic, n odd: 2n");
      return FormulaResult::exact(4 * n - 2 * odd_part(n), "dicyclic, n = 2^k m: 4n - 2m");
    case Family::Semidihedral:
      return FormulaResult::exact(6 * n - 2 * odd_part(n), "semidihedral, n = 2^k m: 6n - 2m");
    case Family::Explicit:
      break;
  }
  return FormulaResult::unsupported("explicit order lists have no closed form");
}

std::optional<JoinDecomposition> cyclic_decomposition(u64 n) {
  const auto f = factorize(n);
  const auto& pp = f.powers();
  auto K = [](u64 k) { return Graph::complete(k); };
  auto E = [](u64 k) { return Graph::empty(k); };

  if (pp.size() == 3 && f.is_squarefree()) {
    const u64 p1 = pp[0].prime, p2 = pp[1].prime, p3 = pp[2].prime;
    JoinDecomposition d;
    // 0: P(Z_n)  1: order p1p2  2: order p2p3  3: order p1p3  4: order n
    d.shape = shape_from(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
    d.parts = {K(p1 + p2 + p3 - 2), E((p1 - 1) * (p2 - 1)), E((p2 - 1) * (p3 - 1)),
               E((p1 - 1) * (p3 - 1)), E((p1 - 1) * (p2 - 1) * (p3 - 1))};
    d.description = "p1 p2 p3";
    return d;
  }
  if (pp.size() != 2) return std::nullopt;
  const unsigned a = pp[0].exponent, b = pp[1].exponent;
  if (a == 1 && b == 1) return std::nullopt;

  if (a == 1 || b == 1) {
    const u64 p = a == 1 ? pp[0].prime : pp[1].prime;
    const u64 q = a == 1 ? pp[1].prime : pp[0].prime;
    const u64 qb = ipow(q, a == 1 ? b : a);
    JoinDecomposition d;
    // 0: P(Z_n)  1: orders q^k  2: order pq  3: orders p q^k  (k >= 2)
    d.shape = shape_from(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    d.parts = {K(p + q - 1), E(qb - q), E((p - 1) * (q - 1)), E((p - 1) * (qb - q))};
    d.description = "p q^b";
    return d;
  }

  const u64 p = pp[0].prime, q = pp[1].prime;
  const u64 pa = ipow(p, a), qb = ipow(q, b);
  JoinDecomposition d;
  // 0: P(Z_n)  1: p^i  2: q^j  3: pq  4: p^i q  5: p q^j  6: p^i q^j  (i, j >= 2)
  d.shape = shape_from(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                           {1, 2}, {1, 3}, {2, 3}, {1, 5}, {2, 4}});
  d.parts = {K(p + q - 1),           E(pa - p),       E(qb - q),
             E((p - 1) * (q - 1)),   E((pa - p) * (q - 1)),
             E((p - 1) * (qb - q)),  E((pa - p) * (qb - q))};
  d.description = "p^a q^b";
  return d;
}

}  // namespace pcg
