// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pcg/pcg.hpp"

using namespace pcg;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

u64 quotient_alpha(const GroupSpec& spec) {
  return mis_quotient(build_quotient(order_profile(spec))).alpha;
}

u64 oracle_alpha(const GroupSpec& spec) {
  return mis_oracle(build_theta(spec).graph(), {1000, std::chrono::seconds(60)}).alpha;
}

std::string str(u64 v) { return std::to_string(v); }

// Prime factorization by trial division, independent of the library.
std::vector<std::pair<u64, unsigned>> factor_by_scan(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

bool is_covered_cyclic_shape(u64 n) {
  const auto f = factor_by_scan(n);
  if (f.size() == 1) return f[0].second >= 2;
  if (f.size() == 2) return true;  // pq, pq^b, p^a q^b
  return f.size() == 3 && f[0].second == 1 && f[1].second == 1 && f[2].second == 1;
}

// n = 2^k m with m odd.
u64 odd_part(u64 n) {
  while (n % 2 == 0) n /= 2;
  return n;
}

Outcome ac1_cyclic_formulas() {
  Outcome r;
  std::size_t checked = 0;
  for (u64 n = 2; n <= 2000; ++n) {
    if (!is_covered_cyclic_shape(n)) continue;
    const auto f = alpha_exact_formula(GroupSpec::cyclic(n));
    const u64 solver = quotient_alpha(GroupSpec::cyclic(n));
    r.expect(f.kind == FormulaKind::Exact, "Z_" + str(n) + ": no exact formula");
    r.expect(f.value == solver, "Z_" + str(n) + ": formula " + (f.value ? str(*f.value) : "-") +
                                    " vs solver " + str(solver));
    ++checked;
  }
  r.summary = str(checked) + " cyclic orders n <= 2000 of covered shape";
  return r;
}

Outcome ac2_z900() {
  Outcome r;
  const auto spec = GroupSpec::cyclic(900);
  const auto profile = order_profile(spec);
  const auto bound = cyclic_lower_bound(900);
  r.expect(bound.value == 768u, "cyclic_lower_bound(900) = " + str(bound.value.value_or(0)));

  const std::vector<u64> corrected = {30, 50, 60, 75, 90, 100, 150, 180, 225, 300, 450, 900};
  u64 totients = 0;
  for (u64 d : corrected) totients += oracle::phi_by_count(d);
  r.expect(order_set_independent(corrected), "corrected order set not independent");
  r.expect(totients == 796, "corrected totient sum " + str(totients));
  r.expect(order_set_weight(profile, corrected) == 796, "corrected profile weight");

  const std::vector<u64> printed = {30, 50, 60, 75, 90, 100, 125, 150, 180, 300, 450, 900};
  const auto conflict = order_set_conflict(printed);
  r.expect(conflict.has_value(), "printed order set not flagged");

  const u64 alpha = quotient_alpha(spec);
  r.expect(alpha >= 796, "solver alpha " + str(alpha) + " < 796");
  r.summary = "bound " + str(bound.value.value_or(0)) + ", corrected set sum " + str(totients) +
              ", solver alpha " + str(alpha) + ", printed set conflict " +
              (conflict ? str(conflict->first) + "/" + str(conflict->second) : "none");
  return r;
}

Outcome ac3_z1155() {
  Outcome r;
  const auto spec = GroupSpec::cyclic(1155);
  const auto bound = cyclic_lower_bound(1155);
  r.expect(bound.value == 900u, "cyclic_lower_bound(1155) = " + str(bound.value.value_or(0)));
  const std::vector<u64> set = {105, 165, 231, 385, 1155};
  u64 totients = 0;
  for (u64 d : set) totients += oracle::phi_by_count(d);
  r.expect(order_set_independent(set), "order set not independent");
  r.expect(totients == 968, "totient sum " + str(totients));
  r.expect(order_set_weight(order_profile(spec), set) == 968, "profile weight");
  const u64 alpha = quotient_alpha(spec);
  r.expect(alpha >= 968, "solver alpha " + str(alpha) + " < 968");
  r.summary = "bound " + str(bound.value.value_or(0)) + ", set sum " + str(totients) +
              ", solver alpha " + str(alpha);
  return r;
}

Outcome ac4_family_formulas() {
  Outcome r;
  std::size_t quotient_checks = 0, oracle_checks = 0;
  auto check = [&](const GroupSpec& spec, u64 expected) {
    const u64 q = quotient_alpha(spec);
    r.expect(q == expected, spec.name() + ": expected " + str(expected) + ", quotient " + str(q));
    const auto f = alpha_exact_formula(spec);
    r.expect(f.kind == FormulaKind::Exact && f.value == expected,
             spec.name() + ": library formula " + (f.value ? str(*f.value) : "-"));
    ++quotient_checks;
    if (spec.order() <= 200) {
      const u64 o = oracle_alpha(spec);
      r.expect(o == expected, spec.name() + ": expected " + str(expected) + ", oracle " + str(o));
      ++oracle_checks;
    }
  };
  for (u64 n = 3; n <= 60; ++n) {
    const u64 m = odd_part(n);
    // Dihedral: alpha of the cyclic subgroup, measured by the solver itself.
    const u64 cyclic = quotient_alpha(GroupSpec::cyclic(n));
    const u64 d_q = quotient_alpha(GroupSpec::dihedral(n));
    r.expect(d_q == cyclic, "D_" + str(2 * n) + ": " + str(d_q) + " vs Z_n " + str(cyclic));
    ++quotient_checks;
    if (2 * n <= 200) {
      const u64 d_o = oracle_alpha(GroupSpec::dihedral(n));
      r.expect(d_o == cyclic, "D_" + str(2 * n) + " oracle " + str(d_o));
      ++oracle_checks;
    }
    check(GroupSpec::dicyclic(n), n % 2 == 1 ? 2 * n : 4 * n - 2 * m);
    check(GroupSpec::semidihedral(n), 6 * n - 2 * m);
  }
  r.summary = str(quotient_checks) + " quotient and " + str(oracle_checks) + " oracle comparisons";
  return r;
}

Outcome ac5_split() {
  Outcome r;
  std::vector<GroupSpec> specs;
  for (u64 n = 1; n <= 120; ++n) specs.push_back(GroupSpec::cyclic(n));
  for (u64 n = 3; 2 * n <= 120; ++n) specs.push_back(GroupSpec::dihedral(n));
  for (u64 n = 3; 4 * n <= 120; ++n) specs.push_back(GroupSpec::dicyclic(n));
  for (u64 n = 3; 8 * n <= 120; ++n) specs.push_back(GroupSpec::semidihedral(n));
  std::size_t split = 0;
  for (const auto& spec : specs) {
    const auto profile = order_profile(spec);
    const auto theta = build_theta(spec);
    const auto c = classify_split(profile);
    const auto obstruction = find_split_obstruction(theta.graph());
    r.expect(c.is_split() == !obstruction.has_value(),
             spec.name() + ": classified " + std::string(to_string(c.kind)) + ", obstruction " +
                 (obstruction ? std::string(to_string(obstruction->first)) : "none"));
    if (!c.is_split()) continue;
    ++split;
    const auto predicted = alpha_if_split(profile);
    const u64 exact = mis_oracle(theta.graph(), {1000, std::chrono::seconds(60)}).alpha;
    r.expect(predicted.value == exact, spec.name() + ": split formula " +
                                           str(predicted.value.value_or(0)) + " vs oracle " +
                                           str(exact));
  }
  r.summary = str(specs.size()) + " groups with |G| <= 120, " + str(split) + " split";
  return r;
}

Outcome ac6_id_formula() {
  Outcome r;
  std::size_t checked = 0;
  for (u64 n = 2; n <= 2000; ++n) {
    const auto profile = order_profile(GroupSpec::cyclic(n));
    for (u64 d : semiprime_divisors(n)) {
      const u64 closed = i_d_size_cyclic(n, d);
      const u64 summed = oracle::totient_sum(n, d);
      const u64 counted = i_d_size(profile, d);
      r.expect(closed == summed && summed == counted,
               "Z_" + str(n) + " d=" + str(d) + ": " + str(closed) + "/" + str(summed) + "/" +
                   str(counted));
      ++checked;
    }
  }
  r.summary = str(checked) + " (n, d) pairs with n <= 2000";
  return r;
}

Outcome ac7_id_maximality() {
  Outcome r;
  std::size_t checked = 0;
  for (u64 n = 2; n <= 500; ++n) {
    const auto theta = build_theta(GroupSpec::cyclic(n));
    for (u64 d : semiprime_divisors(n)) {
      std::vector<std::size_t> members;
      for (std::size_t v = 0; v < theta.graph().size(); ++v) {
        if (theta.order(v) % d == 0) members.push_back(v);
      }
      if (members.empty()) continue;
      r.expect(is_maximal_independent(theta.graph(), members),
               "Z_" + str(n) + " d=" + str(d) + " not maximal independent");
      try {
        r.expect(i_d_set(theta, d) == members, "Z_" + str(n) + " d=" + str(d) + " membership");
      } catch (const std::logic_error& e) {
        r.expect(false, e.what());
      }
      ++checked;
    }
  }
  r.summary = str(checked) + " nonempty I_d sets with n <= 500";
  return r;
}

Outcome ac8_isomorphisms() {
  Outcome r;
  std::size_t checked = 0;
  for (u64 n = 3; n <= 40; ++n) {
    const auto expected = join(build_theta(GroupSpec::cyclic(n)).graph(), Graph::complete(n));
    r.expect(is_isomorphic(build_theta(GroupSpec::dihedral(n)).graph(), expected),
             "D_" + str(2 * n));
    ++checked;
  }
  for (u64 n = 3; n <= 21; n += 2) {
    const auto expected = join(build_theta(GroupSpec::cyclic(2 * n)).graph(), Graph::empty(2 * n));
    r.expect(is_isomorphic(build_theta(GroupSpec::dicyclic(n)).graph(), expected),
             "Q_" + str(4 * n));
    ++checked;
  }
  const std::vector<std::pair<std::size_t, std::size_t>> h_edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}};
  const auto h = Graph::from_edges(4, h_edges);
  const std::vector<Graph> parts = {Graph::complete(4), Graph::empty(2), Graph::empty(2),
                                    Graph::empty(4)};
  r.expect(is_isomorphic(build_theta(GroupSpec::cyclic(12)).graph(), h_join(h, parts)),
           "Z_12 H-join");
  ++checked;
  r.summary = str(checked) + " isomorphisms";
  return r;
}

Outcome ac9_random_profiles() {
  Outcome r;
  std::mt19937_64 rng(20260401);
  std::uniform_int_distribution<u64> pick_order(1, 80);
  for (int trial = 0; trial < 50; ++trial) {
    const u64 size = pick_order(rng);
    std::vector<u64> choices;
    for (u64 d : oracle::divisors_by_scan(size)) {
      if (d > 1) choices.push_back(d);
    }
    std::vector<u64> orders = {1};
    std::uniform_int_distribution<std::size_t> pick(0, choices.empty() ? 0 : choices.size() - 1);
    while (orders.size() < size) orders.push_back(choices[pick(rng)]);
    const auto spec = GroupSpec::explicit_orders(orders);
    const u64 q = quotient_alpha(spec);
    const u64 o = oracle_alpha(spec);
    r.expect(q == o, "trial " + std::to_string(trial) + " |G|=" + str(size) + ": quotient " +
                         str(q) + " vs oracle " + str(o));
  }
  r.summary = "50 random explicit profiles with |G| <= 80";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"cyclic closed forms match the solver", ac1_cyclic_formulas},
      {"Z_900 bound, corrected set and flagged set", ac2_z900},
      {"Z_1155 bound and order set", ac3_z1155},
      {"family formulas match quotient and oracle", ac4_family_formulas},
      {"split classification matches forbidden subgraphs", ac5_split},
      {"|I_d| closed form", ac6_id_formula},
      {"I_d maximality", ac7_id_maximality},
      {"decomposition isomorphisms", ac8_isomorphisms},
      {"oracle equals quotient on random profiles", ac9_random_profiles},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.pass = false;
      out.summary = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("AC%zu %s  %s: %s (%.2fs)\n", i + 1, out.pass ? "PASS" : "FAIL",
                criteria[i].first, out.summary.c_str(), secs);
    for (const auto& f : out.failures) std::printf("    %s\n", f.c_str());
    failed += out.pass ? 0 : 1;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
