#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "pcg/mis.hpp"

using pcg::Graph;
using pcg::GroupSpec;
using pcg::u64;

namespace {

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

u64 quotient_alpha(const GroupSpec& spec) {
  return pcg::mis_quotient(pcg::build_quotient(pcg::order_profile(spec))).alpha;
}

}  // namespace

TEST_SUITE("mis") {
  TEST_CASE("oracle examples") {
    CHECK(pcg::mis_oracle(Graph::complete(5)).alpha == 1);
    CHECK(pcg::mis_oracle(Graph::complete(1)).alpha == 1);
    const auto z4 = pcg::mis_oracle(pcg::build_theta(GroupSpec::cyclic(4)).graph());
    CHECK(z4.alpha == 2);
    CHECK(z4.vertices == std::vector<std::size_t>{1, 3});
    CHECK(z4.method == pcg::MisMethod::Oracle);
    CHECK(pcg::mis_oracle(pcg::build_theta(GroupSpec::dicyclic(3)).graph()).alpha == 6);
    CHECK_THROWS_AS(pcg::mis_oracle(Graph{}), std::invalid_argument);
    CHECK_THROWS_AS(pcg::mis_oracle(Graph::empty(20), {.max_vertices = 10}), std::length_error);
  }

  TEST_CASE("oracle agrees with subset enumeration") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 1 + rng() % 16;
      const double density = 0.1 + 0.8 * (trial % 9) / 8.0;
      const auto g = random_graph(n, density, rng);
      const auto r = pcg::mis_oracle(g);
      REQUIRE(r.alpha == oracle::mis_by_subsets(g));
      REQUIRE(r.vertices.size() == r.alpha);
      REQUIRE(pcg::is_independent(g, r.vertices));
    }
  }

  TEST_CASE("oracle timeout reports an incomplete lower bound") {
    std::mt19937_64 rng(29);
    const auto g = random_graph(200, 0.5, rng);
    try {
      (void)pcg::mis_oracle(g, {.max_vertices = 500, .timeout = std::chrono::milliseconds(0)});
      FAIL("expected a timeout");
    } catch (const pcg::SolverTimeout& t) {
      CHECK(t.best_witness().size() == t.best_lower_bound());
      CHECK(pcg::is_independent(g, t.best_witness()));
      CHECK(std::string(t.what()).find("incomplete") != std::string::npos);
    }
  }

  TEST_CASE("quotient examples") {
    const auto z30 = pcg::mis_quotient(pcg::build_quotient(pcg::order_profile(GroupSpec::cyclic(30))));
    CHECK(z30.alpha == 16);
    CHECK(z30.classes == std::vector<u64>{15, 30});
    CHECK(z30.method == pcg::MisMethod::Quotient);

    CHECK(pcg::mis_quotient(pcg::QuotientGraph{}).alpha == 1);

    const auto z12 = pcg::mis_quotient(pcg::build_quotient(pcg::order_profile(GroupSpec::cyclic(12))));
    CHECK(z12.alpha == 6);
    CHECK(z12.classes == std::vector<u64>{4, 12});
  }

  TEST_CASE("oracle and quotient agree on named families") {
    for (u64 n = 3; n <= 40; ++n) {
      for (auto family : {pcg::Family::Cyclic, pcg::Family::Dihedral, pcg::Family::Dicyclic,
                          pcg::Family::Semidihedral}) {
        const auto spec = GroupSpec::make(family, n);
        if (spec.order() > 120) continue;
        CAPTURE(spec.name());
        const auto theta = pcg::build_theta(spec);
        const auto q = pcg::mis_quotient(pcg::build_quotient(pcg::order_profile(spec)));
        const auto o = pcg::mis_oracle(theta.graph());
        REQUIRE(o.alpha == q.alpha);
        // expand the class selection back into vertices and check it on theta
        std::vector<std::size_t> expanded;
        for (std::size_t v = 0; v < theta.size(); ++v) {
          if (std::find(q.classes.begin(), q.classes.end(), theta.order(v)) != q.classes.end())
            expanded.push_back(v);
        }
        if (!q.classes.empty()) {
          REQUIRE(expanded.size() == q.alpha);
          REQUIRE(pcg::is_independent(theta.graph(), expanded));
        }
      }
    }
  }

  TEST_CASE("i_d_set examples") {
    const auto z900 = pcg::build_theta(GroupSpec::cyclic(900));
    CHECK(pcg::i_d_set(z900, 15).size() == 768);
    CHECK(pcg::i_d_set(pcg::build_theta(GroupSpec::cyclic(6)), 6) == std::vector<std::size_t>{1, 5});
    CHECK(pcg::i_d_set(pcg::build_theta(GroupSpec::dicyclic(4)), 4).size() == 14);
    CHECK_THROWS_AS(pcg::i_d_set(z900, 8), std::invalid_argument);
    CHECK_THROWS_AS(pcg::i_d_set(z900, 49), std::invalid_argument);
  }

  TEST_CASE("independence predicates") {
    const std::vector<pcg::Element> elements = {{"e", 1}, {"x", 6}, {"y", 3},
                                                {"z", 2}, {"w", 3}, {"v", 6}};
    const auto theta = pcg::build_theta(elements);
    CHECK(pcg::i_d_set(theta, 6) == std::vector<std::size_t>{1, 5});
    CHECK(pcg::is_maximal_independent(theta.graph(), std::vector<std::size_t>{1, 5}));
    CHECK_FALSE(pcg::is_maximal_independent(theta.graph(), std::vector<std::size_t>{1}));
    CHECK_FALSE(pcg::is_independent(Graph::complete(3), std::vector<std::size_t>{1, 2}));
    CHECK_FALSE(pcg::is_maximal_independent(Graph::empty(3), std::vector<std::size_t>{1, 2}));
    CHECK(pcg::is_maximal_independent(Graph::empty(3), std::vector<std::size_t>{0, 1, 2}));
  }

  TEST_CASE("sp lower bound") {
    CHECK(pcg::sp_lower_bound(pcg::order_profile(GroupSpec::cyclic(900))) == 768);
    CHECK(pcg::sp_lower_bound(pcg::order_profile(GroupSpec::cyclic(1155))) == 900);
    CHECK(pcg::sp_lower_bound(pcg::order_profile(GroupSpec::cyclic(97))) == 0);
    for (u64 n = 2; n <= 300; ++n) {
      for (auto family : {pcg::Family::Cyclic, pcg::Family::Dihedral, pcg::Family::Dicyclic,
                          pcg::Family::Semidihedral}) {
        if (family != pcg::Family::Cyclic && n < 3) continue;
        const auto spec = GroupSpec::make(family, n);
        REQUIRE(pcg::sp_lower_bound(pcg::order_profile(spec)) <= quotient_alpha(spec));
      }
    }
  }

  TEST_CASE("alpha of a join is the larger alpha") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = random_graph(1 + rng() % 10, 0.4, rng);
      const auto b = random_graph(1 + rng() % 10, 0.4, rng);
      REQUIRE(pcg::mis_oracle(pcg::join(a, b)).alpha ==
              std::max(pcg::mis_oracle(a).alpha, pcg::mis_oracle(b).alpha));
    }
  }

  TEST_CASE("order set independence") {
    const std::vector<u64> corrected = {30, 50, 60, 75, 90, 100, 150, 180, 225, 300, 450, 900};
    CHECK(pcg::order_set_independent(corrected));
    const std::vector<u64> printed = {30, 50, 60, 75, 90, 100, 125, 150, 180, 300, 450, 900};
    CHECK(pcg::order_set_conflict(printed) == std::make_pair(u64{30}, u64{125}));
    const std::vector<u64> with_prime = {6, 7};
    CHECK(pcg::order_set_conflict(with_prime) == std::make_pair(u64{7}, u64{7}));
    const auto z900 = pcg::order_profile(GroupSpec::cyclic(900));
    CHECK(pcg::order_set_weight(z900, corrected) == 796);
  }
}
