#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pcg/groups.hpp"
#include "pcg/numth.hpp"

namespace pcg {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph with one adjacency bitset per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph complete(std::size_t n);
  static Graph empty(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t size() const { return rows_.size(); }
  std::size_t edge_count() const;
  std::size_t degree(std::size_t v) const { return rows_.at(v).count(); }

  bool adjacent(std::size_t u, std::size_t v) const { return rows_.at(u).test(v); }
  const VertexSet& neighbours(std::size_t v) const { return rows_.at(v); }

  /// Adds the edge uv. Self-loops are rejected.
  void add_edge(std::size_t u, std::size_t v);

  Graph complement() const;
  /// Subgraph induced on the given vertices, renumbered in the given order.
  Graph induced(std::span<const std::size_t> vertices) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> rows_;
};

/// Γ1 ∨ Γ2: disjoint union plus every edge between the two parts.
Graph join(const Graph& first, const Graph& second);
Graph disjoint_union(const Graph& first, const Graph& second);

/// H-join: vertex i of `shape` is replaced by parts[i]; parts i and j are
/// completely connected whenever ij is an edge of `shape`. Vertices of parts[0]
/// come first, then parts[1], and so on.
Graph h_join(const Graph& shape, std::span<const Graph> parts);

/// The prime-coprime graph: one vertex per group element, with distinct
/// elements adjacent when the gcd of their orders is 1 or a prime.
class ThetaGraph {
 public:
  const Graph& graph() const { return graph_; }
  const std::vector<Element>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  u64 order(std::size_t v) const { return vertices_.at(v).order; }
  const std::string& label(std::size_t v) const { return vertices_.at(v).label; }

 private:
  friend ThetaGraph build_theta(std::span<const Element> elements);

  std::vector<Element> vertices_;
  Graph graph_;
};

/// Throws std::invalid_argument for an empty list or an order of 0.
ThetaGraph build_theta(std::span<const Element> elements);
ThetaGraph build_theta(const GroupSpec& spec, u64 max_order = kDefaultEnumerationBound);

bool is_dominating(const ThetaGraph& theta, std::size_t v);

struct OrderClass {
  u64 order = 0;
  u64 weight = 0;

  friend bool operator==(const OrderClass&, const OrderClass&) = default;
};

/// Order-class compression of Θ(G) restricted to composite orders. Elements of
/// one composite order are pairwise non-adjacent, so each class is an
/// independent set of Θ(G); `conflicts` joins two classes exactly when their
/// elements are adjacent in Θ(G).
struct QuotientGraph {
  std::vector<OrderClass> classes;  // ascending by order
  Graph conflicts;

  bool empty() const { return classes.empty(); }
};

QuotientGraph build_quotient(const OrderProfile& profile);

enum class Pattern { C4, C5, TwoK2 };

std::string_view to_string(Pattern pattern);

/// Searches for a vertex set inducing `pattern`. Exhaustive; returns the
/// lexicographically least witness as ascending vertex indices.
std::optional<std::vector<std::size_t>> find_induced(const Graph& g, Pattern pattern);

/// First witness over C4, C5 and 2K2 (in that order), tagged with its pattern.
std::optional<std::pair<Pattern, std::vector<std::size_t>>> find_split_obstruction(const Graph& g);

inline constexpr std::size_t kDefaultIsomorphismBound = 200;

/// Exact backtracking isomorphism test with colour-refinement pruning. Throws
/// std::length_error when either graph exceeds max_vertices.
bool is_isomorphic(const Graph& first, const Graph& second,
                   std::size_t max_vertices = kDefaultIsomorphismBound);

/// Plain-text edge list:
///   # vertices <n>
///   <label> <order>          (one line per vertex, by index)
///   # edges <m>
///   <label> <label>          (one line per edge, lexicographic by index)
std::string export_edges(const ThetaGraph& theta);

/// Undirected DOT graph with vertices labelled "label(order)".
std::string export_dot(const ThetaGraph& theta);

}  // namespace pcg
