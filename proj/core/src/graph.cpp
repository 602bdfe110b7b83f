#include "pcg/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pcg {

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.rows_[v].set();
    g.rows_[v].reset(v);
  }
  return g;
}

Graph Graph::empty(std::size_t n) { return Graph(n); }

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<std::size_t, std::size_t>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw std::out_of_range("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self-loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

Graph Graph::complement() const {
  Graph g(size());
  for (std::size_t v = 0; v < size(); ++v) {
    g.rows_[v] = ~rows_[v];
    g.rows_[v].reset(v);
  }
  return g;
}

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (auto v = rows_[u].find_next(u); v != VertexSet::npos; v = rows_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& first, const Graph& second) {
  const Graph parts[] = {first, second};
  return h_join(Graph::empty(2), parts);
}

Graph join(const Graph& first, const Graph& second) {
  const Graph parts[] = {first, second};
  return h_join(Graph::complete(2), parts);
}

Graph h_join(const Graph& shape, std::span<const Graph> parts) {
  if (parts.size() != shape.size()) {
    throw std::invalid_argument("h_join: " + std::to_string(parts.size()) +
                                " parts for a shape on " + std::to_string(shape.size()) +
                                " vertices");
  }
  std::vector<std::size_t> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) offset[i + 1] = offset[i] + parts[i].size();

  Graph g(offset.back());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& [u, v] : parts[i].edges()) g.add_edge(offset[i] + u, offset[i] + v);
  }
  for (const auto& [i, j] : shape.edges()) {
    for (std::size_t u = offset[i]; u < offset[i + 1]; ++u) {
      for (std::size_t v = offset[j]; v < offset[j + 1]; ++v) g.add_edge(u, v);
    }
  }
  return g;
}

ThetaGraph build_theta(std::span<const Element> elements) {
  if (elements.empty()) throw std::invalid_argument("build_theta: no elements");
  ThetaGraph theta;
  theta.vertices_.assign(elements.begin(), elements.end());
  theta.graph_ = Graph(elements.size());

  // Adjacency depends only on the pair of orders, so group vertices by order.
  std::map<u64, std::vector<std::size_t>> by_order;
  for (std::size_t v = 0; v < elements.size(); ++v) {
    if (elements[v].order == 0) throw std::invalid_argument("build_theta: order 0");
    by_order[elements[v].order].push_back(v);
  }
  for (auto a = by_order.begin(); a != by_order.end(); ++a) {
    for (auto b = a; b != by_order.end(); ++b) {
      if (!gcd_is_unit_or_prime(a->first, b->first)) continue;
      for (std::size_t u : a->second) {
        for (std::size_t v : b->second) {
          if (u != v) theta.graph_.add_edge(u, v);
        }
      }
    }
  }
  return theta;
}

ThetaGraph build_theta(const GroupSpec& spec, u64 max_order) {
  const auto elements = enumerate_elements(spec, max_order);
  return build_theta(elements);
}

bool is_dominating(const ThetaGraph& theta, std::size_t v) {
  return theta.graph().degree(v) + 1 == theta.size();
}

QuotientGraph build_quotient(const OrderProfile& profile) {
  QuotientGraph q;
  for (const auto& [order, count] : profile.counts) {
    if (count > 0 && is_composite(order)) q.classes.push_back({order, count});
  }
  q.conflicts = Graph(q.classes.size());
  for (std::size_t i = 0; i < q.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < q.classes.size(); ++j) {
      if (gcd_is_unit_or_prime(q.classes[i].order, q.classes[j].order)) {
        q.conflicts.add_edge(i, j);
      }
    }
  }
  return q;
}

}  // namespace pcg
