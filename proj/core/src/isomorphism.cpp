#include <algorithm>
#include <map>
#include <stdexcept>

#include "pcg/graph.hpp"

namespace pcg {

namespace {

using Colouring = std::vector<std::size_t>;

// Joint 1-dimensional Weisfeiler-Leman refinement of both graphs, so colour
// ids are comparable across them.
std::pair<Colouring, Colouring> refine(const Graph& a, const Graph& b) {
  const std::size_t n = a.size();
  Colouring ca(n), cb(n);
  for (std::size_t v = 0; v < n; ++v) {
    ca[v] = a.degree(v);
    cb[v] = b.degree(v);
  }
  std::size_t classes = 0;
  for (;;) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    std::map<Signature, std::size_t> ids;
    auto signature = [](const Graph& g, const Colouring& c, std::size_t v) {
      std::vector<std::size_t> around;
      const auto& row = g.neighbours(v);
      for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w)) {
        around.push_back(c[w]);
      }
      std::sort(around.begin(), around.end());
      return Signature{c[v], std::move(around)};
    };
    std::vector<Signature> sa, sb;
    sa.reserve(n);
    sb.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      sa.push_back(signature(a, ca, v));
      sb.push_back(signature(b, cb, v));
    }
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) {
      ca[v] = ids[sa[v]];
      cb[v] = ids[sb[v]];
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::move(ca), std::move(cb)};
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, Colouring ca, Colouring cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), image_(a.size()),
        used_(b.size()) {
    std::size_t colours = 0;
    for (std::size_t c : cb_) colours = std::max(colours, c + 1);
    for (std::size_t c : ca_) colours = std::max(colours, c + 1);
    class_of_b_.assign(colours, VertexSet(b.size()));
    class_size_.assign(colours, 0);
    for (std::size_t v = 0; v < b.size(); ++v) class_of_b_[cb_[v]].set(v);
    for (std::size_t c : ca_) ++class_size_[c];
    order_ = search_order();
  }

  bool run() { return assign(0); }

 private:
  // Vertices of `a` in matching order: smallest colour class first, then the
  // vertex with the most already-placed neighbours.
  std::vector<std::size_t> search_order() const {
    const std::size_t n = a_.size();
    std::vector<std::size_t> order;
    std::vector<std::size_t> placed_neighbours(n, 0);
    std::vector<bool> placed(n, false);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == n || placed_neighbours[v] > placed_neighbours[best] ||
            (placed_neighbours[v] == placed_neighbours[best] &&
             class_size_[ca_[v]] < class_size_[ca_[best]])) {
          best = v;
        }
      }
      placed[best] = true;
      order.push_back(best);
      const auto& row = a_.neighbours(best);
      for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w)) {
        ++placed_neighbours[w];
      }
    }
    return order;
  }

  bool assign(std::size_t step) {
    if (step == order_.size()) return true;
    const std::size_t v = order_[step];
    VertexSet candidates = class_of_b_[ca_[v]] - used_;
    for (std::size_t i = 0; i < step && candidates.any(); ++i) {
      const std::size_t u = order_[i];
      if (a_.adjacent(u, v)) {
        candidates &= b_.neighbours(image_[u]);
      } else {
        candidates -= b_.neighbours(image_[u]);
      }
    }
    for (auto w = candidates.find_first(); w != VertexSet::npos; w = candidates.find_next(w)) {
      image_[v] = w;
      used_.set(w);
      if (assign(step + 1)) return true;
      used_.reset(w);
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  Colouring ca_, cb_;
  std::vector<VertexSet> class_of_b_;
  std::vector<std::size_t> class_size_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  VertexSet used_;
};

}  // namespace

bool is_isomorphic(const Graph& first, const Graph& second, std::size_t max_vertices) {
  if (first.size() > max_vertices || second.size() > max_vertices) {
    throw std::length_error("is_isomorphic: graph exceeds " + std::to_string(max_vertices) +
                            " vertices");
  }
  if (first.size() != second.size() || first.edge_count() != second.edge_count()) return false;
  if (first.size() == 0) return true;

  auto [ca, cb] = refine(first, second);
  auto histogram = [](Colouring c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  if (histogram(ca) != histogram(cb)) return false;
  return Matcher(first, second, std::move(ca), std::move(cb)).run();
}

}  // namespace pcg
