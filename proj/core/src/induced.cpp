#include "pcg/graph.hpp"

#include <array>

namespace pcg {

namespace {

struct PatternShape {
  std::size_t vertices;
  std::size_t edges;
  std::size_t max_degree;
};

constexpr PatternShape shape_of(Pattern p) {
  switch (p) {
    case Pattern::C4: return {4, 4, 2};
    case Pattern::C5: return {5, 5, 2};
    case Pattern::TwoK2: return {4, 2, 1};
  }
  return {0, 0, 0};
}

// C4, C5 and 2K2 each have clique number 2 and independence number 2, so no
// partial witness may contain a triangle or an independent triple.
class InducedSearch {
 public:
  InducedSearch(const Graph& g, Pattern p) : g_(g), shape_(shape_of(p)) {}

  std::optional<std::vector<std::size_t>> run() {
    if (g_.size() < shape_.vertices) return std::nullopt;
    if (extend(0)) return std::vector<std::size_t>(chosen_.begin(), chosen_.begin() + depth_);
    return std::nullopt;
  }

 private:
  bool extend(std::size_t first) {
    if (depth_ == shape_.vertices) return complete();
    const std::size_t remaining = shape_.vertices - depth_;
    for (std::size_t w = first; w + remaining <= g_.size(); ++w) {
      if (!admissible(w)) continue;
      push(w);
      if (extend(w + 1)) return true;
      pop();
    }
    return false;
  }

  bool admissible(std::size_t w) const {
    std::size_t w_degree = 0;
    std::size_t added_edges = 0;
    for (std::size_t i = 0; i < depth_; ++i) {
      const bool wi = g_.adjacent(w, chosen_[i]);
      if (wi) {
        ++w_degree;
        ++added_edges;
        if (degree_[i] + 1 > shape_.max_degree) return false;
      }
      for (std::size_t j = i + 1; j < depth_; ++j) {
        const bool wj = g_.adjacent(w, chosen_[j]);
        const bool ij = g_.adjacent(chosen_[i], chosen_[j]);
        if (wi == wj && wj == ij) return false;
      }
    }
    return w_degree <= shape_.max_degree && edges_ + added_edges <= shape_.edges;
  }

  void push(std::size_t w) {
    degree_[depth_] = 0;
    for (std::size_t i = 0; i < depth_; ++i) {
      if (g_.adjacent(w, chosen_[i])) {
        ++degree_[i];
        ++degree_[depth_];
        ++edges_;
      }
    }
    chosen_[depth_++] = w;
  }

  void pop() {
    const std::size_t w = chosen_[--depth_];
    for (std::size_t i = 0; i < depth_; ++i) {
      if (g_.adjacent(w, chosen_[i])) {
        --degree_[i];
        --edges_;
      }
    }
  }

  // On 4 or 5 vertices a graph with all degrees equal to the pattern's max
  // degree and the right edge count is the pattern itself.
  bool complete() const {
    if (edges_ != shape_.edges) return false;
    for (std::size_t i = 0; i < depth_; ++i) {
      if (degree_[i] != shape_.max_degree) return false;
    }
    return true;
  }

  const Graph& g_;
  PatternShape shape_;
  std::array<std::size_t, 5> chosen_{};
  std::array<std::size_t, 5> degree_{};
  std::size_t depth_ = 0;
  std::size_t edges_ = 0;
};

}  // namespace

std::string_view to_string(Pattern pattern) {
  switch (pattern) {
    case Pattern::C4: return "C4";
    case Pattern::C5: return "C5";
    case Pattern::TwoK2: return "2K2";
  }
  return "?";
}

std::optional<std::vector<std::size_t>> find_induced(const Graph& g, Pattern pattern) {
  return InducedSearch(g, pattern).run();
}

std::optional<std::pair<Pattern, std::vector<std::size_t>>> find_split_obstruction(
    const Graph& g) {
  for (Pattern p : {Pattern::C4, Pattern::C5, Pattern::TwoK2}) {
    if (auto witness = find_induced(g, p)) return std::make_pair(p, std::move(*witness));
  }
  return std::nullopt;
}

}  // namespace pcg
