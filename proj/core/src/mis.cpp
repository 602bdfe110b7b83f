#include "pcg/mis.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pcg {

std::string_view to_string(MisMethod method) {
  return method == MisMethod::Oracle ? "oracle" : "quotient";
}

SolverTimeout::SolverTimeout(u64 best_lower_bound, std::vector<std::size_t> best_witness)
    : std::runtime_error("independence solver timed out; best lower bound " +
                         std::to_string(best_lower_bound) + " (incomplete)"),
      best_lower_bound_(best_lower_bound),
      best_witness_(std::move(best_witness)) {}

namespace {

// Bitset maximum clique (BBMC style). Vertices are renumbered so that bit
// order equals the initial ordering, degree-descending.
class CliqueSolver {
 public:
  CliqueSolver(const Graph& g, std::chrono::milliseconds timeout)
      : n_(g.size()), deadline_(std::chrono::steady_clock::now() + timeout) {
    relabel_.resize(n_);
    std::iota(relabel_.begin(), relabel_.end(), std::size_t{0});
    std::stable_sort(relabel_.begin(), relabel_.end(), [&](std::size_t a, std::size_t b) {
      return g.degree(a) > g.degree(b);
    });
    std::vector<std::size_t> position(n_);
    for (std::size_t i = 0; i < n_; ++i) position[relabel_[i]] = i;
    rows_.assign(n_, VertexSet(n_));
    for (std::size_t u = 0; u < n_; ++u) {
      const auto& row = g.neighbours(u);
      for (auto v = row.find_first(); v != VertexSet::npos; v = row.find_next(v)) {
        rows_[position[u]].set(position[v]);
      }
    }
  }

  // On timeout expand() unwinds via Timeout; the best clique so far stays valid.
  void run() {
    try {
      VertexSet all(n_);
      all.set();
      expand(all);
    } catch (const Timeout&) {
    }
  }

  std::vector<std::size_t> best_so_far() const {
    std::vector<std::size_t> out;
    for (std::size_t v : best_) out.push_back(relabel_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool timed_out() const { return timed_out_; }

 private:
  struct Timeout {};

  void colour_sort(const VertexSet& p, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& bound) const {
    VertexSet uncoloured = p;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      VertexSet q = uncoloured;
      for (auto v = q.find_first(); v != VertexSet::npos; v = q.find_first()) {
        uncoloured.reset(v);
        q.reset(v);
        q -= rows_[v];
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  void expand(VertexSet p) {
    if ((nodes_++ & 0x3ff) == 0 && std::chrono::steady_clock::now() >= deadline_) {
      timed_out_ = true;
      throw Timeout{};
    }
    std::vector<std::size_t> order, bound;
    colour_sort(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      VertexSet next = p & rows_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  std::size_t n_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<std::size_t> relabel_;
  std::vector<VertexSet> rows_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::size_t nodes_ = 0;
  bool timed_out_ = false;
};

// Weighted maximum independent set over the class conflict graph.
class ClassSolver {
 public:
  explicit ClassSolver(const QuotientGraph& q) : q_(q), k_(q.classes.size()) {
    // Branch on heavier classes first; ties by ascending order.
    order_.resize(k_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return q.classes[a].weight > q.classes[b].weight;
    });
    std::vector<std::size_t> position(k_);
    for (std::size_t i = 0; i < k_; ++i) position[order_[i]] = i;
    weight_.resize(k_);
    conflict_.assign(k_, VertexSet(k_));
    for (std::size_t i = 0; i < k_; ++i) {
      weight_[i] = q.classes[order_[i]].weight;
      const auto& row = q.conflicts.neighbours(order_[i]);
      for (auto j = row.find_first(); j != VertexSet::npos; j = row.find_next(j)) {
        conflict_[i].set(position[j]);
      }
    }
  }

  std::vector<u64> solve() {
    VertexSet all(k_);
    all.set();
    search(all);
    return best_orders_;
  }

  u64 best_weight() const { return best_weight_; }

 private:
  // Partition candidates greedily into conflict cliques; a feasible selection
  // takes at most one class from each, so the sum of clique maxima bounds it.
  u64 clique_cover_bound(const VertexSet& candidates) const {
    std::vector<VertexSet> cliques;
    std::vector<u64> heaviest;
    for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
      bool placed = false;
      for (std::size_t c = 0; c < cliques.size() && !placed; ++c) {
        if (cliques[c].is_subset_of(conflict_[v])) {
          cliques[c].set(v);
          heaviest[c] = std::max(heaviest[c], weight_[v]);
          placed = true;
        }
      }
      if (!placed) {
        cliques.emplace_back(k_);
        cliques.back().set(v);
        heaviest.push_back(weight_[v]);
      }
    }
    return std::accumulate(heaviest.begin(), heaviest.end(), u64{0});
  }

  void record() {
    std::vector<u64> orders;
    for (std::size_t v : current_) orders.push_back(q_.classes[order_[v]].order);
    std::sort(orders.begin(), orders.end());
    if (current_weight_ > best_weight_ ||
        (current_weight_ == best_weight_ && orders < best_orders_)) {
      best_weight_ = current_weight_;
      best_orders_ = std::move(orders);
    }
  }

  void search(VertexSet candidates) {
    record();
    // Equal bounds are still explored so that ties resolve lexicographically.
    if (current_weight_ + clique_cover_bound(candidates) < best_weight_) return;
    for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_first()) {
      current_.push_back(v);
      current_weight_ += weight_[v];
      search(candidates - conflict_[v] - single(v));
      current_weight_ -= weight_[v];
      current_.pop_back();
      candidates.reset(v);
      if (current_weight_ + clique_cover_bound(candidates) < best_weight_) return;
    }
  }

  VertexSet single(std::size_t v) const {
    VertexSet s(k_);
    s.set(v);
    return s;
  }

  const QuotientGraph& q_;
  std::size_t k_;
  std::vector<std::size_t> order_;
  std::vector<u64> weight_;
  std::vector<VertexSet> conflict_;
  std::vector<std::size_t> current_;
  u64 current_weight_ = 0;
  u64 best_weight_ = 0;
  std::vector<u64> best_orders_;
};

}  // namespace

MisResult mis_oracle(const Graph& g, const OracleOptions& options) {
  if (g.size() == 0) throw std::invalid_argument("mis_oracle: graph has no vertices");
  if (g.size() > options.max_vertices) {
    throw std::length_error("mis_oracle: " + std::to_string(g.size()) +
                            " vertices exceed the oracle bound " +
                            std::to_string(options.max_vertices));
  }
  CliqueSolver solver(g.complement(), options.timeout);
  solver.run();
  if (solver.timed_out()) {
    auto witness = solver.best_so_far();
    const u64 size = witness.size();
    throw SolverTimeout(size, std::move(witness));
  }
  MisResult result;
  result.method = MisMethod::Oracle;
  result.vertices = solver.best_so_far();
  result.alpha = result.vertices.size();
  if (!is_independent(g, result.vertices)) {
    throw std::logic_error("mis_oracle: witness is not independent");
  }
  return result;
}

MisResult mis_quotient(const QuotientGraph& q) {
  MisResult result;
  result.method = MisMethod::Quotient;
  if (q.empty()) {
    result.alpha = 1;
    return result;
  }
  ClassSolver solver(q);
  result.classes = solver.solve();
  result.alpha = std::max<u64>(1, solver.best_weight());
  if (!order_set_independent(result.classes)) {
    throw std::logic_error("mis_quotient: selected classes conflict");
  }
  return result;
}

std::vector<std::size_t> i_d_set(const ThetaGraph& theta, u64 d) {
  const u64 n = theta.size();
  if (!is_semiprime(d) || n % d != 0) {
    throw std::invalid_argument("i_d_set: " + std::to_string(d) +
                                " is not a semiprime divisor of " + std::to_string(n));
  }
  std::vector<std::size_t> set;
  for (std::size_t v = 0; v < theta.size(); ++v) {
    if (theta.order(v) % d == 0) set.push_back(v);
  }
  if (!is_independent(theta.graph(), set)) {
    throw std::logic_error("i_d_set: I_" + std::to_string(d) + " is not independent");
  }
  if (!set.empty() && !is_maximal_independent(theta.graph(), set)) {
    throw std::logic_error("i_d_set: I_" + std::to_string(d) + " is not maximal");
  }
  return set;
}

u64 sp_lower_bound(const OrderProfile& profile) {
  u64 best = 0;
  for (u64 d : semiprime_divisors(profile.group_order)) {
    best = std::max(best, i_d_size(profile, d));
  }
  return best;
}

bool is_independent(const Graph& g, std::span<const std::size_t> vertices) {
  VertexSet members(g.size());
  for (std::size_t v : vertices) members.set(v);
  for (std::size_t v : vertices) {
    if (g.neighbours(v).intersects(members)) return false;
  }
  return true;
}

bool is_maximal_independent(const Graph& g, std::span<const std::size_t> vertices) {
  if (!is_independent(g, vertices)) return false;
  VertexSet members(g.size());
  for (std::size_t v : vertices) members.set(v);
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (!members.test(u) && !g.neighbours(u).intersects(members)) return false;
  }
  return true;
}

std::optional<std::pair<u64, u64>> order_set_conflict(std::span<const u64> orders) {
  for (u64 d : orders) {
    if (!is_composite(d)) return std::make_pair(d, d);
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      if (gcd_is_unit_or_prime(orders[i], orders[j])) return std::make_pair(orders[i], orders[j]);
    }
  }
  return std::nullopt;
}

u64 order_set_weight(const OrderProfile& profile, std::span<const u64> orders) {
  std::vector<u64> distinct(orders.begin(), orders.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  u64 total = 0;
  for (u64 d : distinct) total += profile.count(d);
  return total;
}

}  // namespace pcg
