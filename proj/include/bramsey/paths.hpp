#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "bramsey/coloring.hpp"
#include "bramsey/matching.hpp"
#include "bramsey/search.hpp"
#include "bramsey/search_engine.hpp"

namespace bramsey {

// Exact longest-path and fixed-length-cycle search. These are certificate
// generators for small instances: hard budgets, no heuristics.

struct PathBudget {
  std::uint64_t max_states = 8'000'000;  // memo entries per component
  int max_component_vertices = 25;
};

class budget_exceeded_error : public std::runtime_error {
 public:
  explicit budget_exceeded_error(const std::string& what)
      : std::runtime_error(what) {}
};

namespace detail {

// Longest simple path in one component, exact. Memoised DFS on
// (endpoint, visited-set) over component-local vertex ids (lefts first).
class ComponentPathSearch {
 public:
  ComponentPathSearch(const Component& comp, const PathBudget& budget)
      : budget_(budget) {
    int nl = static_cast<int>(comp.left_vertices.size());
    int nr = static_cast<int>(comp.right_vertices.size());
    nv_ = nl + nr;
    if (nv_ > budget.max_component_vertices)
      throw budget_exceeded_error(
          "longest path: component too large for exact search");
    ids_.reserve(nv_);
    for (int v : comp.left_vertices) ids_.push_back(left_vertex(v));
    for (int v : comp.right_vertices) ids_.push_back(right_vertex(v));
    adj_.assign(nv_, 0);
    for (const Edge& e : comp.edges) {
      int u = local_of(left_vertex(e.left), nl);
      int v = local_of(right_vertex(e.right), nl) ;
      adj_[u] |= 1u << v;
      adj_[v] |= 1u << u;
    }
  }

  // Maximum number of vertices on a simple path starting at local vertex v
  // given the already-visited set (v included).
  int longest_from(int v, std::uint32_t visited) {
    std::uint64_t key = (static_cast<std::uint64_t>(visited) << 5) | v;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (memo_.size() >= budget_.max_states)
      throw budget_exceeded_error("longest path: state budget exceeded");
    int best = 1;
    std::uint32_t next = adj_[v] & ~visited;
    while (next) {
      int w = __builtin_ctz(next);
      next &= next - 1;
      best = std::max(best, 1 + longest_from(w, visited | (1u << w)));
    }
    memo_.emplace(key, best);
    return best;
  }

  std::pair<int, std::vector<Vertex>> longest_path() {
    int best = 0, best_start = -1;
    for (int v = 0; v < nv_; ++v) {
      int len = longest_from(v, 1u << v);
      if (len > best) {
        best = len;
        best_start = v;
      }
    }
    std::vector<Vertex> path;
    if (best_start >= 0) {
      int cur = best_start;
      std::uint32_t visited = 1u << cur;
      path.push_back(ids_[cur]);
      int remaining = best - 1;
      while (remaining > 0) {
        std::uint32_t next = adj_[cur] & ~visited;
        while (next) {
          int w = __builtin_ctz(next);
          next &= next - 1;
          if (longest_from(w, visited | (1u << w)) == remaining) {
            cur = w;
            visited |= 1u << w;
            path.push_back(ids_[cur]);
            --remaining;
            break;
          }
        }
      }
    }
    return {best, std::move(path)};
  }

 private:
  int local_of(Vertex v, int nl) const {
    if (v.side == Side::Left) {
      auto it = std::lower_bound(ids_.begin(), ids_.begin() + nl, v);
      return static_cast<int>(it - ids_.begin());
    }
    auto it = std::lower_bound(ids_.begin() + nl, ids_.end(), v);
    return static_cast<int>(it - ids_.begin());
  }

  PathBudget budget_;
  int nv_ = 0;
  std::vector<Vertex> ids_;
  std::vector<std::uint32_t> adj_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace detail

struct PathResult {
  int length = 0;  // vertices on the path, 0 when the colour is unused
  std::vector<Vertex> path;
};

inline PathResult longest_monochromatic_path(const Coloring& c, Color col,
                                             const PathBudget& budget = {}) {
  PathResult best;
  for (const Component& comp : components(c, col)) {
    detail::ComponentPathSearch search(comp, budget);
    auto [len, path] = search.longest_path();
    if (len > best.length) {
      best.length = len;
      best.path = std::move(path);
    }
  }
  return best;
}

struct CycleResult {
  bool found = false;
  std::vector<Vertex> cycle;  // closed walk, length vertices, when found
};

namespace detail {

class ComponentCycleSearch {
 public:
  ComponentCycleSearch(const Component& comp, int length,
                       const PathBudget& budget)
      : length_(length), budget_(budget) {
    nl_ = static_cast<int>(comp.left_vertices.size());
    int nr = static_cast<int>(comp.right_vertices.size());
    nv_ = nl_ + nr;
    if (nv_ > budget.max_component_vertices)
      throw budget_exceeded_error(
          "even cycle: component too large for exact search");
    ids_.reserve(nv_);
    for (int v : comp.left_vertices) ids_.push_back(left_vertex(v));
    for (int v : comp.right_vertices) ids_.push_back(right_vertex(v));
    adj_.assign(nv_, 0);
    for (const Edge& e : comp.edges) {
      int u = static_cast<int>(std::lower_bound(ids_.begin(),
                                                ids_.begin() + nl_,
                                                left_vertex(e.left)) -
                               ids_.begin());
      int v = static_cast<int>(std::lower_bound(ids_.begin() + nl_, ids_.end(),
                                                right_vertex(e.right)) -
                               ids_.begin());
      adj_[u] |= 1u << v;
      adj_[v] |= 1u << u;
    }
  }

  // A cycle is canonicalised by its smallest local vertex: start there and
  // allow only larger vertices elsewhere, which visits each cycle once.
  bool find(std::vector<Vertex>* out) {
    if (2 * std::min(nl_, nv_ - nl_) < length_) return false;
    for (int s = 0; s < nv_; ++s) {
      stack_.clear();
      stack_.push_back(s);
      if (dfs(s, s, 1u << s)) {
        out->clear();
        for (int v : stack_) out->push_back(ids_[v]);
        return true;
      }
    }
    return false;
  }

 private:
  bool dfs(int start, int cur, std::uint32_t visited) {
    if (++nodes_ > budget_.max_states)
      throw budget_exceeded_error("even cycle: node budget exceeded");
    if (static_cast<int>(stack_.size()) == length_)
      return (adj_[cur] >> start) & 1u;
    std::uint32_t next = adj_[cur] & ~visited;
    while (next) {
      int w = __builtin_ctz(next);
      next &= next - 1;
      if (w < start) continue;  // canonical: start is the smallest vertex
      stack_.push_back(w);
      if (dfs(start, w, visited | (1u << w))) return true;
      stack_.pop_back();
    }
    return false;
  }

  int length_;
  PathBudget budget_;
  int nl_ = 0, nv_ = 0;
  std::vector<Vertex> ids_;
  std::vector<std::uint32_t> adj_;
  std::vector<int> stack_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Exact decision: does colour col span a cycle on exactly `length` vertices?
// length must be even and >= 4 (odd cycles cannot occur in bipartite graphs).
inline CycleResult has_even_cycle(const Coloring& c, Color col, int length,
                                  const PathBudget& budget = {}) {
  if (length < 4 || length % 2 != 0)
    throw std::invalid_argument("has_even_cycle: length must be even and >= 4");
  CycleResult result;
  for (const Component& comp : components(c, col)) {
    if (comp.order() < length) continue;
    detail::ComponentCycleSearch search(comp, length, budget);
    if (search.find(&result.cycle)) {
      result.found = true;
      return result;
    }
  }
  return result;
}

namespace detail {

// Prune state for the two-colour path search: per colour a rollback
// union-find for component orders plus bitmask adjacency. After an edge is
// added, any new path of >= th vertices must pass through it (everything
// else was already present and below threshold), so only through-edge paths
// are searched, with early exit.
class PathPruner {
 public:
  PathPruner(int n, int th_vertices)
      : n_(n), th_(th_vertices) {
    for (auto& pc : pc_) {
      pc.parent.resize(2 * n);
      pc.cnt.assign(2 * n, 1);
      for (int x = 0; x < 2 * n; ++x) pc.parent[x] = static_cast<std::uint32_t>(x);
      pc.adj_left.assign(n, 0);
      pc.adj_right.assign(n, 0);
    }
  }

  std::size_t mark() const { return journal_.mark(); }
  void rollback(std::size_t m) { journal_.rollback(m); }

  bool push(int color, int i, int j) {
    PerColor& pc = pc_[color];
    journal_.set(pc.adj_left[i], pc.adj_left[i] | (1u << j));
    journal_.set(pc.adj_right[j], pc.adj_right[j] | (1u << i));
    std::uint32_t ra = find(pc, static_cast<std::uint32_t>(i));
    std::uint32_t rb = find(pc, static_cast<std::uint32_t>(n_ + j));
    std::uint32_t order;
    if (ra == rb) {
      order = pc.cnt[ra];
    } else {
      if (pc.cnt[ra] < pc.cnt[rb]) std::swap(ra, rb);
      journal_.set(pc.parent[rb], ra);
      journal_.set(pc.cnt[ra], pc.cnt[ra] + pc.cnt[rb]);
      order = pc.cnt[ra];
    }
    if (static_cast<int>(order) < th_) return false;
    return path_through(pc, i, j);
  }

 private:
  struct PerColor {
    std::vector<std::uint32_t> parent, cnt;
    std::vector<std::uint32_t> adj_left;   // left i -> rights mask
    std::vector<std::uint32_t> adj_right;  // right j -> lefts mask
  };

  static std::uint32_t find(const PerColor& pc, std::uint32_t x) {
    while (pc.parent[x] != x) x = pc.parent[x];
    return x;
  }

  // Vertex ids: left i -> i, right j -> n_ + j; visited is a 64-bit mask.
  std::uint64_t bit(int vertex) const { return 1ull << vertex; }

  std::uint32_t neighbours(const PerColor& pc, int vertex) const {
    return vertex < n_ ? pc.adj_left[vertex] : pc.adj_right[vertex - n_];
  }

  bool arm2(const PerColor& pc, int cur, std::uint64_t visited, int total) {
    if (total >= th_) return true;
    std::uint32_t next = neighbours(pc, cur);
    bool cur_is_left = cur < n_;
    while (next) {
      int k = __builtin_ctz(next);
      next &= next - 1;
      int w = cur_is_left ? n_ + k : k;
      if (visited & bit(w)) continue;
      if (arm2(pc, w, visited | bit(w), total + 1)) return true;
    }
    return false;
  }

  bool arm1(const PerColor& pc, int cur, std::uint64_t visited, int len1,
            int jv) {
    if (arm2(pc, jv, visited, len1 + 2)) return true;
    std::uint32_t next = neighbours(pc, cur);
    bool cur_is_left = cur < n_;
    while (next) {
      int k = __builtin_ctz(next);
      next &= next - 1;
      int w = cur_is_left ? n_ + k : k;
      if (visited & bit(w)) continue;
      if (arm1(pc, w, visited | bit(w), len1 + 1, jv)) return true;
    }
    return false;
  }

  bool path_through(const PerColor& pc, int i, int j) {
    if (th_ <= 2) return true;
    int iv = i, jv = n_ + j;
    return arm1(pc, iv, bit(iv) | bit(jv), 0, jv);
  }

  int n_;
  int th_;
  std::array<PerColor, 2> pc_;
  UndoJournal journal_;
};

}  // namespace detail

// Smallest N <= n_max such that every red/blue colouring of K_{N,N} has a
// monochromatic path on n_path vertices; same engine and symmetry breaking
// as the connected-matching search, with the path predicate instead.
inline RamseyResult two_colour_path_ramsey(int n_path, int n_max,
                                           const Budget& budget = {}) {
  if (n_path < 2)
    throw std::invalid_argument("two_colour_path_ramsey: n_path must be >= 2");
  if (n_max < 1)
    throw std::invalid_argument("two_colour_path_ramsey: n_max must be >= 1");

  RamseyResult result;
  int best_witness_n = 0;
  for (int n = 1; n <= n_max; ++n) {
    detail::EngineLimits limits{budget.max_nodes, budget.max_seconds,
                                budget.threads};
    auto engine_result = detail::run_avoid_search(
        n, 2, {0, 0, 0}, [&] { return detail::PathPruner(n, n_path); },
        limits);

    SearchOutcome o;
    o.status = detail::to_public_status(engine_result.status);
    o.nodes_explored = engine_result.nodes;
    o.elapsed_s = engine_result.elapsed_s;
    if (engine_result.status == detail::EngineStatus::WitnessFound) {
      // Engine colour ids 0/1 map to Red/Blue.
      std::vector<cell_t> cells = engine_result.witness;
      for (cell_t& v : cells)
        if (v == 1) v = static_cast<cell_t>(Color::Blue);
      Coloring witness(n, n, std::move(cells));
      for (Color col : {Color::Red, Color::Blue})
        if (longest_monochromatic_path(witness, col).length >= n_path)
          throw std::logic_error(
              "two_colour_path_ramsey: witness failed re-verification");
      o.witness = std::move(witness);
      best_witness_n = n;
      result.witness = o.witness;
    }
    bool refuted = o.status == SearchStatus::Refuted;
    result.per_n.emplace_back(n, std::move(o));
    if (refuted) {
      result.upper_bound = n;
      break;
    }
  }
  result.lower_bound = best_witness_n + 1;
  if (result.upper_bound && *result.upper_bound == result.lower_bound)
    result.value = result.upper_bound;
  return result;
}

}  // namespace bramsey
