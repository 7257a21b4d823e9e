#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bramsey/coloring.hpp"
#include "bramsey/matching.hpp"
#include "bramsey/search_engine.hpp"
#include "bramsey/thresholds.hpp"

namespace bramsey {

struct Budget {
  std::uint64_t max_nodes = 100'000'000;  // per n
  double max_seconds = 600.0;             // per n
  int threads = 0;                        // 0 = hardware concurrency
};

enum class SearchStatus { WitnessFound, Refuted, BudgetExhausted };

inline const char* search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::WitnessFound: return "witness_found";
    case SearchStatus::Refuted: return "refuted";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

struct SearchOutcome {
  SearchStatus status = SearchStatus::Refuted;
  std::optional<Coloring> witness;
  std::uint64_t nodes_explored = 0;
  double elapsed_s = 0.0;
};

// True iff the complete coloring has no red k-, green l- and blue
// m-connected matching.
inline bool avoids(const Coloring& c, const Thresholds& th) {
  if (!c.is_complete())
    throw std::invalid_argument("avoids: coloring must be complete");
  return !meets_thresholds(c, th.red, th.green, th.blue).met;
}

namespace detail {

// Prune state for the connected-matching search. Per colour: a rollback
// union-find over the 2n vertices annotated with an interval [lo, hi]
// bounding the component's matching number, plus bitmask adjacency rows.
// An edge merge gives [lo_a+lo_b, hi_a+hi_b+1] (one extra edge grows a
// matching by at most one); the exact value is recomputed, by augmenting
// paths restricted to the component, only when hi reaches the colour's
// threshold. Supports n up to 32.
class CmPruner {
 public:
  CmPruner(int n, const Thresholds& th)
      : n_(n), th_{th.red, th.green, th.blue}, match_right_(n, -1) {
    if (n > 32) throw std::invalid_argument("CmPruner: n too large for bitmask rows");
    for (auto& pc : pc_) {
      pc.parent.resize(2 * n);
      pc.lcnt.assign(2 * n, 0);
      pc.rcnt.assign(2 * n, 0);
      pc.lo.assign(2 * n, 0);
      pc.hi.assign(2 * n, 0);
      pc.ring.resize(2 * n);
      pc.adj.assign(n, 0);
      for (int x = 0; x < 2 * n; ++x) {
        pc.parent[x] = static_cast<std::uint32_t>(x);
        pc.ring[x] = static_cast<std::uint32_t>(x);
        (x < n ? pc.lcnt : pc.rcnt)[x] = 1;
      }
    }
  }

  std::size_t mark() const { return journal_.mark(); }
  void rollback(std::size_t m) { journal_.rollback(m); }

  bool push(int color, int i, int j) {
    PerColor& pc = pc_[color];
    int th = th_[color];
    journal_.set(pc.adj[i], pc.adj[i] | (1u << j));

    std::uint32_t ra = find(pc, static_cast<std::uint32_t>(i));
    std::uint32_t rb = find(pc, static_cast<std::uint32_t>(n_ + j));
    std::uint32_t root;
    if (ra == rb) {
      std::uint32_t cap = std::min(pc.lcnt[ra], pc.rcnt[ra]);
      journal_.set(pc.hi[ra], std::min(pc.hi[ra] + 1, cap));
      root = ra;
    } else {
      if (pc.lcnt[ra] + pc.rcnt[ra] < pc.lcnt[rb] + pc.rcnt[rb])
        std::swap(ra, rb);
      journal_.set(pc.parent[rb], ra);
      journal_.set(pc.lcnt[ra], pc.lcnt[ra] + pc.lcnt[rb]);
      journal_.set(pc.rcnt[ra], pc.rcnt[ra] + pc.rcnt[rb]);
      std::uint32_t cap = std::min(pc.lcnt[ra], pc.rcnt[ra]);
      journal_.set(pc.lo[ra], pc.lo[ra] + pc.lo[rb]);
      journal_.set(pc.hi[ra], std::min(pc.hi[ra] + pc.hi[rb] + 1, cap));
      std::uint32_t tmp = pc.ring[ra];
      journal_.set(pc.ring[ra], pc.ring[rb]);
      journal_.set(pc.ring[rb], tmp);
      root = ra;
    }
    if (static_cast<int>(pc.lo[root]) >= th) return true;
    if (static_cast<int>(pc.hi[root]) >= th) {
      int nu = exact_matching_number(pc, root, th);
      if (nu >= th) return true;
      journal_.set(pc.lo[root], static_cast<std::uint32_t>(nu));
      journal_.set(pc.hi[root], static_cast<std::uint32_t>(nu));
    }
    return false;
  }

 private:
  struct PerColor {
    std::vector<std::uint32_t> parent, lcnt, rcnt, lo, hi, ring;
    std::vector<std::uint32_t> adj;  // left i -> bitmask of right neighbours
  };

  static std::uint32_t find(const PerColor& pc, std::uint32_t x) {
    while (pc.parent[x] != x) x = pc.parent[x];
    return x;
  }

  // Kuhn's augmenting paths over the component's members, early exit at
  // `limit` matched edges.
  int exact_matching_number(const PerColor& pc, std::uint32_t root,
                            int limit) {
    comp_lefts_.clear();
    std::uint32_t x = root;
    do {
      if (static_cast<int>(x) < n_)
        comp_lefts_.push_back(static_cast<int>(x));
      else
        match_right_[x - n_] = -1;
      x = pc.ring[x];
    } while (x != root);

    int matched = 0;
    for (int u : comp_lefts_) {
      std::uint32_t visited = 0;
      if (try_augment(pc, u, visited)) {
        if (++matched >= limit) break;
      }
    }
    return matched;
  }

  bool try_augment(const PerColor& pc, int u, std::uint32_t& visited) {
    std::uint32_t candidates = pc.adj[u] & ~visited;
    while (candidates) {
      int j = __builtin_ctz(candidates);
      candidates &= candidates - 1;
      visited |= 1u << j;
      if (match_right_[j] < 0 || try_augment(pc, match_right_[j], visited)) {
        match_right_[j] = u;
        return true;
      }
    }
    return false;
  }

  int n_;
  std::array<int, 3> th_;
  std::array<PerColor, 3> pc_;
  UndoJournal journal_;
  std::vector<int> match_right_;
  std::vector<int> comp_lefts_;
};

inline std::array<int, 3> threshold_classes(const Thresholds& th) {
  std::array<int, 3> cls{0, 0, 0};
  cls[1] = th.green == th.red ? 0 : 1;
  if (th.blue == th.red)
    cls[2] = 0;
  else if (th.blue == th.green)
    cls[2] = cls[1];
  else
    cls[2] = 2;
  return cls;
}

inline SearchStatus to_public_status(EngineStatus s) {
  switch (s) {
    case EngineStatus::WitnessFound: return SearchStatus::WitnessFound;
    case EngineStatus::Refuted: return SearchStatus::Refuted;
    case EngineStatus::BudgetExhausted: return SearchStatus::BudgetExhausted;
  }
  return SearchStatus::BudgetExhausted;
}

}  // namespace detail

// DFS over the cells of K_{n,n} for a coloring avoiding the thresholds.
// Refuted is reported only after full exploration of the (symmetry-reduced)
// tree; running out of budget is a first-class status, never Refuted.
inline SearchOutcome find_avoiding(int n, const Thresholds& th,
                                   const Budget& budget = {}) {
  if (n < 1) throw std::invalid_argument("find_avoiding: n must be >= 1");
  detail::EngineLimits limits{budget.max_nodes, budget.max_seconds,
                              budget.threads};
  auto result = detail::run_avoid_search(
      n, 3, detail::threshold_classes(th),
      [&] { return detail::CmPruner(n, th); }, limits);

  SearchOutcome out;
  out.status = detail::to_public_status(result.status);
  out.nodes_explored = result.nodes;
  out.elapsed_s = result.elapsed_s;
  if (result.status == detail::EngineStatus::WitnessFound) {
    Coloring witness(n, n, std::move(result.witness));
    if (!avoids(witness, th))
      throw std::logic_error("find_avoiding: witness failed re-verification");
    out.witness = std::move(witness);
  }
  return out;
}

// r(k,l,m) bracketing by upward search. Existence of an avoiding coloring
// is monotone downward in n (subcolorings stay avoiding), so a witness at n
// gives lower_bound n+1 and a refutation at n gives upper_bound n.
struct RamseyResult {
  std::optional<int> value;
  int lower_bound = 1;                // r >= lower_bound
  std::optional<int> upper_bound;     // r <= upper_bound, when refuted
  std::optional<Coloring> witness;    // avoiding coloring at lower_bound-1
  std::vector<std::pair<int, SearchOutcome>> per_n;
};

inline RamseyResult ramsey_value(const Thresholds& th, int n_max,
                                 const Budget& budget = {}) {
  if (n_max < 1) throw std::invalid_argument("ramsey_value: n_max must be >= 1");
  RamseyResult result;
  int best_witness_n = 0;
  for (int n = 1; n <= n_max; ++n) {
    SearchOutcome o = find_avoiding(n, th, budget);
    bool refuted = o.status == SearchStatus::Refuted;
    if (o.status == SearchStatus::WitnessFound) {
      best_witness_n = n;
      result.witness = o.witness;
    }
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

// Piecewise closed form for r(k,l,l); branches tested in order with exact
// rational comparisons.
inline int theorem8_formula(int k, int l) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("theorem8_formula: k, l must be >= 1");
  if (2 * l <= k + 1) return k + 2 * l - 1;  // l <= (k+1)/2
  if (3 * l <= 2 * k) return 4 * l - 2;      // (k+1)/2 < l <= 2k/3
  if (l < k) return 2 * k + l - 2;           // 2k/3 < l < k
  return k + 2 * l - 2;                      // k <= l
}

// Search-vs-formula comparison table. Reporting only: degenerate parameters
// are known to disagree with the closed form and are recorded, not asserted.
struct Theorem8Row {
  int k = 0;
  int l = 0;
  RamseyResult searched;
  int formula = 0;
  std::optional<bool> match;  // empty when the search left an interval
};

inline std::vector<Theorem8Row> compare_with_theorem8(
    int k_max, int l_max, const Budget& budget = {},
    std::optional<int> n_max_override = std::nullopt) {
  std::vector<Theorem8Row> rows;
  for (int k = 1; k <= k_max; ++k)
    for (int l = 1; l <= l_max; ++l) {
      Theorem8Row row;
      row.k = k;
      row.l = l;
      row.formula = theorem8_formula(k, l);
      int n_max = n_max_override ? *n_max_override : row.formula + 1;
      row.searched = ramsey_value(Thresholds(k, l, l), n_max, budget);
      if (row.searched.value)
        row.match = *row.searched.value == row.formula;
      else if (row.formula < row.searched.lower_bound ||
               (row.searched.upper_bound &&
                row.formula > *row.searched.upper_bound))
        row.match = false;
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace bramsey
