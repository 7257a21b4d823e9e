#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "bramsey/coloring.hpp"

// Internal DFS engine shared by the connected-matching search and the
// two-colour path search. Cells of K_{n,n} are assigned row-major; a branch
// is cut when the pruner reports that the partial coloring already meets a
// threshold (all pruning statistics are monotone under adding edges).
//
// Symmetry breaking, relative to the fixed value order of colour ids:
//  - consecutive rows and consecutive columns must be lexicographically
//    non-decreasing (the lex-least matrix of a row/column-permutation orbit
//    satisfies both simultaneously);
//  - colours sharing a class (equal thresholds) must first appear in
//    increasing id order.
// Every orbit under row/column permutations and within-class colour swaps
// keeps its lex-least member, so the pruned search is lossless.

namespace bramsey::detail {

struct EngineLimits {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 600.0;
  int threads = 0;  // 0 = hardware concurrency
};

enum class EngineStatus { WitnessFound, Refuted, BudgetExhausted };

struct EngineResult {
  EngineStatus status = EngineStatus::Refuted;
  std::vector<cell_t> witness;  // colour ids, n*n cells, when found
  std::uint64_t nodes = 0;
  double elapsed_s = 0.0;
};

// Undo log for the pruners' union-find and adjacency state.
struct UndoJournal {
  std::vector<std::pair<std::uint32_t*, std::uint32_t>> log;

  std::size_t mark() const { return log.size(); }

  void set(std::uint32_t& slot, std::uint32_t value) {
    log.emplace_back(&slot, slot);
    slot = value;
  }

  void rollback(std::size_t m) {
    while (log.size() > m) {
      *log.back().first = log.back().second;
      log.pop_back();
    }
  }
};

struct SharedSearchState {
  EngineLimits limits;
  std::chrono::steady_clock::time_point start;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> witness_found{false};
  std::atomic<bool> budget_hit{false};
  std::mutex witness_mutex;
  std::vector<cell_t> witness;

  explicit SharedSearchState(EngineLimits l)
      : limits(l), start(std::chrono::steady_clock::now()) {}

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }

  // Called in batches from the tasks; flips the stop flag on budget.
  void add_nodes(std::uint64_t batch) {
    std::uint64_t total = nodes.fetch_add(batch, std::memory_order_relaxed) + batch;
    if (total > limits.max_nodes || elapsed() > limits.max_seconds) {
      budget_hit.store(true, std::memory_order_relaxed);
      stop.store(true, std::memory_order_relaxed);
    }
  }

  void deliver_witness(const std::vector<cell_t>& grid) {
    std::lock_guard<std::mutex> lock(witness_mutex);
    if (!witness_found.load()) {
      witness = grid;
      witness_found.store(true);
      stop.store(true, std::memory_order_relaxed);
    }
  }
};

template <class Pruner>
class SearchTask {
 public:
  SearchTask(int n, int n_colors, std::array<int, 3> color_class,
             Pruner pruner, SharedSearchState* shared)
      : n_(n),
        n_colors_(n_colors),
        color_class_(color_class),
        pruner_(std::move(pruner)),
        shared_(shared),
        grid_(static_cast<std::size_t>(n) * n, absent_cell),
        col_eq_(n, 1) {}

  // Enumerates the canonical assignments of cells [0, depth) and hands each
  // one to sink. Used to split the forest into independent subtree tasks.
  void collect_prefixes(int depth, std::vector<std::vector<cell_t>>* sink) {
    collect_depth_ = depth;
    prefix_sink_ = sink;
    explore(0, false);
    collect_depth_ = -1;
    prefix_sink_ = nullptr;
  }

  // Replays a previously collected prefix, then explores its subtree.
  void run_from_prefix(const std::vector<cell_t>& prefix) {
    for (std::size_t t = 0; t < prefix.size(); ++t) {
      int i = static_cast<int>(t) / n_, j = static_cast<int>(t) % n_;
      int c = prefix[t];
      bool hit = pruner_.push(c, i, j);
      if (hit) return;  // cannot happen for prefixes produced by collect_prefixes
      grid_[t] = static_cast<cell_t>(c);
      ++color_count_[c];
      if (j > 0) col_eq_[j] = col_eq_[j] && grid_[t - 1] == c;
    }
    // Prefixes cover whole rows, so the next cell starts a fresh row.
    explore(static_cast<int>(prefix.size()), true);
    flush_nodes();
  }

  void run_all() {
    explore(0, false);
    flush_nodes();
  }

 private:
  bool stopped() const {
    return shared_->stop.load(std::memory_order_relaxed);
  }

  void flush_nodes() {
    if (local_nodes_) {
      shared_->add_nodes(local_nodes_);
      local_nodes_ = 0;
    }
  }

  void count_node() {
    if (++local_nodes_ >= 2048) flush_nodes();
  }

  bool canonical_ok(int c, int i, int j, bool row_eq) const {
    if (row_eq && c < grid_[static_cast<std::size_t>(i - 1) * n_ + j])
      return false;
    if (j > 0 && col_eq_[j] &&
        c < grid_[static_cast<std::size_t>(i) * n_ + j - 1])
      return false;
    if (color_count_[c] == 0)
      for (int c2 = 0; c2 < c; ++c2)
        if (color_class_[c2] == color_class_[c] && color_count_[c2] == 0)
          return false;
    return true;
  }

  // row_eq: i >= 1 and rows i-1, i agree on columns [0, j).
  void explore(int t, bool row_eq) {
    if (stopped()) return;
    if (t == collect_depth_) {
      prefix_sink_->emplace_back(grid_.begin(), grid_.begin() + t);
      return;
    }
    if (t == n_ * n_) {
      shared_->deliver_witness(grid_);
      return;
    }
    int i = t / n_, j = t % n_;

    // Balanced-first value order speeds up witness discovery and leaves
    // refutation trees unchanged.
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.begin() + n_colors_, [&](int a, int b) {
      return color_count_[a] != color_count_[b]
                 ? color_count_[a] < color_count_[b]
                 : a < b;
    });

    for (int oi = 0; oi < n_colors_; ++oi) {
      int c = order[oi];
      if (!canonical_ok(c, i, j, row_eq)) continue;
      count_node();
      std::size_t mark = pruner_.mark();
      bool hit = pruner_.push(c, i, j);
      if (!hit) {
        grid_[t] = static_cast<cell_t>(c);
        ++color_count_[c];
        std::uint8_t saved_col = 0;
        if (j > 0) {
          saved_col = col_eq_[j];
          col_eq_[j] = col_eq_[j] &&
                       grid_[static_cast<std::size_t>(t) - 1] == c;
        }
        bool child_row_eq;
        if (j + 1 < n_)
          child_row_eq =
              row_eq && grid_[static_cast<std::size_t>(i - 1) * n_ + j] == c;
        else
          child_row_eq = true;  // next cell opens row i+1
        explore(t + 1, child_row_eq);
        if (j > 0) col_eq_[j] = saved_col;
        --color_count_[c];
        grid_[t] = absent_cell;
      }
      pruner_.rollback(mark);
      if (stopped()) return;
    }
  }

  int n_;
  int n_colors_;
  std::array<int, 3> color_class_;
  Pruner pruner_;
  SharedSearchState* shared_;
  std::vector<cell_t> grid_;
  std::vector<std::uint8_t> col_eq_;
  std::array<int, 3> color_count_{0, 0, 0};
  std::uint64_t local_nodes_ = 0;
  int collect_depth_ = -1;
  std::vector<std::vector<cell_t>>* prefix_sink_ = nullptr;
};

// MakePruner: callable returning a fresh pruner per task. A pruner exposes
//   std::size_t mark();
//   bool push(int color, int left, int right);   // true = threshold hit
//   void rollback(std::size_t mark);
template <class MakePruner>
EngineResult run_avoid_search(int n, int n_colors,
                              std::array<int, 3> color_class,
                              MakePruner make_pruner, EngineLimits limits) {
  SharedSearchState shared(limits);
  EngineResult result;

  int hw = static_cast<int>(std::thread::hardware_concurrency());
  int threads = limits.threads > 0 ? limits.threads : std::max(1, hw);

  if (n == 1 || threads == 1) {
    // Single task; no point splitting at row depth.
    SearchTask<decltype(make_pruner())> task(n, n_colors, color_class,
                                             make_pruner(), &shared);
    task.run_all();
  } else {
    std::vector<std::vector<cell_t>> prefixes;
    {
      SearchTask<decltype(make_pruner())> splitter(n, n_colors, color_class,
                                                   make_pruner(), &shared);
      splitter.collect_prefixes(n, &prefixes);
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (!shared.stop.load(std::memory_order_relaxed)) {
        std::size_t idx = next.fetch_add(1);
        if (idx >= prefixes.size()) break;
        SearchTask<decltype(make_pruner())> task(n, n_colors, color_class,
                                                 make_pruner(), &shared);
        task.run_from_prefix(prefixes[idx]);
      }
    };
    std::vector<std::thread> pool;
    std::size_t workers = std::min(static_cast<std::size_t>(threads),
                                   std::max<std::size_t>(1, prefixes.size()));
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  result.nodes = shared.nodes.load();
  result.elapsed_s = shared.elapsed();
  if (shared.witness_found.load()) {
    result.status = EngineStatus::WitnessFound;
    result.witness = shared.witness;
  } else if (shared.budget_hit.load()) {
    result.status = EngineStatus::BudgetExhausted;
  } else {
    result.status = EngineStatus::Refuted;
  }
  return result;
}

}  // namespace bramsey::detail
