#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "bramsey/coloring.hpp"
#include "bramsey/thresholds.hpp"

namespace bramsey {

// Generators for the extremal colorings used as lower-bound witnesses, plus
// the thresholds each one avoids (claimed_avoidance_*). Block labels in
// diagnostics are 1-based to match the usual (1,1), (2,1), ... notation;
// code indexes blocks from 0.

// Complete N x N coloring, N = a1+a2+a3: the left side splits into blocks
// A1, A2, A3 and every edge touching A_i gets colour i (A1 red, A2 green,
// A3 blue). Colour i then spans the single component A_i x Right with
// matching number a_i, so the coloring has no (a_i+1)-connected matching in
// colour i.
inline Coloring example1(int a1, int a2, int a3) {
  if (a1 < 0 || a2 < 0 || a3 < 0)
    throw std::invalid_argument("example1: negative block size");
  BlockSpec spec;
  spec.left_blocks = {a1, a2, a3};
  spec.right_blocks = {a1 + a2 + a3};
  spec.color_table[{0, 0}] = Color::Red;
  spec.color_table[{1, 0}] = Color::Green;
  spec.color_table[{2, 0}] = Color::Blue;
  return new_from_blocks(spec);
}

inline Thresholds claimed_avoidance_example1(int a1, int a2, int a3) {
  return Thresholds{a1 + 1, a2 + 1, a3 + 1};
}

// Complete n x n coloring with n = k+2l+t, t = min(k-l, 2l-k), requiring
// k >= l >= k/2. Left blocks A1..A5 of sizes (l, k-l+t, l, k-l+t, 2l-k-t),
// right blocks B1..B3 of sizes (k, k, 2l-k+t). Block pairs (1-based):
//   red   (1,1) (2,1) (3,2) (4,2) (5,3)
//   blue  (1,2) (2,3) (3,3) (4,1) (5,1)
//   green (1,3) (2,2) (3,1) (4,3) (5,2)
// Every red component has at most k vertices on a side and every green or
// blue component at most l, so the coloring avoids (k+1, l+1, l+1).
inline Coloring lemma6_coloring(int k, int l) {
  if (l < 1 || k < l || 2 * l < k)
    throw std::invalid_argument("lemma6_coloring: need k >= l >= k/2, l >= 1");
  int t = std::min(k - l, 2 * l - k);
  BlockSpec spec;
  spec.left_blocks = {l, k - l + t, l, k - l + t, 2 * l - k - t};
  spec.right_blocks = {k, k, 2 * l - k + t};
  auto red = Color::Red, blue = Color::Blue, green = Color::Green;
  spec.color_table[{0, 0}] = red;
  spec.color_table[{1, 0}] = red;
  spec.color_table[{2, 1}] = red;
  spec.color_table[{3, 1}] = red;
  spec.color_table[{4, 2}] = red;
  spec.color_table[{0, 1}] = blue;
  spec.color_table[{1, 2}] = blue;
  spec.color_table[{2, 2}] = blue;
  spec.color_table[{3, 0}] = blue;
  spec.color_table[{4, 0}] = blue;
  spec.color_table[{0, 2}] = green;
  spec.color_table[{1, 1}] = green;
  spec.color_table[{2, 0}] = green;
  spec.color_table[{3, 2}] = green;
  spec.color_table[{4, 1}] = green;
  return new_from_blocks(spec);
}

inline int lemma6_side(int k, int l) {
  return k + 2 * l + std::min(k - l, 2 * l - k);
}

inline Thresholds claimed_avoidance_lemma6(int k, int l) {
  return Thresholds{k + 1, l + 1, l + 1};
}

// Complete N x N coloring with N = 3k-3: |A_i| = k-1 on the left,
// b1+b2+b3 = N on the right with b3 <= k-1. A1-B1 and A2-B2 edges are red,
// A1-B2 and A2-B1 blue, A3-(B1 u B2) and (A1 u A2)-B3 green, and the
// A3 x B3 cells come from rb_pattern (row-major, Red or Blue only). No
// choice of pattern creates a monochromatic k-connected matching.
inline Coloring stability_example(int k, int b1, int b2, int b3,
                                  const std::vector<Color>& rb_pattern) {
  if (k < 1) throw std::invalid_argument("stability_example: k must be >= 1");
  int n = 3 * k - 3;
  if (b1 < 0 || b2 < 0 || b3 < 0 || b1 + b2 + b3 != n)
    throw std::invalid_argument("stability_example: b1+b2+b3 must be 3k-3");
  if (b3 > k - 1)
    throw std::invalid_argument("stability_example: b3 must be <= k-1");
  int a = k - 1;
  if (rb_pattern.size() != static_cast<std::size_t>(a) * b3)
    throw std::invalid_argument("stability_example: pattern must have |A3|*|B3| entries");
  for (Color c : rb_pattern)
    if (c == Color::Green)
      throw std::invalid_argument("stability_example: pattern entries must be red or blue");

  std::vector<cell_t> cells(static_cast<std::size_t>(n) * n, absent_cell);
  auto set = [&](int i, int j, Color c) {
    cells[static_cast<std::size_t>(i) * n + j] = cell_of(c);
  };
  for (int i = 0; i < n; ++i) {
    int ablock = i / a;  // 0,1,2 for A1,A2,A3
    for (int j = 0; j < n; ++j) {
      int bblock = j < b1 ? 0 : (j < b1 + b2 ? 1 : 2);
      if (ablock == 2 && bblock == 2) {
        set(i, j, rb_pattern[static_cast<std::size_t>(i - 2 * a) * b3 + (j - b1 - b2)]);
      } else if (ablock == 2 || bblock == 2) {
        set(i, j, Color::Green);
      } else if (ablock == bblock) {
        set(i, j, Color::Red);
      } else {
        set(i, j, Color::Blue);
      }
    }
  }
  return Coloring(n, n, std::move(cells));
}

inline Thresholds claimed_avoidance_stability(int k) {
  return Thresholds{k, k, k};
}

}  // namespace bramsey
