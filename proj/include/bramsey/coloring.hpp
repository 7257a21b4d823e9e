#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bramsey {

// Edge colours of a 3-coloured bipartite graph. The declaration order fixes
// the total order Red < Green < Blue used by every canonical form in this
// library (file codes, lex-leader search, colour symmetry breaking).
enum class Color : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

inline constexpr std::array<Color, 3> all_colors = {Color::Red, Color::Green,
                                                    Color::Blue};

inline char color_code(Color c) {
  switch (c) {
    case Color::Red: return 'R';
    case Color::Green: return 'G';
    case Color::Blue: return 'B';
  }
  return '?';
}

inline std::optional<Color> color_from_code(char code) {
  switch (code) {
    case 'R': return Color::Red;
    case 'G': return Color::Green;
    case 'B': return Color::Blue;
    default: return std::nullopt;
  }
}

enum class Side : std::uint8_t { Left = 0, Right = 1 };

// A vertex is identified by (side, index); deletions re-index, so vertex ids
// are only meaningful relative to the coloring they were taken from.
struct Vertex {
  Side side;
  int index;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex left_vertex(int index) { return Vertex{Side::Left, index}; }
inline Vertex right_vertex(int index) { return Vertex{Side::Right, index}; }

// A present edge, as a (left index, right index) pair.
struct Edge {
  int left;
  int right;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Cell entry inside a Coloring: absent or one of the three colours.
// Encoded as int8_t, -1 for absent, otherwise the Color value.
using cell_t = std::int8_t;
inline constexpr cell_t absent_cell = -1;

inline cell_t cell_of(std::optional<Color> c) {
  return c ? static_cast<cell_t>(*c) : absent_cell;
}

// A complete or near-complete 3-coloured bipartite graph stored as a dense
// n_left x n_right cell matrix (row-major by left index). Values are
// immutable after construction; mutating operations return new values, so
// colorings are safe to share across threads.
class Coloring {
 public:
  Coloring(int n_left, int n_right, std::vector<cell_t> cells)
      : n_left_(n_left), n_right_(n_right), cells_(std::move(cells)) {
    if (n_left_ < 0 || n_right_ < 0)
      throw std::invalid_argument("Coloring: negative side size");
    if (cells_.size() != static_cast<std::size_t>(n_left_) * n_right_)
      throw std::invalid_argument("Coloring: cell count does not match sides");
    for (cell_t v : cells_)
      if (v < absent_cell || v > 2)
        throw std::invalid_argument("Coloring: invalid cell value");
  }

  // All cells absent (fill == nullopt) or all one colour.
  static Coloring filled(int n_left, int n_right, std::optional<Color> fill) {
    if (n_left < 0 || n_right < 0)
      throw std::invalid_argument("Coloring: negative side size");
    return Coloring(n_left, n_right,
                    std::vector<cell_t>(static_cast<std::size_t>(n_left) * n_right,
                                        cell_of(fill)));
  }

  int n_left() const { return n_left_; }
  int n_right() const { return n_right_; }

  cell_t cell(int left, int right) const {
    check_range(left, right);
    return cells_[static_cast<std::size_t>(left) * n_right_ + right];
  }

  std::optional<Color> at(int left, int right) const {
    cell_t v = cell(left, right);
    return v == absent_cell ? std::nullopt
                            : std::optional<Color>(static_cast<Color>(v));
  }

  bool is_absent(int left, int right) const {
    return cell(left, right) == absent_cell;
  }

  bool is_complete() const {
    for (cell_t v : cells_)
      if (v == absent_cell) return false;
    return true;
  }

  int present_count() const {
    int n = 0;
    for (cell_t v : cells_)
      if (v != absent_cell) ++n;
    return n;
  }

  // Degree of a vertex = number of present cells in its row/column.
  int degree(Vertex v) const {
    int bound = v.side == Side::Left ? n_left_ : n_right_;
    if (v.index < 0 || v.index >= bound)
      throw std::out_of_range("Coloring: vertex index out of range");
    int d = 0;
    if (v.side == Side::Left) {
      for (int j = 0; j < n_right_; ++j)
        if (!is_absent(v.index, j)) ++d;
    } else {
      for (int i = 0; i < n_left_; ++i)
        if (!is_absent(i, v.index)) ++d;
    }
    return d;
  }

  // Copy with one cell replaced. Used by tests and the reduction pipeline.
  Coloring with_cell(int left, int right, std::optional<Color> value) const {
    check_range(left, right);
    std::vector<cell_t> cells = cells_;
    cells[static_cast<std::size_t>(left) * n_right_ + right] = cell_of(value);
    return Coloring(n_left_, n_right_, std::move(cells));
  }

  const std::vector<cell_t>& cells() const { return cells_; }

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.n_left_ == b.n_left_ && a.n_right_ == b.n_right_ &&
           a.cells_ == b.cells_;
  }

 private:
  void check_range(int left, int right) const {
    if (left < 0 || left >= n_left_ || right < 0 || right >= n_right_)
      throw std::out_of_range("Coloring: vertex index out of range");
  }

  int n_left_;
  int n_right_;
  std::vector<cell_t> cells_;
};

// Block-structured description of a coloring: ordered block sizes on each
// side and one entry (colour or absent) per block pair.
struct BlockSpec {
  std::vector<int> left_blocks;
  std::vector<int> right_blocks;
  std::map<std::pair<int, int>, std::optional<Color>> color_table;
};

// Expands a BlockSpec into a dense coloring. Block boundaries are prefix
// sums of the size lists in order; every block pair must have an entry.
inline Coloring new_from_blocks(const BlockSpec& spec) {
  int n_left = 0, n_right = 0;
  for (int s : spec.left_blocks) {
    if (s < 0) throw std::invalid_argument("new_from_blocks: negative block size");
    n_left += s;
  }
  for (int s : spec.right_blocks) {
    if (s < 0) throw std::invalid_argument("new_from_blocks: negative block size");
    n_right += s;
  }
  for (std::size_t bi = 0; bi < spec.left_blocks.size(); ++bi)
    for (std::size_t bj = 0; bj < spec.right_blocks.size(); ++bj)
      if (!spec.color_table.count({static_cast<int>(bi), static_cast<int>(bj)}))
        throw std::invalid_argument("new_from_blocks: missing block pair entry");

  std::vector<cell_t> cells(static_cast<std::size_t>(n_left) * n_right,
                            absent_cell);
  int row0 = 0;
  for (std::size_t bi = 0; bi < spec.left_blocks.size(); ++bi) {
    int col0 = 0;
    for (std::size_t bj = 0; bj < spec.right_blocks.size(); ++bj) {
      cell_t v = cell_of(spec.color_table.at(
          {static_cast<int>(bi), static_cast<int>(bj)}));
      for (int i = 0; i < spec.left_blocks[bi]; ++i)
        for (int j = 0; j < spec.right_blocks[bj]; ++j)
          cells[static_cast<std::size_t>(row0 + i) * n_right + (col0 + j)] = v;
      col0 += spec.right_blocks[bj];
    }
    row0 += spec.left_blocks[bi];
  }
  return Coloring(n_left, n_right, std::move(cells));
}

// New coloring with one vertex removed; indices above it shift down.
inline Coloring delete_vertex(const Coloring& c, Vertex v) {
  if (v.index < 0 ||
      v.index >= (v.side == Side::Left ? c.n_left() : c.n_right()))
    throw std::out_of_range("delete_vertex: vertex out of range");

  int nl = c.n_left() - (v.side == Side::Left ? 1 : 0);
  int nr = c.n_right() - (v.side == Side::Right ? 1 : 0);
  std::vector<cell_t> cells;
  cells.reserve(static_cast<std::size_t>(nl) * nr);
  for (int i = 0; i < c.n_left(); ++i) {
    if (v.side == Side::Left && i == v.index) continue;
    for (int j = 0; j < c.n_right(); ++j) {
      if (v.side == Side::Right && j == v.index) continue;
      cells.push_back(c.cell(i, j));
    }
  }
  return Coloring(nl, nr, std::move(cells));
}

// Keeps the listed vertices (given as keep masks) and returns the induced
// coloring together with old->new index maps (-1 where removed).
struct SubColoring {
  Coloring coloring;
  std::vector<int> left_map;   // old left index -> new, -1 if removed
  std::vector<int> right_map;  // old right index -> new, -1 if removed
};

inline SubColoring induced_subcoloring(const Coloring& c,
                                       const std::vector<bool>& keep_left,
                                       const std::vector<bool>& keep_right) {
  if (keep_left.size() != static_cast<std::size_t>(c.n_left()) ||
      keep_right.size() != static_cast<std::size_t>(c.n_right()))
    throw std::invalid_argument("induced_subcoloring: mask size mismatch");
  std::vector<int> lmap(c.n_left(), -1), rmap(c.n_right(), -1);
  int nl = 0, nr = 0;
  for (int i = 0; i < c.n_left(); ++i)
    if (keep_left[i]) lmap[i] = nl++;
  for (int j = 0; j < c.n_right(); ++j)
    if (keep_right[j]) rmap[j] = nr++;
  std::vector<cell_t> cells(static_cast<std::size_t>(nl) * nr, absent_cell);
  for (int i = 0; i < c.n_left(); ++i) {
    if (lmap[i] < 0) continue;
    for (int j = 0; j < c.n_right(); ++j) {
      if (rmap[j] < 0) continue;
      cells[static_cast<std::size_t>(lmap[i]) * nr + rmap[j]] = c.cell(i, j);
    }
  }
  return SubColoring{Coloring(nl, nr, std::move(cells)), std::move(lmap),
                     std::move(rmap)};
}

}  // namespace bramsey
