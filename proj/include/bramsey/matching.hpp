#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <queue>
#include <vector>

#include "bramsey/coloring.hpp"

namespace bramsey {

// A maximal connected piece of one colour's subgraph. Produced by
// components(); can also be built directly from an edge list to run the
// matching machinery on arbitrary bipartite subgraphs (the cover routines
// only need an edge set, connectivity is required just where documented).
struct Component {
  Color color = Color::Red;
  std::vector<int> left_vertices;   // ascending original indices
  std::vector<int> right_vertices;  // ascending original indices
  std::vector<Edge> edges;          // lexicographic (left, right)

  int order() const {
    return static_cast<int>(left_vertices.size() + right_vertices.size());
  }
};

using Matching = std::vector<Edge>;

enum class ComponentType { TypeL, TypeR, Unspecified, NotConnectedToBothSides };

inline const char* component_type_name(ComponentType t) {
  switch (t) {
    case ComponentType::TypeL: return "L";
    case ComponentType::TypeR: return "R";
    case ComponentType::Unspecified: return "unspecified";
    case ComponentType::NotConnectedToBothSides: return "not-connected-to-both-sides";
  }
  return "?";
}

struct CoverReport {
  int matching_number = 0;
  std::vector<Vertex> min_cover;       // |min_cover| == matching_number
  std::vector<Vertex> cover_vertices;  // union of all minimum covers
  ComponentType type = ComponentType::NotConnectedToBothSides;
};

inline Component component_from_edges(Color color, std::vector<Edge> edges) {
  Component comp;
  comp.color = color;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  comp.edges = std::move(edges);
  for (const Edge& e : comp.edges) {
    comp.left_vertices.push_back(e.left);
    comp.right_vertices.push_back(e.right);
  }
  auto dedupe = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(comp.left_vertices);
  dedupe(comp.right_vertices);
  return comp;
}

// Connected components of one colour's subgraph, ordered by their smallest
// contained vertex (lefts before rights). Vertices with no edge of the
// colour do not appear.
inline std::vector<Component> components(const Coloring& c, Color col) {
  int nl = c.n_left(), nr = c.n_right();
  std::vector<std::vector<int>> ladj(nl), radj(nr);
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j)
      if (c.at(i, j) == col) {
        ladj[i].push_back(j);
        radj[j].push_back(i);
      }

  std::vector<Component> result;
  std::vector<bool> lseen(nl, false), rseen(nr, false);
  for (int start = 0; start < nl; ++start) {
    if (lseen[start] || ladj[start].empty()) continue;
    Component comp;
    comp.color = col;
    std::queue<Vertex> q;
    q.push(left_vertex(start));
    lseen[start] = true;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      if (v.side == Side::Left) {
        comp.left_vertices.push_back(v.index);
        for (int j : ladj[v.index]) {
          comp.edges.push_back(Edge{v.index, j});
          if (!rseen[j]) {
            rseen[j] = true;
            q.push(right_vertex(j));
          }
        }
      } else {
        comp.right_vertices.push_back(v.index);
        for (int i : radj[v.index])
          if (!lseen[i]) {
            lseen[i] = true;
            q.push(left_vertex(i));
          }
      }
    }
    std::sort(comp.left_vertices.begin(), comp.left_vertices.end());
    std::sort(comp.right_vertices.begin(), comp.right_vertices.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    result.push_back(std::move(comp));
  }
  return result;
}

namespace detail {

// Component compacted to local indices, plus the Hopcroft-Karp state.
struct CompactBigraph {
  int nl = 0, nr = 0;
  std::vector<std::vector<int>> adj;  // left local -> right locals, ascending
  std::vector<int> left_ids, right_ids;

  explicit CompactBigraph(const Component& comp) {
    left_ids = comp.left_vertices;
    right_ids = comp.right_vertices;
    nl = static_cast<int>(left_ids.size());
    nr = static_cast<int>(right_ids.size());
    adj.assign(nl, {});
    for (const Edge& e : comp.edges) {
      int u = static_cast<int>(std::lower_bound(left_ids.begin(), left_ids.end(),
                                                e.left) -
                               left_ids.begin());
      int v = static_cast<int>(std::lower_bound(right_ids.begin(),
                                                right_ids.end(), e.right) -
                               right_ids.begin());
      adj[u].push_back(v);
    }
  }
};

// Hopcroft-Karp. Deterministic: BFS layering and DFS both scan vertices and
// adjacency in ascending order, so the returned pairing depends only on the
// component.
struct HopcroftKarp {
  static constexpr int nil = -1;
  const CompactBigraph& g;
  std::vector<int> pair_left, pair_right, dist;

  explicit HopcroftKarp(const CompactBigraph& graph)
      : g(graph), pair_left(g.nl, nil), pair_right(g.nr, nil), dist(g.nl, 0) {}

  bool bfs() {
    std::queue<int> q;
    const int inf = g.nl + g.nr + 1;
    int layer = inf;
    for (int u = 0; u < g.nl; ++u) {
      if (pair_left[u] == nil) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = inf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (dist[u] >= layer) continue;
      for (int v : g.adj[u]) {
        int w = pair_right[v];
        if (w == nil) {
          layer = dist[u] + 1;
        } else if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return layer != inf;
  }

  bool dfs(int u) {
    for (int v : g.adj[u]) {
      int w = pair_right[v];
      if (w == nil || (dist[w] == dist[u] + 1 && dfs(w))) {
        pair_left[u] = v;
        pair_right[v] = u;
        return true;
      }
    }
    dist[u] = g.nl + g.nr + 1;
    return false;
  }

  int run() {
    int size = 0;
    while (bfs())
      for (int u = 0; u < g.nl; ++u)
        if (pair_left[u] == nil && dfs(u)) ++size;
    return size;
  }
};

}  // namespace detail

// Maximum matching of a component, exact via augmenting paths.
inline Matching max_matching(const Component& comp) {
  detail::CompactBigraph g(comp);
  detail::HopcroftKarp hk(g);
  hk.run();
  Matching m;
  for (int u = 0; u < g.nl; ++u)
    if (hk.pair_left[u] != detail::HopcroftKarp::nil)
      m.push_back(Edge{g.left_ids[u], g.right_ids[hk.pair_left[u]]});
  return m;
}

inline int matching_number(const Component& comp) {
  detail::CompactBigraph g(comp);
  return detail::HopcroftKarp(g).run();
}

// Minimum vertex cover via the alternating-reachability construction from a
// maximum matching: Z = vertices reachable from unmatched lefts along
// non-matching edges left->right and matching edges right->left; the cover is
// (L \ Z) u (R n Z). Deterministic given max_matching's output.
inline std::vector<Vertex> min_vertex_cover(const Component& comp) {
  detail::CompactBigraph g(comp);
  detail::HopcroftKarp hk(g);
  hk.run();

  std::vector<bool> lz(g.nl, false), rz(g.nr, false);
  std::queue<int> q;
  for (int u = 0; u < g.nl; ++u)
    if (hk.pair_left[u] == detail::HopcroftKarp::nil) {
      lz[u] = true;
      q.push(u);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.adj[u]) {
      if (hk.pair_left[u] == v || rz[v]) continue;
      rz[v] = true;
      int w = hk.pair_right[v];
      if (w != detail::HopcroftKarp::nil && !lz[w]) {
        lz[w] = true;
        q.push(w);
      }
    }
  }

  std::vector<Vertex> cover;
  for (int u = 0; u < g.nl; ++u)
    if (!lz[u]) cover.push_back(left_vertex(g.left_ids[u]));
  for (int v = 0; v < g.nr; ++v)
    if (rz[v]) cover.push_back(right_vertex(g.right_ids[v]));
  return cover;
}

// Component with one vertex (and its incident edges) removed.
inline Component remove_vertex(const Component& comp, Vertex v) {
  std::vector<Edge> kept;
  kept.reserve(comp.edges.size());
  for (const Edge& e : comp.edges) {
    if (v.side == Side::Left && e.left == v.index) continue;
    if (v.side == Side::Right && e.right == v.index) continue;
    kept.push_back(e);
  }
  return component_from_edges(comp.color, std::move(kept));
}

// Cover vertices of a connected component: v is one iff some minimum cover
// contains it, iff removing v drops the matching number by one (bipartite:
// cover number equals matching number and drops by at most one per vertex).
// Probes each vertex with a fresh matching computation.
inline std::vector<Vertex> cover_vertices(const Component& comp) {
  int nu = matching_number(comp);
  std::vector<Vertex> result;
  auto probe = [&](Vertex v) {
    if (matching_number(remove_vertex(comp, v)) == nu - 1) result.push_back(v);
  };
  for (int u : comp.left_vertices) probe(left_vertex(u));
  for (int v : comp.right_vertices) probe(right_vertex(v));
  return result;
}

// TypeL: cover vertices only on the left; TypeR symmetric; Unspecified when
// both sides hold one.
inline ComponentType classify_cover_vertices(const std::vector<Vertex>& cv) {
  bool has_left = false, has_right = false;
  for (const Vertex& v : cv) (v.side == Side::Left ? has_left : has_right) = true;
  if (has_left && has_right) return ComponentType::Unspecified;
  if (has_left) return ComponentType::TypeL;
  if (has_right) return ComponentType::TypeR;
  return ComponentType::NotConnectedToBothSides;
}

inline ComponentType component_type(const Component& comp) {
  return classify_cover_vertices(cover_vertices(comp));
}

inline CoverReport cover_report(const Component& comp) {
  CoverReport r;
  r.matching_number = matching_number(comp);
  r.min_cover = min_vertex_cover(comp);
  r.cover_vertices = cover_vertices(comp);
  r.type = classify_cover_vertices(r.cover_vertices);
  return r;
}

// Largest monochromatic connected matching of one colour: the component with
// the largest matching number (ties by component order) and one of its
// maximum matchings. Size 0 with no component when the colour is unused.
struct ConnectedMatchingResult {
  int size = 0;
  std::optional<Component> component;
  Matching matching;
};

inline ConnectedMatchingResult largest_connected_matching(const Coloring& c,
                                                          Color col) {
  ConnectedMatchingResult best;
  for (Component& comp : components(c, col)) {
    int nu = matching_number(comp);
    if (nu > best.size) {
      best.size = nu;
      best.component = std::move(comp);
    }
  }
  if (best.component) best.matching = max_matching(*best.component);
  return best;
}

// True iff the coloring has a red k-, green l-, or blue m-connected matching.
// A threshold of 0 is vacuously met (callers normally use >= 1); colours are
// checked in Red, Green, Blue order and the first hit provides the witness.
struct ThresholdCheck {
  bool met = false;
  std::optional<Color> color;
  Matching witness;
};

inline ThresholdCheck meets_thresholds(const Coloring& c, int red, int green,
                                       int blue) {
  const int ths[3] = {red, green, blue};
  for (Color col : all_colors) {
    int th = ths[static_cast<int>(col)];
    if (th < 0) throw std::invalid_argument("meets_thresholds: negative threshold");
    if (th == 0) return ThresholdCheck{true, col, {}};
    auto cm = largest_connected_matching(c, col);
    if (cm.size >= th) return ThresholdCheck{true, col, std::move(cm.matching)};
  }
  return ThresholdCheck{};
}

}  // namespace bramsey
