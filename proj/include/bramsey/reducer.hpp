#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bramsey/coloring.hpp"
#include "bramsey/matching.hpp"

namespace bramsey {

// Reduction pipeline: augment a min-degree-deficient 3-coloured bipartite
// graph into a complete one, find a large monochromatic connected matching
// there, and certify that it maps back to a genuine connected matching of
// real edges in the original graph.

inline constexpr int type_space_per_color = 8;  // virtual components per colour
inline constexpr long long nonedge_type_space =
    262144LL;  // 8^6 six-tuple types

// Either a genuine monochromatic component of order >= n or a union of
// components of order < n each, with total order < 2n.
struct VirtualComponent {
  Color color = Color::Red;
  int id = 0;
  bool is_genuine = false;
  std::vector<int> member_components;  // indices into components(c, color)
  std::vector<int> left_vertices;      // ascending
  std::vector<int> right_vertices;     // ascending
  int matching_number = 0;             // within the original coloring
  std::vector<Vertex> chosen_cover;    // minimum cover of the colour-subgraph

  int order() const {
    return static_cast<int>(left_vertices.size() + right_vertices.size());
  }
};

// Greedy partition: genuine components keep their own slot; small ones are
// merged in increasing order of size, closing a union as soon as adding the
// next would reach order 2n. All unions except possibly the last then have
// order >= n.
inline std::vector<VirtualComponent> virtual_components(const Coloring& c,
                                                        Color col, int n) {
  if (n < 1) throw std::invalid_argument("virtual_components: n must be >= 1");
  std::vector<Component> comps = components(c, col);

  std::vector<VirtualComponent> result;
  auto vc_from_members = [&](std::vector<int> members, bool genuine) {
    VirtualComponent vc;
    vc.color = col;
    vc.is_genuine = genuine;
    vc.member_components = std::move(members);
    for (int m : vc.member_components) {
      const Component& comp = comps[m];
      vc.left_vertices.insert(vc.left_vertices.end(),
                              comp.left_vertices.begin(),
                              comp.left_vertices.end());
      vc.right_vertices.insert(vc.right_vertices.end(),
                               comp.right_vertices.begin(),
                               comp.right_vertices.end());
      vc.matching_number += matching_number(comp);
      auto cover = min_vertex_cover(comp);
      vc.chosen_cover.insert(vc.chosen_cover.end(), cover.begin(), cover.end());
    }
    std::sort(vc.left_vertices.begin(), vc.left_vertices.end());
    std::sort(vc.right_vertices.begin(), vc.right_vertices.end());
    std::sort(vc.chosen_cover.begin(), vc.chosen_cover.end());
    result.push_back(std::move(vc));
  };

  std::vector<int> smalls;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].order() >= n)
      vc_from_members({static_cast<int>(i)}, true);
    else
      smalls.push_back(static_cast<int>(i));
  }
  std::stable_sort(smalls.begin(), smalls.end(), [&](int a, int b) {
    return comps[a].order() < comps[b].order();
  });
  std::vector<int> pending;
  int pending_order = 0;
  for (int s : smalls) {
    if (!pending.empty() && pending_order + comps[s].order() >= 2 * n) {
      vc_from_members(std::move(pending), false);
      pending.clear();
      pending_order = 0;
    }
    pending.push_back(s);
    pending_order += comps[s].order();
  }
  if (!pending.empty()) vc_from_members(std::move(pending), false);

  for (std::size_t i = 0; i < result.size(); ++i)
    result[i].id = static_cast<int>(i);
  if (result.size() > static_cast<std::size_t>(type_space_per_color))
    throw std::runtime_error(
        "virtual_components: more than 8 virtual components in one colour; "
        "the instance parameters are outside the N <= 4n regime");
  return result;
}

struct AddedEdge {
  int left;
  int right;
  Color color;
};

struct AugmentResult {
  Coloring g1;
  std::vector<AddedEdge> added_edges;
};

// For each virtual component C with chosen cover W, every absent cell inside
// C incident with W becomes colour(C). Colours are processed in Red, Green,
// Blue order and the first claimant wins; as the added edges inside C all
// touch W, the cover (and by König the matching number) of every virtual
// component is unchanged, which is asserted before returning.
inline AugmentResult augment_g1(
    const Coloring& c,
    const std::array<std::vector<VirtualComponent>, 3>& vcs) {
  std::vector<cell_t> cells = c.cells();
  std::vector<AddedEdge> added;
  int nr = c.n_right();

  for (Color col : all_colors) {
    for (const VirtualComponent& vc : vcs[static_cast<int>(col)]) {
      std::vector<bool> cover_left(c.n_left(), false),
          cover_right(c.n_right(), false);
      for (const Vertex& w : vc.chosen_cover)
        (w.side == Side::Left ? cover_left[w.index] : cover_right[w.index]) =
            true;
      for (int u : vc.left_vertices)
        for (int v : vc.right_vertices) {
          std::size_t idx = static_cast<std::size_t>(u) * nr + v;
          if (cells[idx] != absent_cell) continue;
          if (!cover_left[u] && !cover_right[v]) continue;
          cells[idx] = cell_of(col);
          added.push_back(AddedEdge{u, v, col});
        }
    }
  }

  AugmentResult result{Coloring(c.n_left(), c.n_right(), std::move(cells)),
                       std::move(added)};

  // nu-preservation consistency check, per virtual component.
  for (Color col : all_colors)
    for (const VirtualComponent& vc : vcs[static_cast<int>(col)]) {
      std::vector<Edge> edges;
      for (int u : vc.left_vertices)
        for (int v : vc.right_vertices)
          if (result.g1.at(u, v) == col) edges.push_back(Edge{u, v});
      int nu = matching_number(component_from_edges(col, std::move(edges)));
      if (nu != vc.matching_number)
        throw std::logic_error(
            "augment_g1: matching number changed inside a virtual component; "
            "chosen cover was not a minimum cover");
    }
  return result;
}

// Per-colour virtual-component index of every vertex; -1 is the reserved
// sentinel for vertices with no edge of that colour, so that non-edge typing
// is total.
struct VcMembership {
  std::array<std::vector<int>, 3> left_of;
  std::array<std::vector<int>, 3> right_of;
};

inline VcMembership memberships_of(
    const Coloring& c,
    const std::array<std::vector<VirtualComponent>, 3>& vcs) {
  VcMembership m;
  for (int col = 0; col < 3; ++col) {
    m.left_of[col].assign(c.n_left(), -1);
    m.right_of[col].assign(c.n_right(), -1);
    for (const VirtualComponent& vc : vcs[col]) {
      for (int u : vc.left_vertices) m.left_of[col][u] = vc.id;
      for (int v : vc.right_vertices) m.right_of[col][v] = vc.id;
    }
  }
  return m;
}

// Type of a non-edge: virtual-component indices of its right endpoint in
// red, blue, green, then of its left endpoint in red, blue, green.
using NonEdgeType = std::array<int, 6>;

inline NonEdgeType nonedge_type_of(const VcMembership& m, int left,
                                   int right) {
  const int red = static_cast<int>(Color::Red);
  const int blue = static_cast<int>(Color::Blue);
  const int green = static_cast<int>(Color::Green);
  return NonEdgeType{m.right_of[red][right], m.right_of[blue][right],
                     m.right_of[green][right], m.left_of[red][left],
                     m.left_of[blue][left], m.left_of[green][left]};
}

// Partition of the absent cells of g1 by type.
inline std::map<NonEdgeType, std::vector<Edge>> nonedge_types(
    const Coloring& g1, const VcMembership& m) {
  std::map<NonEdgeType, std::vector<Edge>> result;
  for (int u = 0; u < g1.n_left(); ++u)
    for (int v = 0; v < g1.n_right(); ++v)
      if (g1.is_absent(u, v))
        result[nonedge_type_of(m, u, v)].push_back(Edge{u, v});
  return result;
}

// Minimum vertex cover of the bipartite graph whose edges are the given
// non-edges.
inline std::vector<Vertex> type_cover(const std::vector<Edge>& nonedges) {
  return min_vertex_cover(component_from_edges(Color::Red, nonedges));
}

enum class ReduceMode { Paper, Relaxed };
enum class ReduceStatus { Certified, Inconclusive };

struct TypeCoverEntry {
  NonEdgeType type;
  int nonedge_count = 0;
  std::vector<Vertex> cover;
  bool within_eps = true;
};

struct ReductionCertificate {
  int n = 0;
  int eps_n = 0;  // absolute deficiency bound d = eps * n
  int n_side = 0;
  ReduceMode mode = ReduceMode::Relaxed;
  ReduceStatus status = ReduceStatus::Inconclusive;
  std::array<std::vector<VirtualComponent>, 3> vcs;
  std::vector<AddedEdge> added_edges;
  std::vector<TypeCoverEntry> type_covers;
  std::vector<Vertex> cover_union;  // U, removed from both sides
  long long u_size_bound = 0;       // 8^6 * eps_n
  std::vector<int> left_map;        // old -> new in G2, -1 removed
  std::vector<int> right_map;
  int g2_left = 0, g2_right = 0;
  bool g2_sides_ok = false;  // both sides >= 3n-2
  Color found_color = Color::Red;
  int found_cm_size = 0;  // largest monochromatic CM in G2
  int final_vc_id = -1;
  Matching final_matching;  // edges of the ORIGINAL coloring
  std::vector<std::string> notes;
};

// The full pipeline. Paper mode enforces N >= 3n + 8^6*eps_n; relaxed mode
// accepts any N and reports whether the reduced sides still meet the
// complete-case guarantee (>= 3n-2 per side). Both modes require min degree
// >= N - eps_n.
inline ReductionCertificate reduce_and_find(const Coloring& c, int n,
                                            int eps_n, ReduceMode mode) {
  if (n < 1) throw std::invalid_argument("reduce_and_find: n must be >= 1");
  if (eps_n < 0)
    throw std::invalid_argument("reduce_and_find: eps_n must be >= 0");
  if (c.n_left() != c.n_right())
    throw std::invalid_argument("reduce_and_find: sides must be equal");
  int N = c.n_left();

  for (int u = 0; u < N; ++u)
    if (c.degree(left_vertex(u)) < N - eps_n)
      throw std::invalid_argument(
          "reduce_and_find: left vertex of degree < N - eps_n");
  for (int v = 0; v < N; ++v)
    if (c.degree(right_vertex(v)) < N - eps_n)
      throw std::invalid_argument(
          "reduce_and_find: right vertex of degree < N - eps_n");
  if (mode == ReduceMode::Paper &&
      static_cast<long long>(N) < 3LL * n + nonedge_type_space * eps_n)
    throw std::invalid_argument(
        "reduce_and_find: paper mode needs N >= 3n + 8^6 * eps_n");

  ReductionCertificate cert;
  cert.n = n;
  cert.eps_n = eps_n;
  cert.n_side = N;
  cert.mode = mode;
  cert.u_size_bound = nonedge_type_space * eps_n;
  if (mode == ReduceMode::Relaxed)
    cert.notes.push_back(
        "relaxed mode: the strict size precondition N >= 3n + 8^6*eps_n is "
        "out of reach for any nonzero deficiency at practical sizes, so this "
        "run validates the pipeline mechanics (nu-preservation, non-edge "
        "coverage, certificate soundness) and reports whether the reduced "
        "sides keep the complete-case guarantee");

  for (Color col : all_colors)
    cert.vcs[static_cast<int>(col)] = virtual_components(c, col, n);

  auto augmented = augment_g1(c, cert.vcs);
  cert.added_edges = std::move(augmented.added_edges);
  const Coloring& g1 = augmented.g1;

  VcMembership membership = memberships_of(c, cert.vcs);
  auto typed = nonedge_types(g1, membership);

  std::vector<bool> in_u_left(N, false), in_u_right(N, false);
  for (auto& [type, nonedges] : typed) {
    TypeCoverEntry entry;
    entry.type = type;
    entry.nonedge_count = static_cast<int>(nonedges.size());
    entry.cover = type_cover(nonedges);
    entry.within_eps = static_cast<int>(entry.cover.size()) <= eps_n;
    if (!entry.within_eps && mode == ReduceMode::Paper)
      throw std::runtime_error(
          "reduce_and_find: a type cover exceeds eps_n, which contradicts "
          "the minimum-degree precondition");
    for (const Vertex& w : entry.cover)
      (w.side == Side::Left ? in_u_left[w.index] : in_u_right[w.index]) = true;
    cert.type_covers.push_back(std::move(entry));
  }
  for (int u = 0; u < N; ++u)
    if (in_u_left[u]) cert.cover_union.push_back(left_vertex(u));
  for (int v = 0; v < N; ++v)
    if (in_u_right[v]) cert.cover_union.push_back(right_vertex(v));

  std::vector<bool> keep_left(N, true), keep_right(N, true);
  for (int u = 0; u < N; ++u) keep_left[u] = !in_u_left[u];
  for (int v = 0; v < N; ++v) keep_right[v] = !in_u_right[v];
  SubColoring g2 = induced_subcoloring(g1, keep_left, keep_right);
  cert.left_map = std::move(g2.left_map);
  cert.right_map = std::move(g2.right_map);
  cert.g2_left = g2.coloring.n_left();
  cert.g2_right = g2.coloring.n_right();
  if (!g2.coloring.is_complete())
    throw std::logic_error(
        "reduce_and_find: U failed to cover all non-edges of G1");

  cert.g2_sides_ok =
      cert.g2_left >= 3 * n - 2 && cert.g2_right >= 3 * n - 2;
  if (!cert.g2_sides_ok) {
    cert.status = ReduceStatus::Inconclusive;
    cert.notes.push_back(
        "reduced sides dropped below 3n-2, outside the complete-case "
        "guarantee; no connected matching is claimed");
    return cert;
  }

  // Largest monochromatic connected matching of the complete graph G2.
  ConnectedMatchingResult best;
  Color best_color = Color::Red;
  for (Color col : all_colors) {
    auto cm = largest_connected_matching(g2.coloring, col);
    if (cm.size > best.size) {
      best = std::move(cm);
      best_color = col;
    }
  }
  cert.found_color = best_color;
  cert.found_cm_size = best.size;
  if (best.size < n)
    throw std::logic_error(
        "reduce_and_find: complete G2 with sides >= 3n-2 has no "
        "monochromatic n-connected matching; pipeline falsified");

  // Map one matched vertex back to the original indices and locate its
  // virtual component, which must be genuine.
  std::vector<int> old_left(cert.g2_left, -1), old_right(cert.g2_right, -1);
  for (int u = 0; u < N; ++u)
    if (cert.left_map[u] >= 0) old_left[cert.left_map[u]] = u;
  for (int v = 0; v < N; ++v)
    if (cert.right_map[v] >= 0) old_right[cert.right_map[v]] = v;

  int anchor_left = old_left[best.matching.front().left];
  int vc_id =
      membership.left_of[static_cast<int>(best_color)][anchor_left];
  if (vc_id < 0)
    throw std::logic_error("reduce_and_find: matched vertex outside every "
                           "virtual component of its colour");
  const VirtualComponent& vc = cert.vcs[static_cast<int>(best_color)][vc_id];
  if (!vc.is_genuine)
    throw std::logic_error(
        "reduce_and_find: an n-connected matching landed in a union-type "
        "virtual component; pipeline falsified");
  cert.final_vc_id = vc_id;

  // Recompute a maximum matching of the genuine component in the ORIGINAL
  // coloring; every edge is real.
  std::vector<Component> orig_comps = components(c, best_color);
  const Component& genuine = orig_comps[vc.member_components.front()];
  cert.final_matching = max_matching(genuine);
  if (static_cast<int>(cert.final_matching.size()) < n)
    throw std::logic_error(
        "reduce_and_find: genuine component lost matching size in the "
        "original coloring; pipeline falsified");
  cert.status = ReduceStatus::Certified;
  return cert;
}

}  // namespace bramsey
