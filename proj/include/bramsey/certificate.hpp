#pragma once

#include <queue>
#include <set>
#include <string>
#include <vector>

#include "bramsey/coloring.hpp"
#include "bramsey/reducer.hpp"
#include "json.hpp"

namespace bramsey {

// Certificate file format and its independent checker. The checker
// deliberately re-implements the little graph traversal it needs instead of
// calling the matching engine: a certificate must be verifiable from the
// original coloring and the certificate alone.

namespace detail {

inline nlohmann::ordered_json vertex_set_to_json(const std::vector<Vertex>& vs) {
  nlohmann::ordered_json doc;
  auto left = nlohmann::ordered_json::array();
  auto right = nlohmann::ordered_json::array();
  for (const Vertex& v : vs)
    (v.side == Side::Left ? left : right).push_back(v.index);
  doc["left"] = std::move(left);
  doc["right"] = std::move(right);
  return doc;
}

inline nlohmann::ordered_json vc_to_json(const VirtualComponent& vc) {
  nlohmann::ordered_json doc;
  doc["id"] = vc.id;
  doc["genuine"] = vc.is_genuine;
  doc["members"] = vc.member_components;
  doc["left"] = vc.left_vertices;
  doc["right"] = vc.right_vertices;
  doc["order"] = vc.order();
  doc["matching_number"] = vc.matching_number;
  doc["cover"] = vertex_set_to_json(vc.chosen_cover);
  return doc;
}

inline nlohmann::ordered_json matching_to_json(const Matching& m) {
  auto arr = nlohmann::ordered_json::array();
  for (const Edge& e : m)
    arr.push_back(nlohmann::ordered_json{{"left", e.left}, {"right", e.right}});
  return arr;
}

}  // namespace detail

inline nlohmann::ordered_json certificate_to_json(
    const ReductionCertificate& cert) {
  nlohmann::ordered_json doc;
  doc["params"] = {{"n", cert.n},
                   {"eps_n", cert.eps_n},
                   {"n_side", cert.n_side},
                   {"mode", cert.mode == ReduceMode::Paper ? "paper" : "relaxed"}};
  doc["status"] =
      cert.status == ReduceStatus::Certified ? "certified" : "inconclusive";

  nlohmann::ordered_json vcs;
  for (Color col : all_colors) {
    auto arr = nlohmann::ordered_json::array();
    for (const VirtualComponent& vc : cert.vcs[static_cast<int>(col)])
      arr.push_back(detail::vc_to_json(vc));
    vcs[std::string(1, color_code(col))] = std::move(arr);
  }
  doc["virtual_components"] = std::move(vcs);

  auto added = nlohmann::ordered_json::array();
  for (const AddedEdge& e : cert.added_edges)
    added.push_back(nlohmann::ordered_json{
        {"left", e.left},
        {"right", e.right},
        {"color", std::string(1, color_code(e.color))}});
  doc["added_edges"] = std::move(added);

  auto covers = nlohmann::ordered_json::array();
  for (const TypeCoverEntry& entry : cert.type_covers) {
    nlohmann::ordered_json row;
    row["type"] = entry.type;
    row["nonedges"] = entry.nonedge_count;
    row["cover"] = detail::vertex_set_to_json(entry.cover);
    row["cover_size"] = entry.cover.size();
    row["within_eps"] = entry.within_eps;
    covers.push_back(std::move(row));
  }
  doc["type_covers"] = std::move(covers);

  doc["cover_union"] = detail::vertex_set_to_json(cert.cover_union);
  doc["cover_union_size"] = cert.cover_union.size();
  doc["cover_union_bound"] = cert.u_size_bound;
  doc["removed"] = {{"left_map", cert.left_map},
                    {"right_map", cert.right_map}};
  doc["g2"] = {{"n_left", cert.g2_left},
               {"n_right", cert.g2_right},
               {"sides_ok", cert.g2_sides_ok}};
  if (cert.status == ReduceStatus::Certified) {
    doc["final"] = {{"color", std::string(1, color_code(cert.found_color))},
                    {"cm_size_in_g2", cert.found_cm_size},
                    {"component_id", cert.final_vc_id},
                    {"matching", detail::matching_to_json(cert.final_matching)},
                    {"matching_size", cert.final_matching.size()}};
  }
  doc["notes"] = cert.notes;
  return doc;
}

inline std::string write_certificate(const ReductionCertificate& cert) {
  return certificate_to_json(cert).dump(2) + "\n";
}

struct CertificateCheck {
  bool ok = false;
  bool inconclusive = false;
  std::vector<std::string> failures;
};

// Checks a certificate against the original coloring: the final matching
// must use distinct, present edges of the claimed colour, all inside one
// connected component of that colour, with at least n edges.
inline CertificateCheck verify_certificate(const Coloring& original,
                                           const nlohmann::json& cert) {
  CertificateCheck result;
  auto fail = [&](const std::string& why) { result.failures.push_back(why); };

  if (!cert.is_object() || !cert.contains("params") ||
      !cert.contains("status")) {
    fail("certificate: missing params/status");
    return result;
  }
  if (cert["status"] == "inconclusive") {
    result.inconclusive = true;
    fail("certificate is inconclusive: no matching is claimed");
    return result;
  }
  if (!cert.contains("final")) {
    fail("certified certificate lacks a final matching");
    return result;
  }

  int n = cert["params"].value("n", -1);
  if (n < 1) fail("params.n must be >= 1");
  const auto& final_part = cert["final"];
  std::string color_str = final_part.value("color", std::string());
  std::optional<Color> color =
      color_str.size() == 1 ? color_from_code(color_str[0]) : std::nullopt;
  if (!color) {
    fail("final.color is not one of R/G/B");
    return result;
  }
  if (!final_part.contains("matching") || !final_part["matching"].is_array()) {
    fail("final.matching must be an array of edges");
    return result;
  }

  std::vector<Edge> matching;
  std::set<int> lefts, rights;
  for (const auto& edge : final_part["matching"]) {
    int u = edge.value("left", -1), v = edge.value("right", -1);
    if (u < 0 || u >= original.n_left() || v < 0 || v >= original.n_right()) {
      fail("matching edge out of range");
      return result;
    }
    if (original.at(u, v) != *color)
      fail("matching edge (" + std::to_string(u) + "," + std::to_string(v) +
           ") is not a present edge of the claimed colour");
    if (!lefts.insert(u).second || !rights.insert(v).second)
      fail("matching edges are not vertex-disjoint");
    matching.push_back(Edge{u, v});
  }
  if (static_cast<int>(matching.size()) < n)
    fail("matching has fewer than n edges");

  // Connectivity of all matched vertices in one component of the colour,
  // by plain BFS over the original coloring.
  if (!matching.empty() && result.failures.empty()) {
    int nl = original.n_left(), nr = original.n_right();
    std::vector<bool> lseen(nl, false), rseen(nr, false);
    std::queue<Vertex> q;
    q.push(left_vertex(matching.front().left));
    lseen[matching.front().left] = true;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      if (x.side == Side::Left) {
        for (int v = 0; v < nr; ++v)
          if (original.at(x.index, v) == *color && !rseen[v]) {
            rseen[v] = true;
            q.push(right_vertex(v));
          }
      } else {
        for (int u = 0; u < nl; ++u)
          if (original.at(u, x.index) == *color && !lseen[u]) {
            lseen[u] = true;
            q.push(left_vertex(u));
          }
      }
    }
    for (const Edge& e : matching)
      if (!lseen[e.left] || !rseen[e.right]) {
        fail("matching is not contained in one connected component of its "
             "colour");
        break;
      }
  }

  result.ok = result.failures.empty();
  return result;
}

}  // namespace bramsey
