#pragma once

#include <stdexcept>
#include <string>

#include "bramsey/coloring.hpp"
#include "json.hpp"

namespace bramsey {

// Interchange format used by every CLI subcommand:
//   {"n_left": 2, "n_right": 2, "cells": [["R","G"],[null,"B"]]}
// cells is row-major by left index; entries are "R" | "G" | "B" | null.

inline nlohmann::ordered_json coloring_to_json(const Coloring& c) {
  nlohmann::ordered_json doc;
  doc["n_left"] = c.n_left();
  doc["n_right"] = c.n_right();
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < c.n_left(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < c.n_right(); ++j) {
      auto v = c.at(i, j);
      if (v)
        row.push_back(std::string(1, color_code(*v)));
      else
        row.push_back(nullptr);
    }
    rows.push_back(std::move(row));
  }
  doc["cells"] = std::move(rows);
  return doc;
}

inline std::string write_coloring(const Coloring& c) {
  return coloring_to_json(c).dump(2) + "\n";
}

inline Coloring coloring_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n_left") || !doc.contains("n_right") ||
      !doc.contains("cells"))
    throw std::runtime_error("coloring: expected object with n_left, n_right, cells");
  if (!doc["n_left"].is_number_integer() || !doc["n_right"].is_number_integer())
    throw std::runtime_error("coloring: n_left/n_right must be integers");
  int nl = doc["n_left"].get<int>();
  int nr = doc["n_right"].get<int>();
  if (nl < 0 || nr < 0) throw std::runtime_error("coloring: negative side size");
  const auto& rows = doc["cells"];
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(nl))
    throw std::runtime_error("coloring: cells must hold n_left rows");
  std::vector<cell_t> cells;
  cells.reserve(static_cast<std::size_t>(nl) * nr);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(nr))
      throw std::runtime_error("coloring: ragged cells row");
    for (const auto& entry : row) {
      if (entry.is_null()) {
        cells.push_back(absent_cell);
        continue;
      }
      if (!entry.is_string() || entry.get<std::string>().size() != 1)
        throw std::runtime_error("coloring: cell entries must be \"R\"/\"G\"/\"B\" or null");
      auto col = color_from_code(entry.get<std::string>()[0]);
      if (!col) throw std::runtime_error("coloring: unknown colour code");
      cells.push_back(cell_of(col));
    }
  }
  return Coloring(nl, nr, std::move(cells));
}

inline Coloring read_coloring(const std::string& bytes) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("coloring: malformed JSON: ") + e.what());
  }
  return coloring_from_json(doc);
}

}  // namespace bramsey
