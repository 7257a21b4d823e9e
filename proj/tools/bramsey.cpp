// bramsey: construct, analyse and search 3-coloured complete bipartite
// graphs for monochromatic connected matchings, paths and even cycles.
//
// Exit codes for `verify`: 0 = avoids / not found, 1 = found (witness in the
// report), 2 = error. `verify-certificate`: 0 = valid, 1 = invalid,
// 2 = error. Every other subcommand: 0 = success, 2 = error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bramsey/certificate.hpp"
#include "bramsey/coloring_json.hpp"
#include "bramsey/constructions.hpp"
#include "bramsey/matching.hpp"
#include "bramsey/paths.hpp"
#include "bramsey/reducer.hpp"
#include "bramsey/search.hpp"
#include "json.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << bytes;
}

bramsey::Color parse_color(const std::string& s) {
  if (s.size() == 1)
    if (auto c = bramsey::color_from_code(s[0])) return *c;
  throw std::runtime_error("colour must be one of R, G, B");
}

ordered_json vertex_to_json(const bramsey::Vertex& v) {
  return ordered_json::array(
      {v.side == bramsey::Side::Left ? "L" : "R", v.index});
}

ordered_json vertex_seq_to_json(const std::vector<bramsey::Vertex>& vs) {
  auto arr = ordered_json::array();
  for (const auto& v : vs) arr.push_back(vertex_to_json(v));
  return arr;
}

ordered_json matching_to_json(const bramsey::Matching& m) {
  auto arr = ordered_json::array();
  for (const auto& e : m) arr.push_back(ordered_json::array({e.left, e.right}));
  return arr;
}

ordered_json component_table(const bramsey::Coloring& c) {
  ordered_json table;
  for (bramsey::Color col : bramsey::all_colors) {
    auto arr = ordered_json::array();
    int id = 0;
    for (const auto& comp : bramsey::components(c, col)) {
      auto report = bramsey::cover_report(comp);
      ordered_json row;
      row["id"] = id++;
      row["left"] = comp.left_vertices;
      row["right"] = comp.right_vertices;
      row["edges"] = comp.edges.size();
      row["matching_number"] = report.matching_number;
      row["min_cover"] = vertex_seq_to_json(report.min_cover);
      row["cover_vertices"] = vertex_seq_to_json(report.cover_vertices);
      row["type"] = bramsey::component_type_name(report.type);
      arr.push_back(std::move(row));
    }
    table[std::string(1, bramsey::color_code(col))] = std::move(arr);
  }
  return table;
}

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("BRAMSEY_BUDGET_NODES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed BRAMSEY_BUDGET_NODES\n";
  }
  return bramsey::Budget{}.max_nodes;
}

ordered_json outcome_to_json(int n, const bramsey::SearchOutcome& o,
                             const std::optional<std::string>& witness_path) {
  ordered_json row;
  row["n"] = n;
  row["status"] = bramsey::search_status_name(o.status);
  row["nodes"] = o.nodes_explored;
  row["elapsed_s"] = o.elapsed_s;
  row["witness_path"] = witness_path ? ordered_json(*witness_path)
                                     : ordered_json(nullptr);
  return row;
}

// ---------------------------------------------------------------- construct

int run_construct(const std::string& kind, const std::vector<int>& a, int k,
                  int l, const std::vector<int>& b, const std::string& pattern,
                  const std::string& out) {
  bramsey::Coloring coloring = [&] {
    if (kind == "example1") {
      if (a.size() != 3)
        throw std::runtime_error("example1 needs --a a1,a2,a3");
      return bramsey::example1(a[0], a[1], a[2]);
    }
    if (kind == "lemma6") {
      if (k < 0 || l < 0) throw std::runtime_error("lemma6 needs --k and --l");
      return bramsey::lemma6_coloring(k, l);
    }
    if (kind == "stability") {
      if (k < 0 || b.size() != 3)
        throw std::runtime_error("stability needs --k and --b b1,b2,b3");
      std::vector<bramsey::Color> rb;
      for (char ch : pattern) rb.push_back(parse_color(std::string(1, ch)));
      return bramsey::stability_example(k, b[0], b[1], b[2], rb);
    }
    throw std::runtime_error("unknown construction kind: " + kind);
  }();

  bramsey::Thresholds avoided = [&] {
    if (kind == "example1")
      return bramsey::claimed_avoidance_example1(a[0], a[1], a[2]);
    if (kind == "lemma6") return bramsey::claimed_avoidance_lemma6(k, l);
    return bramsey::claimed_avoidance_stability(k);
  }();

  std::string bytes = bramsey::write_coloring(coloring);
  if (out.empty()) {
    std::cout << bytes;
    std::cerr << "avoids " << avoided.str() << "\n";
  } else {
    write_file(out, bytes);
    std::cout << "avoids " << avoided.str() << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------- verify

int run_verify(const std::string& in, const std::vector<int>& cm, int path_len,
               int cycle_len, const std::string& color_str,
               std::uint64_t budget_states) {
  bramsey::Coloring c = bramsey::read_coloring(read_file(in));
  ordered_json report;
  report["n_left"] = c.n_left();
  report["n_right"] = c.n_right();
  report["components"] = component_table(c);

  bool found = false;
  ordered_json check;
  if (!cm.empty()) {
    if (cm.size() != 3) throw std::runtime_error("--cm needs k,l,m");
    auto verdict = bramsey::meets_thresholds(c, cm[0], cm[1], cm[2]);
    found = verdict.met;
    check["kind"] = "cm";
    check["thresholds"] = cm;
    check["found"] = verdict.met;
    if (verdict.met) {
      check["color"] = std::string(1, bramsey::color_code(*verdict.color));
      check["witness"] = matching_to_json(verdict.witness);
    }
  } else if (path_len > 0) {
    bramsey::PathBudget pb;
    pb.max_states = budget_states;
    auto result =
        bramsey::longest_monochromatic_path(c, parse_color(color_str), pb);
    found = result.length >= path_len;
    check["kind"] = "path";
    check["color"] = color_str;
    check["target_vertices"] = path_len;
    check["longest"] = result.length;
    check["found"] = found;
    check["witness"] = vertex_seq_to_json(result.path);
  } else if (cycle_len > 0) {
    bramsey::PathBudget pb;
    pb.max_states = budget_states;
    auto result =
        bramsey::has_even_cycle(c, parse_color(color_str), cycle_len, pb);
    found = result.found;
    check["kind"] = "cycle";
    check["color"] = color_str;
    check["length"] = cycle_len;
    check["found"] = found;
    check["witness"] = vertex_seq_to_json(result.cycle);
  } else {
    throw std::runtime_error("verify needs one of --cm, --path, --cycle");
  }
  report["check"] = std::move(check);

  std::cout << report.dump(2) << "\n";
  std::cerr << (found ? "found" : "not found") << "\n";
  return found ? 1 : 0;
}

// ------------------------------------------------------------------- search

int run_search(int k, int l, int m, int n_max, std::uint64_t budget_nodes,
               double budget_s, int threads, bool as_json,
               const std::string& witness_dir, bool compare_t8,
               const std::string& grid) {
  bramsey::Budget budget;
  budget.max_nodes = budget_nodes;
  budget.max_seconds = budget_s;
  budget.threads = threads;

  if (compare_t8) {
    int kmax = 0, lmax = 0;
    if (sscanf(grid.c_str(), "%dx%d", &kmax, &lmax) != 2 || kmax < 1 || lmax < 1)
      throw std::runtime_error("--grid must look like 3x3");
    auto rows = bramsey::compare_with_theorem8(kmax, lmax, budget);
    ordered_json doc;
    auto arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json r;
      r["k"] = row.k;
      r["l"] = row.l;
      if (row.searched.value)
        r["searched"] = *row.searched.value;
      else {
        r["searched"] = nullptr;
        r["searched_lower_bound"] = row.searched.lower_bound;
        if (row.searched.upper_bound)
          r["searched_upper_bound"] = *row.searched.upper_bound;
      }
      r["formula"] = row.formula;
      r["match"] = row.match ? ordered_json(*row.match) : ordered_json(nullptr);
      arr.push_back(std::move(r));
      std::cerr << "r(" << row.k << "," << row.l << "," << row.l << "): "
                << (row.searched.value ? std::to_string(*row.searched.value)
                                       : "undetermined")
                << " formula " << row.formula << " "
                << (row.match ? (*row.match ? "match" : "MISMATCH") : "open")
                << "\n";
    }
    doc["rows"] = std::move(arr);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  bramsey::Thresholds th(k, l, m);
  auto result = bramsey::ramsey_value(th, n_max, budget);

  ordered_json doc;
  doc["thresholds"] = {{"k", k}, {"l", l}, {"m", m}};
  auto outcomes = ordered_json::array();
  double total_s = 0;
  for (const auto& [n, o] : result.per_n) {
    total_s += o.elapsed_s;
    std::optional<std::string> wpath;
    if (o.witness && !witness_dir.empty()) {
      wpath = witness_dir + "/witness_n" + std::to_string(n) + ".json";
      write_file(*wpath, bramsey::write_coloring(*o.witness));
    }
    outcomes.push_back(outcome_to_json(n, o, wpath));
  }
  doc["outcomes"] = std::move(outcomes);
  doc["value"] = result.value ? ordered_json(*result.value) : ordered_json(nullptr);
  doc["lower_bound"] = result.lower_bound;
  doc["upper_bound"] = result.upper_bound ? ordered_json(*result.upper_bound)
                                          : ordered_json(nullptr);
  doc["elapsed_s"] = total_s;

  if (as_json) std::cout << doc.dump(2) << "\n";
  for (const auto& [n, o] : result.per_n)
    std::cerr << "n=" << n << ": " << bramsey::search_status_name(o.status)
              << " (" << o.nodes_explored << " nodes, " << o.elapsed_s
              << " s)\n";
  if (result.value)
    std::cerr << "value " << *result.value << "\n";
  else
    std::cerr << "value in [" << result.lower_bound << ", "
              << (result.upper_bound ? std::to_string(*result.upper_bound)
                                     : std::string("?"))
              << "]\n";
  if (!as_json) {
    if (result.value)
      std::cout << *result.value << "\n";
    else
      std::cout << "undetermined\n";
  }
  return 0;
}

// -------------------------------------------------------------- paths/cycles

int run_paths(const std::string& in, const std::string& color_str,
              std::uint64_t budget_states, int two_colour_target, int n_max,
              std::uint64_t budget_nodes, double budget_s, int threads) {
  if (two_colour_target > 0) {
    bramsey::Budget budget;
    budget.max_nodes = budget_nodes;
    budget.max_seconds = budget_s;
    budget.threads = threads;
    auto result =
        bramsey::two_colour_path_ramsey(two_colour_target, n_max, budget);
    ordered_json doc;
    doc["path_vertices"] = two_colour_target;
    doc["value"] =
        result.value ? ordered_json(*result.value) : ordered_json(nullptr);
    doc["lower_bound"] = result.lower_bound;
    doc["upper_bound"] = result.upper_bound
                             ? ordered_json(*result.upper_bound)
                             : ordered_json(nullptr);
    auto arr = ordered_json::array();
    for (const auto& [n, o] : result.per_n)
      arr.push_back(outcome_to_json(n, o, std::nullopt));
    doc["outcomes"] = std::move(arr);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  bramsey::Coloring c = bramsey::read_coloring(read_file(in));
  bramsey::PathBudget pb;
  pb.max_states = budget_states;
  auto result = bramsey::longest_monochromatic_path(c, parse_color(color_str), pb);
  ordered_json doc;
  doc["color"] = color_str;
  doc["length"] = result.length;
  doc["path"] = vertex_seq_to_json(result.path);
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_cycles(const std::string& in, const std::string& color_str, int length,
               std::uint64_t budget_states) {
  bramsey::Coloring c = bramsey::read_coloring(read_file(in));
  bramsey::PathBudget pb;
  pb.max_states = budget_states;
  auto result = bramsey::has_even_cycle(c, parse_color(color_str), length, pb);
  ordered_json doc;
  doc["color"] = color_str;
  doc["length"] = length;
  doc["found"] = result.found;
  doc["cycle"] = vertex_seq_to_json(result.cycle);
  std::cout << doc.dump(2) << "\n";
  return 0;
}

// ------------------------------------------------------------------- reduce

int run_reduce(const std::string& in, int n, int eps_n,
               const std::string& mode_str, const std::string& out) {
  bramsey::Coloring c = bramsey::read_coloring(read_file(in));
  bramsey::ReduceMode mode;
  if (mode_str == "paper")
    mode = bramsey::ReduceMode::Paper;
  else if (mode_str == "relaxed")
    mode = bramsey::ReduceMode::Relaxed;
  else
    throw std::runtime_error("--mode must be paper or relaxed");

  auto cert = bramsey::reduce_and_find(c, n, eps_n, mode);
  std::string bytes = bramsey::write_certificate(cert);
  if (out.empty())
    std::cout << bytes;
  else
    write_file(out, bytes);

  std::cerr << (cert.status == bramsey::ReduceStatus::Certified
                    ? "certified"
                    : "inconclusive")
            << ": |U|=" << cert.cover_union.size()
            << " g2=" << cert.g2_left << "x" << cert.g2_right;
  if (cert.status == bramsey::ReduceStatus::Certified)
    std::cerr << " matching=" << cert.final_matching.size() << " ("
              << bramsey::color_code(cert.found_color) << ")";
  std::cerr << "\n";
  return 0;
}

int run_verify_certificate(const std::string& coloring_path,
                           const std::string& cert_path) {
  bramsey::Coloring c = bramsey::read_coloring(read_file(coloring_path));
  json cert = json::parse(read_file(cert_path));
  auto check = bramsey::verify_certificate(c, cert);
  ordered_json doc;
  doc["ok"] = check.ok;
  doc["inconclusive"] = check.inconclusive;
  doc["failures"] = check.failures;
  std::cout << doc.dump(2) << "\n";
  std::cerr << (check.ok ? "certificate valid" : "certificate INVALID") << "\n";
  return check.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite Ramsey toolkit for connected matchings, paths and "
               "even cycles"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "generate an extremal coloring");
  std::string kind, out, pattern;
  std::vector<int> a, b;
  int k = -1, l = -1;
  construct->add_option("kind", kind, "example1 | lemma6 | stability")->required();
  construct->add_option("--a", a, "example1 block sizes a1,a2,a3")->delimiter(',');
  construct->add_option("--k", k, "parameter k");
  construct->add_option("--l", l, "parameter l");
  construct->add_option("--b", b, "stability right blocks b1,b2,b3")->delimiter(',');
  construct->add_option("--pattern", pattern,
                        "stability A3xB3 cells, row-major string over {R,B}");
  construct->add_option("--out", out, "output coloring path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "analyse a coloring file");
  std::string vin, vcolor = "R";
  std::vector<int> cm;
  int path_len = 0, cycle_len = 0;
  std::uint64_t budget_states = bramsey::PathBudget{}.max_states;
  verify->add_option("in", vin, "coloring JSON path")->required();
  auto* cm_opt = verify->add_option("--cm", cm, "thresholds k,l,m")->delimiter(',');
  auto* path_opt = verify->add_option("--path", path_len, "path target (vertices)");
  auto* cycle_opt = verify->add_option("--cycle", cycle_len, "even cycle length (vertices)");
  cm_opt->excludes(path_opt)->excludes(cycle_opt);
  path_opt->excludes(cycle_opt);
  verify->add_option("--color", vcolor, "colour for --path/--cycle (R|G|B)");
  verify->add_option("--budget-states", budget_states, "exact-search state budget");

  // search
  auto* search = app.add_subcommand("search", "compute r(k,l,m) by exhaustive search");
  int sk = 1, sl = 1, sm = 1, n_max = 8, threads = 0;
  std::uint64_t budget_nodes = default_node_budget();
  double budget_s = bramsey::Budget{}.max_seconds;
  bool as_json = false, compare_t8 = false;
  std::string witness_dir, grid = "3x3";
  search->add_option("--k", sk, "red threshold");
  search->add_option("--l", sl, "green threshold");
  search->add_option("--m", sm, "blue threshold");
  search->add_option("--n-max", n_max, "largest side size to try");
  search->add_option("--budget-nodes", budget_nodes, "node budget per n");
  search->add_option("--budget-s", budget_s, "time budget per n (seconds)");
  search->add_option("--threads", threads, "worker threads (0 = machine parallelism)");
  search->add_flag("--json", as_json, "print the JSON report to stdout");
  search->add_option("--witness-dir", witness_dir,
                     "write witness colorings into this directory");
  search->add_flag("--compare-theorem8", compare_t8,
                   "compare searched r(k,l,l) with the closed form on a grid");
  search->add_option("--grid", grid, "comparison grid, e.g. 3x3");

  // paths
  auto* paths = app.add_subcommand("paths", "longest monochromatic path / 2-colour path Ramsey");
  std::string pin, pcolor = "R";
  int two_colour_target = 0, pn_max = 8;
  paths->add_option("in", pin, "coloring JSON path");
  paths->add_option("--color", pcolor, "colour (R|G|B)");
  paths->add_option("--budget-states", budget_states, "exact-search state budget");
  paths->add_option("--two-colour-ramsey", two_colour_target,
                    "compute the 2-colour bipartite path Ramsey number for "
                    "paths on this many vertices");
  paths->add_option("--n-max", pn_max, "largest side size to try");
  paths->add_option("--budget-nodes", budget_nodes, "node budget per n");
  paths->add_option("--budget-s", budget_s, "time budget per n (seconds)");
  paths->add_option("--threads", threads, "worker threads");

  // cycles
  auto* cycles = app.add_subcommand("cycles", "exact fixed-length even cycle detection");
  std::string cin_, ccolor = "R";
  int cycle_length = 4;
  cycles->add_option("in", cin_, "coloring JSON path")->required();
  cycles->add_option("--color", ccolor, "colour (R|G|B)");
  cycles->add_option("--length", cycle_length, "cycle length (even, >= 4)");
  cycles->add_option("--budget-states", budget_states, "exact-search node budget");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "run the reduction pipeline, emit a certificate");
  std::string rin, rmode = "relaxed", rout;
  int rn = 1, reps_n = 0;
  reduce->add_option("in", rin, "coloring JSON path")->required();
  reduce->add_option("--n", rn, "target connected matching size")->required();
  reduce->add_option("--eps-n", reps_n, "absolute deficiency bound d = eps*n");
  reduce->add_option("--mode", rmode, "paper | relaxed");
  reduce->add_option("--out", rout, "certificate output path (default stdout)");

  // verify-certificate
  auto* vc = app.add_subcommand("verify-certificate",
                                "check a reduction certificate against its coloring");
  std::string vc_coloring, vc_cert;
  vc->add_option("coloring", vc_coloring, "original coloring JSON")->required();
  vc->add_option("certificate", vc_cert, "certificate JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed())
      return run_construct(kind, a, k, l, b, pattern, out);
    if (verify->parsed())
      return run_verify(vin, cm, path_len, cycle_len, vcolor, budget_states);
    if (search->parsed())
      return run_search(sk, sl, sm, n_max, budget_nodes, budget_s, threads,
                        as_json, witness_dir, compare_t8, grid);
    if (paths->parsed())
      return run_paths(pin, pcolor, budget_states, two_colour_target, pn_max,
                       budget_nodes, budget_s, threads);
    if (cycles->parsed())
      return run_cycles(cin_, ccolor, cycle_length, budget_states);
    if (reduce->parsed()) return run_reduce(rin, rn, reps_n, rmode, rout);
    if (vc->parsed()) return run_verify_certificate(vc_coloring, vc_cert);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
