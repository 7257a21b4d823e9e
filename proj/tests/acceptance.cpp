// Acceptance suite: one line per criterion, PASS/FAIL plus details.
// Exit status 0 iff criteria 1-10 all pass; criterion 11 is a reported
// stretch goal and never blocks.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "bramsey/certificate.hpp"
#include "bramsey/coloring_json.hpp"
#include "bramsey/constructions.hpp"
#include "bramsey/matching.hpp"
#include "bramsey/paths.hpp"
#include "bramsey/reducer.hpp"
#include "bramsey/search.hpp"
#include "oracles.hpp"

using namespace bramsey;

namespace {

// Path of the CLI binary; when set (--cli), the criteria phrased as CLI
// invocations drive the real binary and check its exit codes.
std::string cli_path;

int run_cli(const std::string& args) {
  std::string cmd = "\"" + cli_path + "\" " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return rc < 0 ? rc : WEXITSTATUS(rc);
}

double now_s() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

struct Timer {
  double start = now_s();
  double elapsed() const { return now_s() - start; }
};

int failures = 0;

void report(int criterion, bool pass, const std::string& detail,
            bool blocking = true) {
  const char* tag = pass ? "PASS" : (blocking ? "FAIL" : "INFO");
  std::printf("[%2d] %s  %s\n", criterion, tag, detail.c_str());
  std::fflush(stdout);
  if (!pass && blocking) ++failures;
}

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buf[1024];
  vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

Budget single_thread_budget() {
  Budget b;
  b.threads = 1;
  return b;
}

// 1. r(1,1,1) = 1 and r(2,2,2) = 4, full refutation at n=4, < 60 s.
void criterion1() {
  Timer t;
  auto r111 = ramsey_value(Thresholds(1, 1, 1), 3, single_thread_budget());
  auto r222 = ramsey_value(Thresholds(2, 2, 2), 5, single_thread_budget());
  bool ok = r111.value == 1 && r222.value == 4;
  std::uint64_t refutation_nodes = 0;
  for (const auto& [n, o] : r222.per_n)
    if (n == 4) {
      ok = ok && o.status == SearchStatus::Refuted;
      refutation_nodes = o.nodes_explored;
    }
  if (!cli_path.empty()) {
    // the CLI search must reproduce both values
    if (run_cli("search --k 1 --l 1 --m 1 --n-max 2 --threads 1") != 0)
      ok = false;
    if (run_cli("search --k 2 --l 2 --m 2 --n-max 5 --threads 1 --json") != 0)
      ok = false;
  }
  double elapsed = t.elapsed();
  ok = ok && elapsed < 60.0;
  report(1, ok,
         fmt("r(1,1,1)=%d, r(2,2,2)=%d by search; n=4 fully explored "
             "(%llu nodes) in %.2f s single-threaded",
             r111.value.value_or(-1), r222.value.value_or(-1),
             (unsigned long long)refutation_nodes, elapsed));
}

// 2. Symmetric lower bounds: example1(k-1,k-1,k-1) avoids (k,k,k), k <= 8.
void criterion2() {
  bool ok = true;
  double worst = 0;
  bool via_cli = !cli_path.empty();
  for (int k = 2; k <= 8; ++k) {
    Timer t;
    if (via_cli) {
      std::string a = std::to_string(k - 1);
      std::string file = "accept_e1_" + std::to_string(k) + ".json";
      if (run_cli("construct example1 --a " + a + "," + a + "," + a +
                  " --out " + file) != 0)
        ok = false;
      std::string kk = std::to_string(k);
      if (run_cli("verify " + file + " --cm " + kk + "," + kk + "," + kk) != 0)
        ok = false;  // exit 0 = avoids
    } else {
      Coloring c = example1(k - 1, k - 1, k - 1);
      if (meets_thresholds(c, k, k, k).met) ok = false;
    }
    double elapsed = t.elapsed();
    worst = std::max(worst, elapsed);
    if (elapsed >= 1.0) ok = false;
  }
  report(2, ok,
         fmt("%s: example1(k-1,k-1,k-1) avoids (k,k,k) for 2<=k<=8 on "
             "K_{3k-3,3k-3} (worst case %.3f s)",
             via_cli ? "construct|verify exit 0" : "library check", worst));
}

// 3. Lemma-6 family grid: avoids (k+1,l+1,l+1) on K_{k+2l+t,k+2l+t}.
void criterion3() {
  bool ok = true;
  int cases = 0;
  double worst = 0;
  for (int k = 1; k <= 8; ++k)
    for (int l = (k + 1) / 2; l <= k; ++l) {
      if (l < 1 || 2 * l < k) continue;
      Timer t;
      Coloring c = lemma6_coloring(k, l);
      Thresholds th = claimed_avoidance_lemma6(k, l);
      bool met = meets_thresholds(c, th.red, th.green, th.blue).met;
      double elapsed = t.elapsed();
      worst = std::max(worst, elapsed);
      ++cases;
      if (met || c.n_left() != lemma6_side(k, l) || elapsed >= 1.0) ok = false;
    }
  report(3, ok,
         fmt("block family avoids (k+1,l+1,l+1) on all %d grid cases, "
             "k >= l >= k/2, k <= 8 (worst case %.3f s)",
             cases, worst));
}

// 4. r(1,2,2) = 3, matching the k<=l closed form.
void criterion4() {
  Timer t;
  auto r = ramsey_value(Thresholds(1, 2, 2), 4, single_thread_budget());
  double elapsed = t.elapsed();
  bool ok = r.value == 3 && theorem8_formula(1, 2) == 3 && elapsed < 5.0;
  report(4, ok,
         fmt("r(1,2,2)=%d by exhaustive search over K_{2,2} and K_{3,3}, "
             "formula k+2l-2 gives %d (%.2f s)",
             r.value.value_or(-1), theorem8_formula(1, 2), elapsed));
}

// 5. Exact table for k,l,m in {1,2}: symmetry + monotonicity.
void criterion5() {
  Timer t;
  std::map<std::array<int, 3>, int> table;
  bool ok = true;
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l)
      for (int m = 1; m <= 2; ++m) {
        auto r = ramsey_value(Thresholds(k, l, m), 5, single_thread_budget());
        if (!r.value) {
          ok = false;
          continue;
        }
        table[{k, l, m}] = *r.value;
      }
  // colour-permutation symmetry
  for (const auto& [key, value] : table) {
    std::array<int, 3> sorted = key;
    std::sort(sorted.begin(), sorted.end());
    std::array<int, 3> perm = sorted;
    do {
      if (table.at(perm) != value) ok = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  // componentwise monotonicity
  for (const auto& [key, value] : table)
    for (int axis = 0; axis < 3; ++axis) {
      std::array<int, 3> up = key;
      if (up[axis] == 1) {
        up[axis] = 2;
        if (table.at(up) < value) ok = false;
      }
    }
  double elapsed = t.elapsed();
  ok = ok && elapsed < 120.0;
  report(5, ok,
         fmt("full table over k,l,m<=2: r=1,2,2,3 by weight class; "
             "colour-symmetric and monotone (%.2f s)",
             elapsed));
}

// 6. Stability family: random partitions and patterns, k in {2,3,4}.
void criterion6(unsigned seed) {
  Timer t;
  std::mt19937 rng(seed);
  bool ok = true;
  int cases = 0, cli_checked = 0;
  for (int k : {2, 3, 4}) {
    int n = 3 * k - 3;
    for (int partition = 0; partition < 20; ++partition) {
      std::uniform_int_distribution<int> b3d(0, k - 1);
      int b3 = b3d(rng);
      std::uniform_int_distribution<int> b1d(0, n - b3);
      int b1 = b1d(rng);
      int b2 = n - b3 - b1;
      for (int pat = 0; pat < 20; ++pat) {
        std::vector<Color> pattern(static_cast<std::size_t>(k - 1) * b3);
        for (auto& c : pattern) c = rng() % 2 ? Color::Red : Color::Blue;
        Coloring c = stability_example(k, b1, b2, b3, pattern);
        ++cases;
        if (meets_thresholds(c, k, k, k).met) ok = false;
        // spot-check the CLI verdict on the first instance of each partition
        if (!cli_path.empty() && pat == 0) {
          std::FILE* f = std::fopen("accept_stability.json", "w");
          if (f) {
            std::string bytes = write_coloring(c);
            std::fwrite(bytes.data(), 1, bytes.size(), f);
            std::fclose(f);
            std::string kk = std::to_string(k);
            if (run_cli("verify accept_stability.json --cm " + kk + "," + kk +
                        "," + kk) != 0)
              ok = false;
            ++cli_checked;
          }
        }
      }
    }
  }
  double elapsed = t.elapsed();
  ok = ok && elapsed < 10.0;
  report(6, ok,
         fmt("stability family: %d random partition/pattern instances avoid "
             "(k,k,k) for k in {2,3,4}, %d re-checked via `verify --cm` "
             "exit 0 (%.2f s)",
             cases, cli_checked, elapsed));
}

// 7. Property suites against brute-force oracles.
void criterion7(unsigned seed) {
  Timer t;
  std::mt19937 rng(seed);
  int konig_fail = 0, cover_fail = 0, decrement_fail = 0;

  std::uniform_int_distribution<int> sz12(1, 12);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  for (int trial = 0; trial < 1000; ++trial) {
    auto g = oracles::random_bigraph(sz12(rng), sz12(rng), density(rng), rng);
    if (static_cast<int>(max_matching(g).size()) !=
        oracles::oracle_min_cover_size(g))
      ++konig_fail;
  }

  std::uniform_int_distribution<int> sz8(1, 8);
  int comps_checked = 0;
  for (int trial = 0; trial < 400 && comps_checked < 200; ++trial) {
    Coloring c = oracles::random_coloring(sz8(rng), sz8(rng), rng, density(rng));
    for (const Component& comp : components(c, Color::Red)) {
      ++comps_checked;
      auto brute = oracles::oracle_cover_vertices(comp);
      auto fast = cover_vertices(comp);
      if (fast != brute) ++cover_fail;

      int nu = matching_number(comp);
      std::set<Vertex> cv(fast.begin(), fast.end());
      auto probe = [&](Vertex v) {
        if (matching_number(remove_vertex(comp, v)) !=
            nu - (cv.count(v) ? 1 : 0))
          ++decrement_fail;
      };
      for (int u : comp.left_vertices) probe(left_vertex(u));
      for (int v : comp.right_vertices) probe(right_vertex(v));
    }
  }
  bool ok = konig_fail == 0 && cover_fail == 0 && decrement_fail == 0 &&
            comps_checked >= 200;
  report(7, ok,
         fmt("Konig equality 1000/1000, cover-vertex characterisation and "
             "nu-decrement law on %d components: %d/%d/%d failures (%.2f s)",
             comps_checked, konig_fail, cover_fail, decrement_fail,
             t.elapsed()));
}

// 8. Path and cycle claims.
void criterion8() {
  Timer t;
  bool ok = true;

  const int expected[] = {0, 0, 1, 3, 3, 5};  // n-1 if even, n if odd
  std::string values;
  for (int n_path = 2; n_path <= 5; ++n_path) {
    auto r = two_colour_path_ramsey(n_path, 6, single_thread_budget());
    if (!r.value || *r.value != expected[n_path]) ok = false;
    values += (n_path > 2 ? "," : "") + std::to_string(r.value.value_or(-1));
  }

  const std::array<std::array<int, 3>, 4> triples = {
      {{1, 1, 1}, {2, 3, 4}, {4, 4, 4}, {1, 2, 3}}};
  for (const auto& a : triples) {
    Coloring c = example1(a[0], a[1], a[2]);
    for (int i = 0; i < 3; ++i) {
      Color col = static_cast<Color>(i);
      PathBudget pb;
      pb.max_states = 40'000'000;
      if (longest_monochromatic_path(c, col, pb).length != 2 * a[i] + 1)
        ok = false;
      if (has_even_cycle(c, col, 2 * (a[i] + 1), pb).found) ok = false;
    }
  }
  double elapsed = t.elapsed();
  ok = ok && elapsed < 300.0;
  report(8, ok,
         fmt("2-colour path values P2..P5 = %s match the parity formula; "
             "block family paths reach exactly 2a_i+1 vertices with no "
             "C_{2(a_i+1)}, a_i <= 4 (%.2f s)",
             values.c_str(), elapsed));
}

// 9. Reduction pipeline on 200 relaxed fixtures.
void criterion9(unsigned seed) {
  Timer t;
  std::mt19937 rng(seed);
  int runs = 0, verified = 0;
  bool ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> nd(1, 10), dd(0, 2);
    int n = nd(rng), d = dd(rng);
    int N = 3 * n + 40 * d;
    std::uniform_int_distribution<int> ad(0, 40 * d);
    Coloring c = oracles::random_deficient_coloring(N, d, ad(rng), rng);
    ++runs;
    try {
      // nu-preservation and U-coverage are asserted inside the pipeline;
      // any violation throws and fails the criterion
      auto cert = reduce_and_find(c, n, d, ReduceMode::Relaxed);
      if (cert.status != ReduceStatus::Certified) {
        ok = false;
        continue;
      }
      auto check = verify_certificate(c, certificate_to_json(cert));
      if (check.ok)
        ++verified;
      else
        ok = false;
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion 9 trial %d: %s\n", trial, e.what());
      ok = false;
    }
  }
  ok = ok && verified == runs;
  report(9, ok,
         fmt("reduction pipeline: %d/%d relaxed fixtures certified and "
             "re-verified by the independent checker (%.2f s)",
             verified, runs, t.elapsed()));
  std::printf("     note: the faithful parameter regime needs "
              "N >= 3n + 8^6*eps_n, which no nonzero deficiency reaches at "
              "these sizes; property-based acceptance over relaxed-mode "
              "fixtures substitutes for it.\n");
}

// 10. Comparison report for the closed form, exact at (2,2), (3,3), (1,2).
void criterion10(std::vector<Theorem8Row>* rows_out) {
  Timer t;
  Budget budget;
  budget.max_nodes = 4'000'000'000ull;
  budget.max_seconds = [] {
    if (const char* env = std::getenv("BRAMSEY_STRETCH_BUDGET_S"))
      return std::strtod(env, nullptr);
    return 3600.0;
  }();
  auto rows = compare_with_theorem8(3, 3, budget);
  bool ok = !rows.empty();
  int mismatches = 0;
  for (const auto& row : rows) {
    if (row.match.has_value() && !*row.match) ++mismatches;
    bool must_match = (row.k == 2 && row.l == 2) ||
                      (row.k == 3 && row.l == 3) ||
                      (row.k == 1 && row.l == 2);
    if (must_match && row.match != true) ok = false;
    std::printf("     r(%d,%d,%d): searched %s, formula %d%s\n", row.k, row.l,
                row.l,
                row.searched.value
                    ? std::to_string(*row.searched.value).c_str()
                    : "undetermined",
                row.formula,
                row.match ? (*row.match ? "" : "  [MISMATCH recorded]")
                          : "  [open]");
  }
  report(10, ok,
         fmt("closed-form comparison grid 3x3 generated; %d degenerate "
             "mismatches recorded; exact match at (2,2),(3,3),(1,2) "
             "(%.1f s)",
             mismatches, t.elapsed()));
  *rows_out = std::move(rows);
}

// 11. Stretch: full refutation for r(3,3,3) = 7 at n = 7 (non-blocking).
void criterion11() {
  Budget budget;
  budget.max_nodes = 50'000'000'000ull;
  budget.max_seconds = [] {
    if (const char* env = std::getenv("BRAMSEY_STRETCH_BUDGET_S"))
      return std::strtod(env, nullptr);
    return 3600.0;
  }();
  auto outcome = find_avoiding(7, Thresholds(3, 3, 3), budget);
  bool proved = outcome.status == SearchStatus::Refuted;
  report(11, proved,
         fmt("stretch: n=7 for (3,3,3) -> %s after %llu nodes in %.2f s "
             "(budget %.0f s); together with the witness at n=6 this %s "
             "r(3,3,3)=7",
             search_status_name(outcome.status),
             (unsigned long long)outcome.nodes_explored, outcome.elapsed_s,
             budget.max_seconds, proved ? "proves" : "leaves open"),
         /*blocking=*/false);
}

}  // namespace

int main(int argc, char** argv) {
  unsigned seed = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0)
      seed = static_cast<unsigned>(std::strtoul(argv[i + 1], nullptr, 10));
    if (std::strcmp(argv[i], "--cli") == 0) cli_path = argv[i + 1];
  }

  std::printf("acceptance suite (seed %u)\n", seed);
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6(seed);
  criterion7(seed);
  criterion8();
  criterion9(seed);
  std::vector<Theorem8Row> rows;
  criterion10(&rows);
  criterion11();

  if (failures) {
    std::printf("%d blocking criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all blocking criteria passed\n");
  return 0;
}
