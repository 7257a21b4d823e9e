#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bramsey/constructions.hpp"
#include "bramsey/matching.hpp"
#include "oracles.hpp"

using namespace bramsey;

namespace {

bool avoids_claimed(const Coloring& c, const Thresholds& th) {
  return !meets_thresholds(c, th.red, th.green, th.blue).met;
}

std::vector<Color> random_rb_pattern(std::size_t size, std::mt19937& rng) {
  std::vector<Color> pattern(size);
  for (auto& c : pattern) c = rng() % 2 ? Color::Red : Color::Blue;
  return pattern;
}

}  // namespace

TEST_CASE("example1 shapes") {
  SECTION("(1,1,1) avoids (2,2,2) on K33") {
    Coloring c = example1(1, 1, 1);
    CHECK(c.n_left() == 3);
    CHECK(c.is_complete());
    for (Color col : all_colors)
      CHECK(largest_connected_matching(c, col).size == 1);
  }

  SECTION("(0,0,1) is the all-blue single edge") {
    Coloring c = example1(0, 0, 1);
    CHECK(c == Coloring::filled(1, 1, Color::Blue));
  }

  SECTION("symmetric lower-bound family up to k=8") {
    for (int k = 2; k <= 8; ++k) {
      Coloring c = example1(k - 1, k - 1, k - 1);
      CHECK(c.n_left() == 3 * k - 3);
      CHECK(avoids_claimed(c, claimed_avoidance_example1(k - 1, k - 1, k - 1)));
    }
  }

  SECTION("each used colour spans one component A_i x Right") {
    Coloring c = example1(2, 4, 3);
    const int sizes[3] = {2, 4, 3};
    for (Color col : all_colors) {
      auto comps = components(c, col);
      REQUIRE(comps.size() == 1);
      CHECK(static_cast<int>(comps[0].left_vertices.size()) ==
            sizes[static_cast<int>(col)]);
      CHECK(static_cast<int>(comps[0].right_vertices.size()) == c.n_right());
      CHECK(matching_number(comps[0]) == sizes[static_cast<int>(col)]);
    }
  }
}

TEST_CASE("lemma6 coloring") {
  SECTION("degenerate k=l gives three balanced complete blocks per colour") {
    Coloring c = lemma6_coloring(2, 2);
    CHECK(c.n_left() == 6);
    CHECK(c.is_complete());
    for (Color col : all_colors) {
      auto comps = components(c, col);
      REQUIRE(comps.size() == 3);
      for (const auto& comp : comps) {
        CHECK(comp.left_vertices.size() == 2);
        CHECK(comp.right_vertices.size() == 2);
        CHECK(comp.edges.size() == 4);
      }
    }
    CHECK(avoids_claimed(c, claimed_avoidance_lemma6(2, 2)));
  }

  SECTION("(3,2) sits on K_{8,8} and avoids (4,3,3)") {
    Coloring c = lemma6_coloring(3, 2);
    CHECK(c.n_left() == 8);
    CHECK(lemma6_side(3, 2) == 8);
    CHECK(largest_connected_matching(c, Color::Red).size <= 3);
    CHECK(largest_connected_matching(c, Color::Green).size <= 2);
    CHECK(largest_connected_matching(c, Color::Blue).size <= 2);
    CHECK(avoids_claimed(c, claimed_avoidance_lemma6(3, 2)));
  }

  SECTION("(4,3) sits on K_{11,11} and avoids (5,4,4)") {
    Coloring c = lemma6_coloring(4, 3);
    CHECK(c.n_left() == 11);
    CHECK(avoids_claimed(c, claimed_avoidance_lemma6(4, 3)));
  }

  SECTION("parameter range enforced") {
    CHECK_THROWS_AS(lemma6_coloring(3, 1), std::invalid_argument);  // l < k/2
    CHECK_THROWS_AS(lemma6_coloring(2, 3), std::invalid_argument);  // l > k
    CHECK_THROWS_AS(lemma6_coloring(0, 0), std::invalid_argument);
  }

  SECTION("full valid grid up to k=8 avoids its thresholds") {
    for (int k = 1; k <= 8; ++k)
      for (int l = (k + 1) / 2; l <= k; ++l) {
        if (l < 1 || 2 * l < k) continue;
        Coloring c = lemma6_coloring(k, l);
        CHECK(c.n_left() == lemma6_side(k, l));
        CHECK(c.is_complete());
        CHECK(avoids_claimed(c, claimed_avoidance_lemma6(k, l)));
      }
  }
}

TEST_CASE("stability example") {
  SECTION("k=3, blocks (3,2,1), all-red pattern") {
    std::vector<Color> pattern(2 * 1, Color::Red);
    Coloring c = stability_example(3, 3, 2, 1, pattern);
    CHECK(c.n_left() == 6);
    CHECK(c.is_complete());
    CHECK(avoids_claimed(c, claimed_avoidance_stability(3)));
  }

  SECTION("k=3, blocks (2,2,2), random patterns") {
    std::mt19937 rng(0);
    for (int trial = 0; trial < 20; ++trial) {
      auto pattern = random_rb_pattern(2 * 2, rng);
      Coloring c = stability_example(3, 2, 2, 2, pattern);
      CHECK(avoids_claimed(c, claimed_avoidance_stability(3)));
    }
  }

  SECTION("k=2, blocks (1,1,1), all-blue") {
    std::vector<Color> pattern(1, Color::Blue);
    Coloring c = stability_example(2, 1, 1, 1, pattern);
    CHECK(c.n_left() == 3);
    CHECK(avoids_claimed(c, claimed_avoidance_stability(2)));
  }

  SECTION("size constraints enforced") {
    std::vector<Color> pattern;
    CHECK_THROWS_AS(stability_example(3, 3, 3, 1, pattern),
                    std::invalid_argument);  // b1+b2+b3 != 3k-3
    CHECK_THROWS_AS(stability_example(3, 1, 2, 3, pattern),
                    std::invalid_argument);  // b3 > k-1
    CHECK_THROWS_AS(
        stability_example(3, 3, 2, 1, std::vector<Color>(5, Color::Red)),
        std::invalid_argument);  // wrong pattern length
    CHECK_THROWS_AS(
        stability_example(3, 3, 2, 1, std::vector<Color>(2, Color::Green)),
        std::invalid_argument);  // green not allowed in the pattern
  }

  SECTION("random partitions and patterns never reach (k,k,k)") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
      int k = 2 + static_cast<int>(rng() % 3);
      int n = 3 * k - 3;
      std::uniform_int_distribution<int> b3d(0, k - 1);
      int b3 = b3d(rng);
      std::uniform_int_distribution<int> b1d(0, n - b3);
      int b1 = b1d(rng);
      int b2 = n - b3 - b1;
      auto pattern = random_rb_pattern(static_cast<std::size_t>(k - 1) * b3, rng);
      Coloring c = stability_example(k, b1, b2, b3, pattern);
      CHECK(c.is_complete());
      CHECK(avoids_claimed(c, claimed_avoidance_stability(k)));
    }
  }
}

TEST_CASE("claimed avoidance thresholds") {
  CHECK(claimed_avoidance_example1(2, 2, 2) == Thresholds(3, 3, 3));
  CHECK(claimed_avoidance_lemma6(3, 2) == Thresholds(4, 3, 3));
  CHECK(claimed_avoidance_stability(4) == Thresholds(4, 4, 4));
}
