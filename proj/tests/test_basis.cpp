#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "spinecalc/basis.hpp"
#include "spinecalc/combinatorics.hpp"
#include "spinecalc/spine.hpp"

using namespace spinecalc;

namespace {

// Fraction-free Gaussian elimination; exact on integer matrices.
int integer_rank(std::vector<std::vector<long long>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  long long prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

// Signed edge-traversal counts of a closed walk.
std::vector<long long> edge_vector(const SpineGraph& g, const std::vector<int>& walk) {
  std::vector<long long> v(g.edges.size(), 0);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const int e = g.edge_between(walk[i], walk[i + 1]);
    REQUIRE(e >= 0);
    v[e] += walk[i] == g.edges[e].c0 ? 1 : -1;
  }
  return v;
}

}  // namespace

TEST_CASE("rank formula reproduces the four reference ranks") {
  CHECK(rank_formula(3, 2) == 1);
  CHECK(rank_formula(3, 3) == 3);
  CHECK(rank_formula(4, 2) == 3);
  CHECK(rank_formula(4, 3) == 11);
  CHECK_THROWS_AS(rank_formula(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(rank_formula(3, 1), std::invalid_argument);
}

TEST_CASE("rank formula reproduces the closed-form families") {
  for (int k = 2; k <= 8; ++k) CHECK(rank_formula(3, k) == binomial(k, 2));
  for (int n = 3; n <= 8; ++n) CHECK(rank_formula(n, 2) == binomial(n - 1, 2));
  for (int n = 3; n <= 8; ++n) {
    const long long third = (2 * n + 3) * binomial(n - 1, 2);
    REQUIRE(third % 3 == 0);
    CHECK(rank_formula(n, 3) == third / 3);
  }
  for (int k = 2; k <= 8; ++k) CHECK(rank_formula(2, k) == 0);
}

TEST_CASE("rank formula equals the cycle count of the enumerated graph") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= 5; ++k) {
      const SpineGraph g = build_spine(StarParams(n, k));
      CHECK(rank_formula(n, k) == static_cast<long long>(g.edges.size()) -
                                      static_cast<long long>(g.vertices.size()) + 1);
    }
  }
}

TEST_CASE("the hexagon tree and its single generator are reproduced exactly") {
  const SpineGraph g = build_spine(StarParams(3, 2));
  const SpanningTree t = build_tree(g);
  CHECK(t.root == 2);  // type I vertex (1,0,0)
  CHECK(default_root(g) == 2);
  const std::vector<char> want_tree{1, 0, 1, 1, 1, 1};
  CHECK(t.in_tree == want_tree);
  CHECK(t.non_tree == std::vector<int>{1});

  const GeneratorSet gs = basis(g, t);
  REQUIRE(gs.generators.size() == 1);
  CHECK(gs.generators[0].index == 1);
  CHECK(gs.generators[0].edge == 1);
  CHECK(gs.generators[0].loop_vertices == std::vector<int>{2, 4, 0, 3, 1, 5, 2});
}

TEST_CASE("spanning trees span with the expected edge counts") {
  const SpineGraph g = build_spine(StarParams(4, 3));
  const SpanningTree t = build_tree(g);
  int tree_edges = 0;
  for (char b : t.in_tree) tree_edges += b;
  CHECK(tree_edges == 25);
  CHECK(t.non_tree.size() == 11);
  CHECK(basis(g, t).generators.size() == 11);
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    const std::vector<int> path = path_to_root(t, v);
    CHECK(path.front() == v);
    CHECK(path.back() == t.root);
  }
}

TEST_CASE("free reduction, concatenation, and inversion behave as expected") {
  CHECK(reduce_word({1, -1}) == FreeWord{});
  CHECK(reduce_word({1, 2, -2, -1}) == FreeWord{});
  CHECK(reduce_word({1, 2, -1}) == FreeWord{1, 2, -1});
  CHECK(reduce_word({-3, 3, 2}) == FreeWord{2});
  CHECK_THROWS_AS(reduce_word({1, 0}), std::invalid_argument);

  CHECK(inverse_word({1, 2}) == FreeWord{-2, -1});
  CHECK(concat_words({1, 2}, {-2, 3}) == FreeWord{1, 3});
  CHECK(concat_words({1, 2}, inverse_word({1, 2})) == FreeWord{});

  CHECK(word_to_string({}) == "e");
  CHECK(word_to_string({1, -2, 3}) == "g1 g2^-1 g3");
}

TEST_CASE("loop evaluation maps tree loops to the identity and generators to letters") {
  const SpineGraph g = build_spine(StarParams(3, 3));
  const SpanningTree t = build_tree(g);
  const GeneratorSet gs = basis(g, t);
  REQUIRE(gs.generators.size() == 3);

  CHECK(loop_to_word(g, t, {}) == FreeWord{});
  CHECK(loop_to_word(g, t, {t.root}) == FreeWord{});

  for (const Generator& gen : gs.generators) {
    CHECK(loop_to_word(g, t, gen.loop_vertices) == FreeWord{gen.index});
    std::vector<int> reversed(gen.loop_vertices.rbegin(), gen.loop_vertices.rend());
    CHECK(loop_to_word(g, t, reversed) == FreeWord{-gen.index});
  }

  // A tree-only loop: out along the tree and straight back.
  const std::vector<int> down = path_to_root(t, 0);
  std::vector<int> loop(down.rbegin(), down.rend());
  loop.insert(loop.end(), std::next(down.begin()), down.end());
  CHECK(loop_to_word(g, t, loop) == FreeWord{});

  CHECK_THROWS_AS(loop_to_word(g, t, {t.root, 0}), std::invalid_argument);
  CHECK_THROWS_AS(loop_to_word(g, t, {0, 0}), std::invalid_argument);
}

TEST_CASE("loop evaluation is a homomorphism and ignores backtracking") {
  const SpineGraph g = build_spine(StarParams(4, 3));
  const SpanningTree t = build_tree(g);
  const GeneratorSet gs = basis(g, t);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gs.generators.size()) - 1);

  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<int>& l1 = gs.generators[pick(rng)].loop_vertices;
    const std::vector<int>& l2 = gs.generators[pick(rng)].loop_vertices;
    std::vector<int> joined = l1;
    joined.insert(joined.end(), std::next(l2.begin()), l2.end());
    CHECK(loop_to_word(g, t, joined) ==
          concat_words(loop_to_word(g, t, l1), loop_to_word(g, t, l2)));

    // Insert a backtracking detour at a random position.
    std::uniform_int_distribution<int> pos(0, static_cast<int>(joined.size()) - 1);
    const int at = pos(rng);
    const int v = joined[at];
    const int e = g.incident[v].front();
    const int w = g.other_end(e, v);
    std::vector<int> detoured = joined;
    detoured.insert(detoured.begin() + at + 1, {w, v});
    CHECK(loop_to_word(g, t, detoured) == loop_to_word(g, t, joined));
  }
}

TEST_CASE("generator images are independent in homology") {
  for (const auto& [n, k] : {std::pair{3, 2}, {3, 3}}) {
    const SpineGraph g = build_spine(StarParams(n, k));
    const SpanningTree t = build_tree(g);
    const GeneratorSet gs = basis(g, t);
    std::vector<std::vector<long long>> rows;
    for (const Generator& gen : gs.generators) rows.push_back(edge_vector(g, gen.loop_vertices));
    CHECK(integer_rank(rows) == static_cast<int>(gs.generators.size()));
  }
}
