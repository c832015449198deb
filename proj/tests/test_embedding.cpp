#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "spinecalc/basis.hpp"
#include "spinecalc/embedding.hpp"
#include "spinecalc/spine.hpp"

using namespace spinecalc;

TEST_CASE("appending a particle to arm 1 maps the hexagon as expected") {
  const SpineGraph g2 = build_spine(StarParams(3, 2));
  const SpineGraph g3 = build_spine(StarParams(3, 3));
  const EmbeddingMap e = embed(g2, g3, 1);

  REQUIRE(e.vertex_map.size() == 6);
  REQUIRE(e.edge_map.size() == 6);

  // (1,0,0) type I -> (2,0,0) type I
  const int img2 = e.vertex_map[g2.vertex_index(SpineVertex{VertexKind::TypeI, {1, 0, 0}})];
  CHECK(g3.vertices[img2].kind == VertexKind::TypeI);
  CHECK(g3.vertices[img2].arms == ArmVector{2, 0, 0});

  // (1,1,0) type II -> (2,1,0) type II
  const int img5 = e.vertex_map[g2.vertex_index(SpineVertex{VertexKind::TypeII, {1, 1, 0}})];
  CHECK(g3.vertices[img5].kind == VertexKind::TypeII);
  CHECK(g3.vertices[img5].arms == ArmVector{2, 1, 0});

  // ((1,0,0) -> (1,1,0)) slides arm 2; its image slides arm 2 between the images.
  const int src_edge = g2.edge_between(g2.vertex_index(SpineVertex{VertexKind::TypeI, {1, 0, 0}}),
                                       g2.vertex_index(SpineVertex{VertexKind::TypeII, {1, 1, 0}}));
  REQUIRE(src_edge >= 0);
  const SpineEdge& img_edge = g3.edges[e.edge_map[src_edge]];
  CHECK(img_edge.c0 == img2);
  CHECK(img_edge.c1 == img5);
  CHECK(img_edge.slide_arm == 2);
}

TEST_CASE("embeddings are injective and preserve kind, arms, and adjacency") {
  for (int n : {3, 4}) {
    const SpineGraph lo = build_spine(StarParams(n, 2));
    const SpineGraph hi = build_spine(StarParams(n, 3));
    for (int m = 1; m <= n; ++m) {
      const EmbeddingMap e = embed(lo, hi, m);

      std::set<int> vimg(e.vertex_map.begin(), e.vertex_map.end());
      CHECK(vimg.size() == e.vertex_map.size());
      std::set<int> eimg(e.edge_map.begin(), e.edge_map.end());
      CHECK(eimg.size() == e.edge_map.size());

      for (std::size_t v = 0; v < lo.vertices.size(); ++v) {
        const SpineVertex& src = lo.vertices[v];
        const SpineVertex& dst = hi.vertices[e.vertex_map[v]];
        CHECK(dst.kind == src.kind);
        for (int a = 0; a < n; ++a)
          CHECK(dst.arms[a] == src.arms[a] + (a == m - 1 ? 1 : 0));
      }
      for (std::size_t i = 0; i < lo.edges.size(); ++i) {
        const SpineEdge& src = lo.edges[i];
        const SpineEdge& dst = hi.edges[e.edge_map[i]];
        CHECK(dst.c0 == e.vertex_map[src.c0]);
        CHECK(dst.c1 == e.vertex_map[src.c1]);
        CHECK(dst.slide_arm == src.slide_arm);
      }
    }
  }
}

TEST_CASE("embedding rejects mismatched graphs and arms out of range") {
  const SpineGraph g2 = build_spine(StarParams(3, 2));
  const SpineGraph g3 = build_spine(StarParams(3, 3));
  const SpineGraph h3 = build_spine(StarParams(4, 3));
  CHECK_THROWS_AS(embed(g3, g2, 1), std::invalid_argument);
  CHECK_THROWS_AS(embed(g2, g2, 1), std::invalid_argument);
  CHECK_THROWS_AS(embed(g2, h3, 1), std::invalid_argument);
  CHECK_THROWS_AS(embed(g2, g3, 0), std::invalid_argument);
  CHECK_THROWS_AS(embed(g2, g3, 4), std::invalid_argument);
}

TEST_CASE("the compatible tree contains exactly the image of the source tree") {
  const SpineGraph g2 = build_spine(StarParams(3, 2));
  const SpineGraph g3 = build_spine(StarParams(3, 3));
  const SpanningTree t2 = build_tree(g2);
  for (int m = 1; m <= 3; ++m) {
    const EmbeddingMap e = embed(g2, g3, m);
    const SpanningTree t3 = compatible_tree(g3, e, t2);
    CHECK(t3.root == default_root(g3));

    int tree_edges = 0;
    for (char b : t3.in_tree) tree_edges += b;
    CHECK(tree_edges == static_cast<int>(g3.vertices.size()) - 1);

    for (std::size_t i = 0; i < g2.edges.size(); ++i) {
      if (t2.in_tree[i])
        CHECK(t3.in_tree[e.edge_map[i]] == 1);
      else
        CHECK(t3.in_tree[e.edge_map[i]] == 0);
    }
    for (int v = 0; v < static_cast<int>(g3.vertices.size()); ++v)
      CHECK(path_to_root(t3, v).back() == t3.root);
  }
}

TEST_CASE("every embedding verifies as a monomorphism on generators") {
  const SpineGraph g2 = build_spine(StarParams(3, 2));
  const SpineGraph g3 = build_spine(StarParams(3, 3));
  const SpanningTree t2 = build_tree(g2);
  const EmbeddingMap e = embed(g2, g3, 1);
  const SpanningTree t3 = compatible_tree(g3, e, t2);
  const EmbeddingReport r = verify_monomorphism(g2, g3, e, t2, t3);
  CHECK(r.verified);
  CHECK(r.n == 3);
  CHECK(r.k == 3);
  CHECK(r.arm == 1);
  REQUIRE(r.images.size() == 1);
  CHECK(r.images[0].source_gen == 1);
  CHECK(r.images[0].target_gen >= 1);
  CHECK(r.images[0].target_gen <= 3);
  CHECK((r.images[0].sign == 1 || r.images[0].sign == -1));
}

TEST_CASE("generator images stay distinct across arms at n = 4") {
  const SpineGraph lo = build_spine(StarParams(4, 2));
  const SpineGraph hi = build_spine(StarParams(4, 3));
  const SpanningTree tlo = build_tree(lo);
  for (int m = 1; m <= 4; ++m) {
    const EmbeddingMap e = embed(lo, hi, m);
    const SpanningTree thi = compatible_tree(hi, e, tlo);
    const EmbeddingReport r = verify_monomorphism(lo, hi, e, tlo, thi);
    CHECK(r.verified);
    REQUIRE(r.images.size() == 3);
    std::set<int> targets;
    for (const GeneratorImage& gi : r.images) {
      CHECK((gi.sign == 1 || gi.sign == -1));
      targets.insert(gi.target_gen);
    }
    CHECK(targets.size() == 3);
  }
}

TEST_CASE("appending twice to the same arm composes") {
  const SpineGraph g2 = build_spine(StarParams(3, 2));
  const SpineGraph g3 = build_spine(StarParams(3, 3));
  const SpineGraph g4 = build_spine(StarParams(3, 4));
  for (int m = 1; m <= 3; ++m) {
    const EmbeddingMap lo = embed(g2, g3, m);
    const EmbeddingMap hi = embed(g3, g4, m);
    for (std::size_t v = 0; v < g2.vertices.size(); ++v) {
      const SpineVertex& src = g2.vertices[v];
      const SpineVertex& dst = g4.vertices[hi.vertex_map[lo.vertex_map[v]]];
      CHECK(dst.kind == src.kind);
      for (int a = 0; a < 3; ++a)
        CHECK(dst.arms[a] == src.arms[a] + (a == m - 1 ? 2 : 0));
    }
    for (std::size_t i = 0; i < g2.edges.size(); ++i) {
      const SpineEdge& src = g2.edges[i];
      const SpineEdge& dst = g4.edges[hi.edge_map[lo.edge_map[i]]];
      CHECK(dst.c0 == hi.vertex_map[lo.vertex_map[src.c0]]);
      CHECK(dst.c1 == hi.vertex_map[lo.vertex_map[src.c1]]);
      CHECK(dst.slide_arm == src.slide_arm);
    }
  }
}

TEST_CASE("two-arm stars verify vacuously") {
  const SpineGraph lo = build_spine(StarParams(2, 2));
  const SpineGraph hi = build_spine(StarParams(2, 3));
  const SpanningTree tlo = build_tree(lo);
  const EmbeddingMap e = embed(lo, hi, 2);
  const SpanningTree thi = compatible_tree(hi, e, tlo);
  const EmbeddingReport r = verify_monomorphism(lo, hi, e, tlo, thi);
  CHECK(r.verified);
  CHECK(r.images.empty());
}
