#pragma once

#include <vector>

#include "spinecalc/basis.hpp"
#include "spinecalc/spine.hpp"

namespace spinecalc {

// The simplicial embedding that appends one particle to arm m: vertex arms
// go to arms + e_m, kinds and slide arms are preserved.
struct EmbeddingMap {
  int arm = 0;
  std::vector<int> vertex_map;  // level k-1 vertex -> level k vertex
  std::vector<int> edge_map;    // level k-1 edge -> level k edge
};

// gk1 and gk must be spines over the same star with gk.k = gk1.k + 1.
EmbeddingMap embed(const SpineGraph& gk1, const SpineGraph& gk, int m);

// A spanning tree of gk containing the image of every tree edge of tk1,
// extended breadth-first from the basepoint over the remaining edges in
// ascending index order. Images of non-tree edges stay outside the tree:
// their endpoints are already connected through the image tree.
SpanningTree compatible_tree(const SpineGraph& gk, const EmbeddingMap& e, const SpanningTree& tk1);

struct GeneratorImage {
  int source_gen = 0;  // 1-based index at level k-1
  int target_gen = 0;  // 1-based index in the compatible tree's numbering
  int sign = 0;        // +1 or -1; 0 when the image is not a single letter
};

struct EmbeddingReport {
  int n = 0;
  int k = 0;  // target level
  int arm = 0;
  std::vector<GeneratorImage> images;
  bool verified = false;  // every image a single letter, target letters distinct
};

// Pushes every level k-1 generator loop through the embedding, conjugates to
// the level-k basepoint along the tree, and evaluates the word. The induced
// map on free groups is injective iff the report verifies.
EmbeddingReport verify_monomorphism(const SpineGraph& gk1, const SpineGraph& gk,
                                    const EmbeddingMap& e, const SpanningTree& tk1,
                                    const SpanningTree& tk);

}  // namespace spinecalc
