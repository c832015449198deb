#pragma once

#include <string>
#include <vector>

#include "spinecalc/spine.hpp"

namespace spinecalc {

// Rank of the fundamental group of the spine: 1 - chi(D_k(S_n)), in closed
// form. Requires n >= 2 and k >= 2.
long long rank_formula(int n, int k);

// The basepoint: the type I vertex with all particles on arm 1 (the last
// vertex of the type I block).
int default_root(const SpineGraph& g);

// Spanning tree grown breadth-first from the basepoint, always taking edges
// in ascending index order.
struct SpanningTree {
  int root = 0;
  std::vector<int> parent;       // parent vertex per vertex, -1 at the root
  std::vector<int> parent_edge;  // edge to the parent, -1 at the root
  std::vector<char> in_tree;     // per edge
  std::vector<int> non_tree;     // ascending edge indices
};

SpanningTree build_tree(const SpineGraph& g);

// Vertex sequence v, parent(v), ..., root.
std::vector<int> path_to_root(const SpanningTree& t, int v);

// One free generator per non-tree edge: the loop runs from the root to the
// edge's type I endpoint inside the tree, crosses the edge, and returns.
struct Generator {
  int index = 0;  // 1-based letter number, ascending with edge index
  int edge = -1;
  std::vector<int> loop_vertices;  // closed walk, first = last = root
};

struct GeneratorSet {
  std::vector<Generator> generators;
};

GeneratorSet basis(const SpineGraph& g, const SpanningTree& t);

// A word in the free group: letters +-j for generator j. Reduced form has no
// adjacent canceling pair.
using FreeWord = std::vector<int>;

FreeWord reduce_word(FreeWord w);
FreeWord concat_words(const FreeWord& a, const FreeWord& b);
FreeWord inverse_word(const FreeWord& w);

// The element represented by a closed root-based walk (vertex indices), as a
// reduced word: tree edges contribute nothing, the non-tree edge of
// generator j contributes +-j by traversal direction (type I to type II is
// positive). The empty walk is the empty word.
FreeWord loop_to_word(const SpineGraph& g, const SpanningTree& t, const std::vector<int>& walk);

std::string word_to_string(const FreeWord& w);  // "g1 g2^-1", identity is "e"

}  // namespace spinecalc
