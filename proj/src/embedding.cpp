#include "spinecalc/embedding.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spinecalc {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

EmbeddingMap embed(const SpineGraph& gk1, const SpineGraph& gk, int m) {
  if (gk1.n != gk.n) throw std::invalid_argument("embedding requires the same star");
  if (gk.k != gk1.k + 1) throw std::invalid_argument("embedding raises the particle count by one");
  if (m < 1 || m > gk.n) throw std::invalid_argument("embedding arm out of range");

  EmbeddingMap emb;
  emb.arm = m;
  emb.vertex_map.reserve(gk1.vertices.size());
  for (const SpineVertex& v : gk1.vertices) {
    SpineVertex image = v;
    image.arms[m - 1] += 1;
    const int idx = gk.vertex_index(image);
    if (idx < 0) throw std::invalid_argument("embedded vertex is missing from the target spine");
    emb.vertex_map.push_back(idx);
  }

  emb.edge_map.reserve(gk1.edges.size());
  for (const SpineEdge& e : gk1.edges) {
    const int idx = gk.edge_from(emb.vertex_map[e.c0], e.slide_arm);
    if (idx < 0) throw std::invalid_argument("embedded edge is missing from the target spine");
    emb.edge_map.push_back(idx);
  }
  return emb;
}

SpanningTree compatible_tree(const SpineGraph& gk, const EmbeddingMap& e,
                             const SpanningTree& tk1) {
  const int nv = static_cast<int>(gk.vertices.size());
  const int ne = static_cast<int>(gk.edges.size());
  if (static_cast<int>(e.vertex_map.size()) > nv ||
      e.edge_map.size() != tk1.in_tree.size())
    throw std::invalid_argument("embedding does not match the tree");

  SpanningTree t;
  t.root = default_root(gk);
  t.parent.assign(nv, -1);
  t.parent_edge.assign(nv, -1);
  t.in_tree.assign(ne, 0);

  UnionFind uf(nv);
  for (std::size_t se = 0; se < e.edge_map.size(); ++se) {
    if (!tk1.in_tree[se]) continue;
    const int te = e.edge_map[se];
    t.in_tree[te] = 1;
    if (!uf.unite(gk.edges[te].c0, gk.edges[te].c1))
      throw std::invalid_argument("image tree edges contain a cycle");
  }

  // Attach the remaining components breadth-first, component by component.
  std::map<int, std::vector<int>> members;
  for (int v = 0; v < nv; ++v) members[uf.find(v)].push_back(v);

  std::vector<char> attached(nv, 0);
  std::deque<int> queue;
  for (int v : members[uf.find(t.root)]) {
    attached[v] = 1;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int edge : gk.incident[v]) {
      const int w = gk.other_end(edge, v);
      if (attached[w]) continue;
      t.in_tree[edge] = 1;
      for (int u : members[uf.find(w)]) {
        attached[u] = 1;
        queue.push_back(u);
      }
      uf.unite(v, w);
    }
  }
  if (std::find(attached.begin(), attached.end(), char(0)) != attached.end())
    throw std::invalid_argument("target spine is not connected");

  // Orient every tree edge away from the root.
  std::vector<char> seen(nv, 0);
  seen[t.root] = 1;
  queue.push_back(t.root);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int edge : gk.incident[v]) {
      if (!t.in_tree[edge]) continue;
      const int w = gk.other_end(edge, v);
      if (seen[w]) continue;
      seen[w] = 1;
      t.parent[w] = v;
      t.parent_edge[w] = edge;
      queue.push_back(w);
    }
  }

  for (int edge = 0; edge < ne; ++edge)
    if (!t.in_tree[edge]) t.non_tree.push_back(edge);
  if (static_cast<int>(t.non_tree.size()) != ne - (nv - 1))
    throw std::invalid_argument("compatible tree is not spanning");
  return t;
}

EmbeddingReport verify_monomorphism(const SpineGraph& gk1, const SpineGraph& gk,
                                    const EmbeddingMap& e, const SpanningTree& tk1,
                                    const SpanningTree& tk) {
  EmbeddingReport report;
  report.n = gk.n;
  report.k = gk.k;
  report.arm = e.arm;

  const GeneratorSet source = basis(gk1, tk1);
  report.verified = true;
  std::set<int> used;
  for (const Generator& gen : source.generators) {
    std::vector<int> mapped;
    mapped.reserve(gen.loop_vertices.size());
    for (int v : gen.loop_vertices) mapped.push_back(e.vertex_map[v]);

    // Conjugate to the level-k basepoint; tree legs do not change the word.
    std::vector<int> based = path_to_root(tk, mapped.front());
    std::reverse(based.begin(), based.end());
    based.insert(based.end(), mapped.begin() + 1, mapped.end());
    const std::vector<int> back = path_to_root(tk, mapped.back());
    based.insert(based.end(), back.begin() + 1, back.end());

    const FreeWord w = loop_to_word(gk, tk, based);
    GeneratorImage image;
    image.source_gen = gen.index;
    if (w.size() == 1) {
      image.target_gen = std::abs(w[0]);
      image.sign = w[0] > 0 ? 1 : -1;
      if (!used.insert(image.target_gen).second) report.verified = false;
    } else {
      report.verified = false;
    }
    report.images.push_back(image);
  }
  return report;
}

}  // namespace spinecalc
