#include "spinecalc/basis.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "spinecalc/combinatorics.hpp"

namespace spinecalc {

long long rank_formula(int n, int k) {
  if (n < 2) throw std::invalid_argument("rank_formula requires n >= 2");
  if (k < 2) throw std::invalid_argument("rank_formula requires k >= 2");
  return 1 + (n - 1) * binomial(n + k - 2, n - 1) - binomial(n + k - 1, n - 1);
}

int default_root(const SpineGraph& g) {
  if (g.num_type1 == 0) throw std::invalid_argument("spine has no type I vertex");
  return g.num_type1 - 1;
}

SpanningTree build_tree(const SpineGraph& g) {
  const int nv = static_cast<int>(g.vertices.size());
  const int root = default_root(g);

  SpanningTree t;
  t.root = root;
  t.parent.assign(nv, -1);
  t.parent_edge.assign(nv, -1);
  t.in_tree.assign(g.edges.size(), 0);

  std::vector<char> seen(nv, 0);
  seen[root] = 1;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int e : g.incident[v]) {
      const int w = g.other_end(e, v);
      if (seen[w]) continue;
      seen[w] = 1;
      t.parent[w] = v;
      t.parent_edge[w] = e;
      t.in_tree[e] = 1;
      queue.push_back(w);
    }
  }
  if (std::find(seen.begin(), seen.end(), char(0)) != seen.end())
    throw std::invalid_argument("spine is not connected");

  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
    if (!t.in_tree[e]) t.non_tree.push_back(e);
  return t;
}

std::vector<int> path_to_root(const SpanningTree& t, int v) {
  if (v < 0 || v >= static_cast<int>(t.parent.size()))
    throw std::invalid_argument("vertex out of range");
  std::vector<int> path{v};
  while (path.back() != t.root) {
    const int p = t.parent[path.back()];
    if (p < 0) throw std::invalid_argument("vertex is not connected to the root");
    path.push_back(p);
  }
  return path;
}

GeneratorSet basis(const SpineGraph& g, const SpanningTree& t) {
  if (t.in_tree.size() != g.edges.size() || t.parent.size() != g.vertices.size())
    throw std::invalid_argument("tree does not match the graph");

  GeneratorSet gs;
  for (std::size_t i = 0; i < t.non_tree.size(); ++i) {
    const int e = t.non_tree[i];
    Generator gen;
    gen.index = static_cast<int>(i) + 1;
    gen.edge = e;
    std::vector<int> down = path_to_root(t, g.edges[e].c0);
    std::reverse(down.begin(), down.end());  // root ... c0
    const std::vector<int> up = path_to_root(t, g.edges[e].c1);
    gen.loop_vertices = std::move(down);
    gen.loop_vertices.insert(gen.loop_vertices.end(), up.begin(), up.end());
    gs.generators.push_back(std::move(gen));
  }
  return gs;
}

FreeWord reduce_word(FreeWord w) {
  FreeWord out;
  for (int letter : w) {
    if (letter == 0) throw std::invalid_argument("word letters must be nonzero");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

FreeWord concat_words(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return reduce_word(std::move(w));
}

FreeWord inverse_word(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

FreeWord loop_to_word(const SpineGraph& g, const SpanningTree& t, const std::vector<int>& walk) {
  if (walk.empty()) return {};
  if (walk.front() != walk.back()) throw std::invalid_argument("walk is not closed");
  if (walk.front() != t.root) throw std::invalid_argument("walk must be based at the root");

  std::unordered_map<int, int> gen_of_edge;
  for (std::size_t i = 0; i < t.non_tree.size(); ++i)
    gen_of_edge[t.non_tree[i]] = static_cast<int>(i) + 1;

  FreeWord w;
  for (std::size_t leg = 0; leg + 1 < walk.size(); ++leg) {
    const int u = walk[leg];
    const int v = walk[leg + 1];
    const int e = g.edge_between(u, v);
    if (e < 0) throw std::invalid_argument("consecutive walk vertices are not adjacent");
    const auto it = gen_of_edge.find(e);
    if (it == gen_of_edge.end()) continue;
    w.push_back(u == g.edges[e].c0 ? it->second : -it->second);
  }
  return reduce_word(std::move(w));
}

std::string word_to_string(const FreeWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += 'g';
    s += std::to_string(std::abs(w[i]));
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

}  // namespace spinecalc
