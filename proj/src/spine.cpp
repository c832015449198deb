#include "spinecalc/spine.hpp"

#include <algorithm>
#include <stdexcept>

#include "spinecalc/combinatorics.hpp"

namespace spinecalc {

namespace {

int nonzero_entries(const ArmVector& a) {
  return static_cast<int>(std::count_if(a.begin(), a.end(), [](int x) { return x != 0; }));
}

int arm_sum(const ArmVector& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

// Sum k concentrated on a single arm: such configurations retract into the
// arm and are not type II vertices.
bool concentrated(const ArmVector& a) { return nonzero_entries(a) == 1; }

void check_vertex(int n, int k, const SpineVertex& v) {
  if (static_cast<int>(v.arms.size()) != n)
    throw std::invalid_argument("vertex arm vector has wrong length");
  for (int x : v.arms)
    if (x < 0) throw std::invalid_argument("vertex arm vector has a negative entry");
  int s = arm_sum(v.arms);
  if (v.kind == VertexKind::TypeI) {
    if (s != k - 1) throw std::invalid_argument("type I vertex must place k - 1 points on arms");
  } else {
    if (s != k) throw std::invalid_argument("type II vertex must place k points on arms");
    if (concentrated(v.arms))
      throw std::invalid_argument("type II vertex cannot be concentrated on one arm");
  }
}

}  // namespace

int SpineGraph::vertex_index(const SpineVertex& v) const {
  const auto& index = (v.kind == VertexKind::TypeI) ? type1_index : type2_index;
  auto it = index.find(v.arms);
  return it == index.end() ? -1 : it->second;
}

int SpineGraph::edge_from(int type1_idx, int slide_arm) const {
  auto it = edge_slots.find({type1_idx, slide_arm});
  return it == edge_slots.end() ? -1 : it->second;
}

int SpineGraph::edge_between(int u, int v) const {
  if (u < 0 || v < 0 || u >= static_cast<int>(vertices.size()) ||
      v >= static_cast<int>(vertices.size()))
    return -1;
  // Scan the smaller incidence list; degrees are at most n.
  const int probe = incident[u].size() <= incident[v].size() ? u : v;
  const int target = probe == u ? v : u;
  for (int e : incident[probe])
    if (other_end(e, probe) == target) return e;
  return -1;
}

int SpineGraph::other_end(int edge, int v) const {
  const SpineEdge& e = edges.at(edge);
  if (e.c0 == v) return e.c1;
  if (e.c1 == v) return e.c0;
  throw std::invalid_argument("vertex is not an endpoint of the edge");
}

SpineGraph build_spine(const StarParams& sp) {
  SpineGraph g;
  g.n = sp.n;
  g.k = sp.k;

  for (const auto& a : compositions(sp.n, sp.k - 1)) {
    g.type1_index[a] = static_cast<int>(g.vertices.size());
    g.vertices.push_back(SpineVertex{VertexKind::TypeI, a});
  }
  g.num_type1 = static_cast<int>(g.vertices.size());

  for (const auto& a : compositions(sp.n, sp.k)) {
    if (concentrated(a)) continue;
    g.type2_index[a] = static_cast<int>(g.vertices.size());
    g.vertices.push_back(SpineVertex{VertexKind::TypeII, a});
  }

  g.incident.resize(g.vertices.size());
  for (int ti = 0; ti < g.num_type1; ++ti) {
    for (int m = 1; m <= sp.n; ++m) {
      ArmVector upper = g.vertices[ti].arms;
      upper[m - 1] += 1;
      if (concentrated(upper)) continue;  // slide would leave the spine
      const int tj = g.type2_index.at(upper);
      const int e = static_cast<int>(g.edges.size());
      g.edges.push_back(SpineEdge{ti, tj, m});
      g.edge_slots[{ti, m}] = e;
      g.incident[ti].push_back(e);
      g.incident[tj].push_back(e);
    }
  }
  return g;
}

int vertex_degree(const SpineGraph& g, const SpineVertex& v) {
  const int idx = g.vertex_index(v);
  if (idx < 0) throw std::invalid_argument("vertex is not in the spine");
  return static_cast<int>(g.incident[idx].size());
}

long long euler_characteristic(const SpineGraph& g) {
  return static_cast<long long>(g.vertices.size()) - static_cast<long long>(g.edges.size());
}

Configuration realize(const StarParams& sp, const SpinePoint& p) {
  std::vector<StarPoint> pts;
  if (is_vertex(p)) {
    const SpineVertex& v = std::get<SpineVertex>(p);
    check_vertex(sp.n, sp.k, v);
    if (v.kind == VertexKind::TypeI) {
      pts.push_back(center_point());
      for (int i = 1; i <= sp.n; ++i)
        for (int j = 1; j <= v.arms[i - 1]; ++j) pts.push_back(StarPoint{i, double(j)});
    } else {
      for (int i = 1; i <= sp.n; ++i)
        for (int j = 1; j <= v.arms[i - 1]; ++j) pts.push_back(StarPoint{i, j - 0.5});
    }
  } else {
    const EdgePoint& e = std::get<EdgePoint>(p);
    if (e.c0.kind != VertexKind::TypeI || e.c1.kind != VertexKind::TypeII)
      throw std::invalid_argument("edge point endpoints must be a type I and a type II vertex");
    check_vertex(sp.n, sp.k, e.c0);
    check_vertex(sp.n, sp.k, e.c1);
    if (e.slide_arm < 1 || e.slide_arm > sp.n)
      throw std::invalid_argument("slide arm out of range");
    ArmVector upper = e.c0.arms;
    upper[e.slide_arm - 1] += 1;
    if (upper != e.c1.arms)
      throw std::invalid_argument("edge endpoints do not differ by one slide");
    if (!(e.s > 0.0 && e.s < 1.0))
      throw std::invalid_argument("edge parameter s outside (0, 1)");
    // The slide arm carries the point emerging from the center at s/2; every
    // other point sits half a slide behind its type II position.
    for (int i = 1; i <= sp.n; ++i) {
      for (int j = 1; j <= e.c1.arms[i - 1]; ++j) {
        const double d = (i == e.slide_arm) ? (j - 1) + e.s / 2 : j - e.s / 2;
        pts.push_back(StarPoint{i, d});
      }
    }
  }
  return make_configuration(sp, std::move(pts));
}

SpinePoint snap(const StarParams& sp, const Configuration& c) {
  validate_configuration(sp, c);
  const Regularity reg = is_regular(sp, c);
  if (!reg.regular) {
    const int arms = has_center(c) ? sp.n : static_cast<int>(occupied_arms(c).size());
    if (arms < 2)
      throw std::invalid_argument("cannot snap: configuration occupies fewer than two arms");
    throw std::invalid_argument("cannot snap: no arm governs the configuration");
  }

  ArmVector b = strict_counts(sp, c);
  if (has_center(c)) return SpineVertex{VertexKind::TypeI, b};

  const double s = 2 * distance_to_center(c);
  if (s >= 1.0 - kEps) return SpineVertex{VertexKind::TypeII, b};

  const int m = reg.governing.front();
  ArmVector lower = b;
  lower[m - 1] -= 1;
  return EdgePoint{SpineVertex{VertexKind::TypeI, lower}, SpineVertex{VertexKind::TypeII, b}, m, s};
}

std::vector<Configuration> sample_edge_path(const StarParams& sp, const SpineGraph& g,
                                            const std::vector<int>& vertex_path,
                                            int samples_per_edge) {
  if (vertex_path.empty()) throw std::invalid_argument("vertex path is empty");
  if (samples_per_edge < 1) throw std::invalid_argument("samples_per_edge must be at least 1");
  for (int v : vertex_path)
    if (v < 0 || v >= static_cast<int>(g.vertices.size()))
      throw std::invalid_argument("vertex index out of range");

  std::vector<Configuration> out;
  for (std::size_t leg = 0; leg + 1 < vertex_path.size(); ++leg) {
    const int u = vertex_path[leg];
    const int v = vertex_path[leg + 1];
    const int e = g.edge_between(u, v);
    if (e < 0) throw std::invalid_argument("consecutive path vertices are not adjacent");
    out.push_back(realize(sp, SpinePoint{g.vertices[u]}));
    const SpineEdge& edge = g.edges[e];
    const bool forward = (u == edge.c0);  // s runs 0 -> 1
    for (int j = 1; j < samples_per_edge; ++j) {
      const double t = double(j) / samples_per_edge;
      EdgePoint ep{g.vertices[edge.c0], g.vertices[edge.c1], edge.slide_arm,
                   forward ? t : 1.0 - t};
      out.push_back(realize(sp, SpinePoint{ep}));
    }
  }
  out.push_back(realize(sp, SpinePoint{g.vertices[vertex_path.back()]}));
  return out;
}

std::string arms_to_string(const ArmVector& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s;
}

}  // namespace spinecalc
