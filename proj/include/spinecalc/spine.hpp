#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "spinecalc/star.hpp"

namespace spinecalc {

// Particle counts strictly inside each arm (the center is never counted).
// Sum k-1 with the center occupied (type I) or sum k with at least two arms
// occupied (type II).
using ArmVector = std::vector<int>;

enum class VertexKind { TypeI, TypeII };

struct SpineVertex {
  VertexKind kind = VertexKind::TypeI;
  ArmVector arms;

  bool operator==(const SpineVertex&) const = default;
};

// An edge joins a type I vertex c0 to the type II vertex c1 obtained by a
// unit slide along one arm: c1.arms = c0.arms + e_m. Endpoints are vertex
// indices into the owning graph.
struct SpineEdge {
  int c0 = -1;
  int c1 = -1;
  int slide_arm = 0;
};

// A location strictly inside an edge. The parameter s in (0, 1) doubles the
// distance to the center of the realized configuration: s = 2 d(c, v0).
struct EdgePoint {
  SpineVertex c0;  // type I endpoint
  SpineVertex c1;  // type II endpoint, arms = c0.arms + e_{slide_arm}
  int slide_arm = 0;
  double s = 0.5;
};

using SpinePoint = std::variant<SpineVertex, EdgePoint>;

inline bool is_vertex(const SpinePoint& p) { return std::holds_alternative<SpineVertex>(p); }

// The spine of the k-point configuration space of the n-star, as a finite
// graph with deterministic indexing: type I vertices first, then type II,
// compositions in ascending lexicographic order within each block; edges
// ordered by (type I endpoint index, slide arm).
struct SpineGraph {
  int n = 0;
  int k = 0;
  std::vector<SpineVertex> vertices;
  std::vector<SpineEdge> edges;
  std::vector<std::vector<int>> incident;  // ascending edge indices per vertex
  int num_type1 = 0;

  std::map<ArmVector, int> type1_index;
  std::map<ArmVector, int> type2_index;
  std::map<std::pair<int, int>, int> edge_slots;  // (type I index, slide arm) -> edge

  int vertex_index(const SpineVertex& v) const;      // -1 if absent
  int edge_from(int type1_idx, int slide_arm) const;  // -1 if absent
  int edge_between(int u, int v) const;               // -1 if not adjacent
  int other_end(int edge, int v) const;
};

SpineGraph build_spine(const StarParams& sp);

// Degree of a vertex of the graph. Throws if the vertex is not present.
int vertex_degree(const SpineGraph& g, const SpineVertex& v);

long long euler_characteristic(const SpineGraph& g);

// The geometric configuration at a spine location. Type I: the center plus
// points at 1, 2, ... on each arm. Type II: points at 1/2, 3/2, ... on each
// arm. On an edge at parameter s, the slide arm carries points at s/2 + j and
// every other arm at (j+1) - s/2.
Configuration realize(const StarParams& sp, const SpinePoint& p);

// Inverse of realize on regular configurations. Throws for non-regular input,
// naming the failed predicate.
SpinePoint snap(const StarParams& sp, const Configuration& c);

// Realizes a walk given as vertex indices, emitting `samples_per_edge`
// configurations per edge (the leg's start vertex plus interior points) and
// the final vertex. Consecutive vertices must be adjacent.
std::vector<Configuration> sample_edge_path(const StarParams& sp, const SpineGraph& g,
                                            const std::vector<int>& vertex_path,
                                            int samples_per_edge);

std::string arms_to_string(const ArmVector& a);  // "1,0,2"

}  // namespace spinecalc
