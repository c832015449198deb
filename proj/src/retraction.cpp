#include "spinecalc/retraction.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace spinecalc {

namespace {

// Innermost point distance per arm; infinity on empty arms.
std::vector<double> innermost(const StarParams& sp, const Configuration& c) {
  std::vector<double> d(sp.n + 1, std::numeric_limits<double>::infinity());
  for (const StarPoint& p : c.points)
    if (p.arm >= 1) d[p.arm] = std::min(d[p.arm], p.dist);
  return d;
}

std::vector<double> sorted_arm_dists(const Configuration& c, int arm) {
  std::vector<double> d;
  for (const StarPoint& p : c.points)
    if (p.arm == arm) d.push_back(p.dist);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

RetractionTarget retract_target(const StarParams& sp, const Configuration& c) {
  validate_configuration(sp, c);
  RetractionTarget rt;
  const std::vector<int> occ = occupied_arms(c);

  if (occ.size() <= 1) {
    // Everything lies on one closed arm; compress onto its unit chain.
    const int m = occ.empty() ? 1 : occ.front();
    ArmVector arms(sp.n, 0);
    arms[m - 1] = sp.k - 1;
    rt.target = SpineVertex{VertexKind::TypeI, arms};
    return rt;
  }

  const ArmVector b = strict_counts(sp, c);
  const std::vector<double> inner = innermost(sp, c);

  if (has_center(c)) {
    // The center pins the slide; arm points settle onto the integers.
    rt.q = inner[occ.front()];
    for (int i : occ) rt.q = std::min(rt.q, inner[i]);
    rt.target = SpineVertex{VertexKind::TypeI, b};
    return rt;
  }

  int m = occ.front();
  for (int i : occ)
    if (inner[i] < inner[m]) m = i;
  rt.p = inner[m];
  rt.q = std::numeric_limits<double>::infinity();
  for (int i : occ)
    if (i != m) rt.q = std::min(rt.q, inner[i]);
  rt.governing_arm = m;

  const double s = 2 * rt.p / (rt.p + rt.q);
  if (s >= 1.0 - kEps) {
    rt.target = SpineVertex{VertexKind::TypeII, b};
  } else {
    ArmVector lower = b;
    lower[m - 1] -= 1;
    rt.target = EdgePoint{SpineVertex{VertexKind::TypeI, lower},
                          SpineVertex{VertexKind::TypeII, b}, m, s};
  }
  return rt;
}

Configuration HomotopyPath::sample(const StarParams& sp, double t) const {
  if (t < -kEps || t > 1.0 + kEps)
    throw std::invalid_argument("homotopy time outside [0, 1]");
  t = std::clamp(t, 0.0, 1.0);
  std::vector<StarPoint> pts;
  pts.reserve(trajectories.size());
  for (const Trajectory& tr : trajectories)
    pts.push_back(StarPoint{tr.arm, (1.0 - t) * tr.from + t * tr.to});
  return make_configuration(sp, std::move(pts));
}

HomotopyPath homotopy(const StarParams& sp, const Configuration& c) {
  const RetractionTarget rt = retract_target(sp, c);

  HomotopyPath h;
  h.source = c;
  h.target = realize(sp, rt.target);

  if (has_center(c)) h.trajectories.push_back(Trajectory{0, 0.0, 0.0});
  for (int arm = 1; arm <= sp.n; ++arm) {
    const std::vector<double> from = sorted_arm_dists(c, arm);
    std::vector<double> to = sorted_arm_dists(h.target, arm);
    if (from.size() == to.size() + 1 && !has_center(c) && has_center(h.target)) {
      // Single-arm case: the innermost point travels into the center.
      to.insert(to.begin(), 0.0);
    }
    if (from.size() != to.size())
      throw std::logic_error("retraction changed an arm count");
    for (std::size_t i = 0; i < from.size(); ++i)
      h.trajectories.push_back(Trajectory{arm, from[i], to[i]});
  }
  return h;
}

FreeWord project_loop(const StarParams& sp, const SpineGraph& g, const SpanningTree& t,
                      const std::vector<Configuration>& samples) {
  if (samples.size() < 2) throw std::invalid_argument("a loop needs at least two samples");
  if (hausdorff_distance(samples.front(), samples.back()) > kEps)
    throw std::invalid_argument("loop samples do not close up");

  struct Location {
    bool at_vertex = false;
    int vertex = -1;
    int edge = -1;
  };
  const auto locate = [&](const Configuration& c) -> Location {
    const SpinePoint p = retract_target(sp, c).target;
    if (is_vertex(p)) {
      const int v = g.vertex_index(std::get<SpineVertex>(p));
      if (v < 0) throw std::invalid_argument("sample retracts outside the given spine");
      return Location{true, v, -1};
    }
    const EdgePoint& ep = std::get<EdgePoint>(p);
    const int c0 = g.vertex_index(ep.c0);
    const int e = c0 < 0 ? -1 : g.edge_from(c0, ep.slide_arm);
    if (e < 0) throw std::invalid_argument("sample retracts outside the given spine");
    return Location{false, -1, e};
  };

  const Location first = locate(samples.front());
  if (!first.at_vertex || first.vertex != t.root)
    throw std::invalid_argument("loop must start at a configuration retracting to the root");

  std::vector<int> walk{t.root};
  int cur_edge = -1;  // edge currently being traversed
  int entry = t.root;  // vertex through which cur_edge was entered
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const Location loc = locate(samples[i]);
    if (loc.at_vertex) {
      const int w = loc.vertex;
      if (cur_edge < 0) {
        if (w == walk.back()) continue;
        if (g.edge_between(walk.back(), w) < 0)
          throw std::invalid_argument("consecutive samples skip across the spine; sample more finely");
        walk.push_back(w);
      } else {
        if (w != g.edges[cur_edge].c0 && w != g.edges[cur_edge].c1)
          throw std::invalid_argument("consecutive samples skip across the spine; sample more finely");
        if (w != entry) walk.push_back(w);  // backing out to the entry adds nothing
        cur_edge = -1;
      }
    } else {
      if (loc.edge == cur_edge) continue;
      if (cur_edge < 0) {
        const int b = walk.back();
        if (g.edges[loc.edge].c0 != b && g.edges[loc.edge].c1 != b)
          throw std::invalid_argument("consecutive samples skip across the spine; sample more finely");
        cur_edge = loc.edge;
        entry = b;
      } else {
        // Two edge interiors in a row: the loop slid through a shared vertex.
        const SpineEdge& a = g.edges[cur_edge];
        const SpineEdge& bE = g.edges[loc.edge];
        int shared = -1;
        if (a.c0 == bE.c0 || a.c0 == bE.c1) shared = a.c0;
        if (a.c1 == bE.c0 || a.c1 == bE.c1) shared = a.c1;
        if (shared < 0)
          throw std::invalid_argument("consecutive samples skip across the spine; sample more finely");
        if (shared != entry) walk.push_back(shared);
        cur_edge = loc.edge;
        entry = shared;
      }
    }
  }
  if (cur_edge >= 0) throw std::invalid_argument("loop ends inside an edge");
  return loop_to_word(g, t, walk);
}

}  // namespace spinecalc
