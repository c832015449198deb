#include "spinecalc/random.hpp"

#include <stdexcept>

namespace spinecalc {

namespace {
constexpr double kMinGap = 1e-6;
}

Configuration random_configuration(const StarParams& sp, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> arm(1, sp.n);

  std::vector<StarPoint> pts;
  if (unit(rng) < 0.15) pts.push_back(center_point());
  while (static_cast<int>(pts.size()) < sp.k) {
    const StarPoint cand{arm(rng), unit(rng) * sp.kappa};
    if (cand.dist < kMinGap || cand.dist > sp.kappa) continue;
    bool clear = true;
    for (const StarPoint& p : pts)
      if (point_distance(p, cand) < kMinGap) {
        clear = false;
        break;
      }
    if (clear) pts.push_back(cand);
  }
  return make_configuration(sp, std::move(pts));
}

SpinePoint random_spine_point(const SpineGraph& g, std::mt19937_64& rng) {
  if (g.vertices.empty()) throw std::invalid_argument("spine has no vertices");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (g.edges.empty() || unit(rng) < 1.0 / 3.0) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.vertices.size()) - 1);
    return g.vertices[pick(rng)];
  }
  std::uniform_int_distribution<int> pick(0, static_cast<int>(g.edges.size()) - 1);
  const SpineEdge& e = g.edges[pick(rng)];
  const double s = 0.05 + 0.9 * unit(rng);
  return EdgePoint{g.vertices[e.c0], g.vertices[e.c1], e.slide_arm, s};
}

}  // namespace spinecalc
