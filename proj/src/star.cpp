#include "spinecalc/star.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spinecalc {

StarParams::StarParams(int n_, int k_) : StarParams(n_, k_, static_cast<double>(k_ - 1)) {}

StarParams::StarParams(int n_, int k_, double kappa_) : n(n_), k(k_), kappa(kappa_) {
  if (n < 2) throw std::invalid_argument("star: n must be at least 2");
  if (k < 2) throw std::invalid_argument("star: k must be at least 2");
  if (!(kappa >= static_cast<double>(k - 1) - kEps))
    throw std::invalid_argument("star: kappa must be at least k - 1");
}

double point_distance(const StarPoint& a, const StarPoint& b) {
  if (a.arm == b.arm || a.arm == 0 || b.arm == 0) return std::fabs(a.dist - b.dist);
  return a.dist + b.dist;
}

double hausdorff_distance(const Configuration& a, const Configuration& b) {
  if (a.points.empty() || b.points.empty())
    throw std::invalid_argument("hausdorff: configurations must be non-empty");
  double h = 0.0;
  auto one_side = [&](const Configuration& from, const Configuration& to) {
    for (const StarPoint& p : from.points) {
      double best = -1.0;
      for (const StarPoint& q : to.points) {
        double d = point_distance(p, q);
        if (best < 0.0 || d < best) best = d;
      }
      h = std::max(h, best);
    }
  };
  one_side(a, b);
  one_side(b, a);
  return h;
}

std::vector<StarPoint> canonical_points(std::vector<StarPoint> pts) {
  for (StarPoint& p : pts) {
    if (p.dist <= kEps && p.dist >= -kEps) p = center_point();
  }
  std::sort(pts.begin(), pts.end(), [](const StarPoint& a, const StarPoint& b) {
    if (a.arm != b.arm) return a.arm < b.arm;
    return a.dist < b.dist;
  });
  return pts;
}

void validate_configuration(const StarParams& sp, const Configuration& c) {
  if (static_cast<int>(c.points.size()) != sp.k)
    throw std::invalid_argument("configuration: expected exactly k = " + std::to_string(sp.k) +
                                " points, got " + std::to_string(c.points.size()));
  for (const StarPoint& p : c.points) {
    if (p.arm < 0 || p.arm > sp.n)
      throw std::invalid_argument("configuration: arm index out of range 0..n");
    if (p.arm == 0 && p.dist != 0.0)
      throw std::invalid_argument("configuration: the center must be (arm 0, dist 0)");
    if (p.arm >= 1 && !(p.dist > kEps))
      throw std::invalid_argument(
          "configuration: a point on an arm must have positive distance (use arm 0 for the "
          "center)");
    if (p.dist > sp.kappa + kEps)
      throw std::invalid_argument("configuration: point distance exceeds arm length kappa");
  }
  for (size_t i = 0; i < c.points.size(); ++i)
    for (size_t j = i + 1; j < c.points.size(); ++j)
      if (point_distance(c.points[i], c.points[j]) <= kEps)
        throw std::invalid_argument("configuration: duplicate points (collision)");
}

Configuration make_configuration(const StarParams& sp, std::vector<StarPoint> pts) {
  Configuration c{canonical_points(std::move(pts))};
  validate_configuration(sp, c);
  return c;
}

bool has_center(const Configuration& c) {
  // canonical order puts the center first
  return !c.points.empty() && c.points.front().arm == 0;
}

double distance_to_center(const Configuration& c) {
  if (c.points.empty()) throw std::invalid_argument("distance_to_center: empty configuration");
  double d = c.points.front().dist;
  for (const StarPoint& p : c.points) d = std::min(d, p.dist);
  return d;
}

std::vector<StarPoint> arm_set(const Configuration& c, int arm) {
  if (arm < 1) throw std::invalid_argument("arm_set: arm index must be at least 1");
  std::vector<StarPoint> out;
  for (const StarPoint& p : c.points)
    if (p.arm == arm || p.arm == 0) out.push_back(p);
  return out;
}

std::vector<int> strict_counts(const StarParams& sp, const Configuration& c) {
  std::vector<int> counts(static_cast<size_t>(sp.n), 0);
  for (const StarPoint& p : c.points) {
    if (p.arm >= 1) {
      if (p.arm > sp.n) throw std::invalid_argument("strict_counts: arm index out of range");
      ++counts[static_cast<size_t>(p.arm - 1)];
    }
  }
  return counts;
}

std::vector<int> occupied_arms(const Configuration& c) {
  std::vector<int> arms;
  for (const StarPoint& p : c.points)
    if (p.arm >= 1 && (arms.empty() || arms.back() != p.arm)) arms.push_back(p.arm);
  std::sort(arms.begin(), arms.end());
  arms.erase(std::unique(arms.begin(), arms.end()), arms.end());
  return arms;
}

bool is_chain(const std::vector<StarPoint>& pts) {
  int lo_arm = 0, hi_arm = 0;
  for (const StarPoint& p : pts) {
    if (p.arm == 0) continue;
    if (lo_arm == 0) {
      lo_arm = p.arm;
    } else if (p.arm != lo_arm) {
      if (hi_arm == 0)
        hi_arm = p.arm;
      else if (p.arm != hi_arm)
        throw std::invalid_argument("is_chain: points span more than two arms");
    }
  }
  // signed coordinate along the geodesic through the center: one arm negative,
  // the other positive, the center at 0
  std::vector<double> coord;
  coord.reserve(pts.size());
  for (const StarPoint& p : pts) coord.push_back(p.arm == lo_arm ? -p.dist : p.dist);
  std::sort(coord.begin(), coord.end());
  for (size_t i = 1; i < coord.size(); ++i)
    if (std::fabs(coord[i] - coord[i - 1] - 1.0) > kEps) return false;
  return true;
}

Regularity is_regular(const StarParams& sp, const Configuration& c) {
  Regularity reg;
  const bool center = has_center(c);

  // the arms of c: indices with nonempty closed-arm intersection; the center
  // lies on every closed arm, so its presence makes every index an arm
  std::vector<int> arms;
  if (center) {
    for (int i = 1; i <= sp.n; ++i) arms.push_back(i);
  } else {
    arms = occupied_arms(c);
  }
  if (arms.size() < 2) return reg;

  const double d0 = distance_to_center(c);

  std::vector<std::vector<StarPoint>> sets;
  sets.reserve(arms.size());
  for (int i : arms) sets.push_back(arm_set(c, i));

  for (size_t mi = 0; mi < arms.size(); ++mi) {
    // a governing arm attains d(c, v0)
    double dm = sets[mi].front().dist;
    for (const StarPoint& p : sets[mi]) dm = std::min(dm, p.dist);
    if (std::fabs(dm - d0) > kEps) continue;

    bool ok = true;
    for (size_t ii = 0; ii < arms.size() && ok; ++ii) {
      // union of the two closed-arm sets as a point set
      std::vector<StarPoint> u;
      for (const StarPoint& p : c.points)
        if (p.arm == 0 || p.arm == arms[mi] || p.arm == arms[ii]) u.push_back(p);
      ok = is_chain(u);
    }
    if (ok) reg.governing.push_back(arms[mi]);
  }
  reg.regular = !reg.governing.empty();
  return reg;
}

}  // namespace spinecalc
