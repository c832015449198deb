#pragma once

#include <vector>

namespace spinecalc {

// Absolute tolerance for all real comparisons (chain gaps, vertex
// classification). The constructions are exact rationals in disguise, so a
// tight tolerance is safe.
inline constexpr double kEps = 1e-9;

// A star with n arms, each of length kappa in the scaled metric, carrying k
// particles. The metric is chosen so that neighboring particles in a chain
// sit at distance exactly 1, which requires kappa >= k - 1.
struct StarParams {
  int n = 2;
  int k = 2;
  double kappa = 1.0;

  StarParams(int n_, int k_);  // kappa defaults to k - 1
  StarParams(int n_, int k_, double kappa_);
};

// A point in arm coordinates: arm index and distance from the center. The
// center is canonically (arm 0, dist 0); any other point has arm in 1..n and
// dist in (0, kappa].
struct StarPoint {
  int arm = 0;
  double dist = 0.0;
};

inline StarPoint center_point() { return StarPoint{0, 0.0}; }

// Geodesic distance: |a - b| along one arm, additive across the center.
double point_distance(const StarPoint& a, const StarPoint& b);

// An unordered set of k distinct points, kept sorted by (arm, dist).
struct Configuration {
  std::vector<StarPoint> points;
};

double hausdorff_distance(const Configuration& a, const Configuration& b);

// Sorts into canonical order and folds points with dist ~ 0 onto the center.
std::vector<StarPoint> canonical_points(std::vector<StarPoint> pts);

// Canonicalizes and validates: exactly k points, arms in range, distances in
// (0, kappa], no duplicates (no two points closer than the tolerance).
Configuration make_configuration(const StarParams& sp, std::vector<StarPoint> pts);
void validate_configuration(const StarParams& sp, const Configuration& c);

bool has_center(const Configuration& c);

// d(c, v0): distance from the configuration to the center.
double distance_to_center(const Configuration& c);

// The closed-arm intersection: points of c on arm i, plus the center if
// present (the center lies on every closed arm).
std::vector<StarPoint> arm_set(const Configuration& c, int arm);

// Number of points strictly inside each arm (center excluded), length n.
std::vector<int> strict_counts(const StarParams& sp, const Configuration& c);

// Arm indices with at least one strictly-inside point, ascending.
std::vector<int> occupied_arms(const Configuration& c);

// True iff consecutive points along the geodesic path through the center sit
// at distance exactly 1 from each other. The points must lie on the union of
// at most two closed arms.
bool is_chain(const std::vector<StarPoint>& pts);

struct Regularity {
  bool regular = false;
  std::vector<int> governing;  // ascending arm indices
};

// A configuration is regular when it has at least two arms and some arm
// governs: the governing arm attains d(c, v0) and its union with every other
// arm is a chain. Points of the spine are exactly the regular configurations.
Regularity is_regular(const StarParams& sp, const Configuration& c);

}  // namespace spinecalc
