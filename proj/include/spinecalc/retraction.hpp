#pragma once

#include <optional>
#include <vector>

#include "spinecalc/basis.hpp"
#include "spinecalc/spine.hpp"
#include "spinecalc/star.hpp"

namespace spinecalc {

// Where the deformation retraction sends a configuration. p is the nearest
// arm distance (0 when the center is occupied or a single arm carries
// everything), q the nearest distance over the other occupied arms; the
// target sits at distance p/(p+q) from the center.
struct RetractionTarget {
  SpinePoint target{SpineVertex{}};
  std::optional<int> governing_arm;  // absent for type I targets
  double p = 0.0;
  double q = 0.0;
};

RetractionTarget retract_target(const StarParams& sp, const Configuration& c);

// One point's straight-line motion in arm coordinates.
struct Trajectory {
  int arm = 0;  // 0 only for a point pinned at the center
  double from = 0.0;
  double to = 0.0;
};

// Linear interpolation, per arm, between sorted distance vectors. Points
// never change arms; in the single-arm case the innermost point may travel
// to the center.
struct HomotopyPath {
  Configuration source;
  Configuration target;
  std::vector<Trajectory> trajectories;

  Configuration sample(const StarParams& sp, double t) const;
};

HomotopyPath homotopy(const StarParams& sp, const Configuration& c);

// Reads off the word of a loop given by closely spaced samples: every sample
// is retracted onto the spine, the induced closed edge walk is extracted,
// and the walk is evaluated against the tree. The first sample must retract
// to the root; consecutive samples must land on the same or touching cells,
// otherwise the call demands finer sampling.
FreeWord project_loop(const StarParams& sp, const SpineGraph& g, const SpanningTree& t,
                      const std::vector<Configuration>& samples);

}  // namespace spinecalc
