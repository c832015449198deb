#pragma once

#include <random>

#include "spinecalc/spine.hpp"
#include "spinecalc/star.hpp"

namespace spinecalc {

// Random valid configuration: each point draws a uniform arm and distance,
// the center is occupied with probability 0.15, and draws closer than 1e-6
// to an already placed point or to the center are rejected.
Configuration random_configuration(const StarParams& sp, std::mt19937_64& rng);

// Uniform vertex with probability 1/3, otherwise a uniform edge at a
// parameter drawn from [0.05, 0.95] so classification margins stay clear.
SpinePoint random_spine_point(const SpineGraph& g, std::mt19937_64& rng);

}  // namespace spinecalc
