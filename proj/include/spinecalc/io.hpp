#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "spinecalc/basis.hpp"
#include "spinecalc/embedding.hpp"
#include "spinecalc/retraction.hpp"
#include "spinecalc/spine.hpp"
#include "spinecalc/star.hpp"

namespace spinecalc {

inline constexpr const char* kSchema = "spinecalc/1";

nlohmann::json configuration_to_json(const StarParams& sp, const Configuration& c);

struct ParsedConfiguration {
  StarParams params;
  Configuration config;
};

// Accepts {"n", "k", "kappa"?, "points": [{"arm", "dist"}, ...]}; kappa
// defaults to k - 1. Value violations surface as domain errors, malformed
// documents as json exceptions.
ParsedConfiguration configuration_from_json(const nlohmann::json& j);

// A loop as a JSON array of configuration documents sharing one parameter
// set.
struct ParsedSamples {
  StarParams params;
  std::vector<Configuration> samples;
};

ParsedSamples samples_from_json(const nlohmann::json& j);

std::vector<int> loop_from_json(const nlohmann::json& j);  // {"vertices": [...]}

nlohmann::json spine_to_json(const SpineGraph& g);
std::string spine_to_dot(const SpineGraph& g);

nlohmann::json spine_point_to_json(const SpinePoint& p);

nlohmann::json basis_to_json(const GeneratorSet& gs);
nlohmann::json word_to_json(const FreeWord& w);
nlohmann::json report_to_json(const EmbeddingReport& r);

// Retraction result with a homotopy trace at trace_samples equally spaced
// times.
nlohmann::json retraction_to_json(const StarParams& sp, const Configuration& c,
                                  int trace_samples);

}  // namespace spinecalc
