#include "spinecalc/io.hpp"

#include <sstream>
#include <stdexcept>

namespace spinecalc {

using nlohmann::json;

json configuration_to_json(const StarParams& sp, const Configuration& c) {
  json pts = json::array();
  for (const StarPoint& p : c.points) pts.push_back({{"arm", p.arm}, {"dist", p.dist}});
  return {{"schema", kSchema}, {"n", sp.n},      {"k", sp.k},
          {"kappa", sp.kappa}, {"points", pts}};
}

ParsedConfiguration configuration_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const int k = j.at("k").get<int>();
  const StarParams sp = j.contains("kappa") ? StarParams(n, k, j.at("kappa").get<double>())
                                            : StarParams(n, k);
  std::vector<StarPoint> pts;
  for (const json& p : j.at("points"))
    pts.push_back(StarPoint{p.at("arm").get<int>(), p.at("dist").get<double>()});
  return ParsedConfiguration{sp, make_configuration(sp, std::move(pts))};
}

ParsedSamples samples_from_json(const json& j) {
  if (!j.is_array()) (void)j.at(0);  // raise the usual json type error
  if (j.empty())
    throw std::invalid_argument("loop samples must be a non-empty array of configurations");
  ParsedConfiguration first = configuration_from_json(j.front());
  ParsedSamples out{first.params, {std::move(first.config)}};
  for (std::size_t i = 1; i < j.size(); ++i) {
    ParsedConfiguration next = configuration_from_json(j[i]);
    if (next.params.n != out.params.n || next.params.k != out.params.k ||
        std::abs(next.params.kappa - out.params.kappa) > kEps)
      throw std::invalid_argument("loop samples mix different star parameters");
    out.samples.push_back(std::move(next.config));
  }
  return out;
}

std::vector<int> loop_from_json(const json& j) {
  std::vector<int> walk;
  for (const json& v : j.at("vertices")) walk.push_back(v.get<int>());
  return walk;
}

namespace {

const char* kind_name(VertexKind k) { return k == VertexKind::TypeI ? "I" : "II"; }

}  // namespace

json spine_to_json(const SpineGraph& g) {
  json vertices = json::array();
  for (const SpineVertex& v : g.vertices)
    vertices.push_back({{"kind", kind_name(v.kind)}, {"arms", v.arms}});
  json edges = json::array();
  for (const SpineEdge& e : g.edges)
    edges.push_back({{"c0", e.c0}, {"c1", e.c1}, {"slide_arm", e.slide_arm}});
  return {{"schema", kSchema}, {"n", g.n},        {"k", g.k},
          {"vertices", vertices}, {"edges", edges}};
}

std::string spine_to_dot(const SpineGraph& g) {
  std::ostringstream out;
  out << "graph spine {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const SpineVertex& v = g.vertices[i];
    out << "  v" << i << " [label=\"" << kind_name(v.kind) << ":" << arms_to_string(v.arms)
        << "\"";
    if (v.kind == VertexKind::TypeI) out << ", style=filled, fillcolor=black, fontcolor=white";
    out << "];\n";
  }
  for (const SpineEdge& e : g.edges)
    out << "  v" << e.c0 << " -- v" << e.c1 << " [label=\"" << e.slide_arm << "\"];\n";
  out << "}\n";
  return out.str();
}

json spine_point_to_json(const SpinePoint& p) {
  if (is_vertex(p)) {
    const SpineVertex& v = std::get<SpineVertex>(p);
    return {{"type", "vertex"}, {"kind", kind_name(v.kind)}, {"arms", v.arms}};
  }
  const EdgePoint& e = std::get<EdgePoint>(p);
  return {{"type", "edge"},
          {"c0_arms", e.c0.arms},
          {"c1_arms", e.c1.arms},
          {"slide_arm", e.slide_arm},
          {"s", e.s}};
}

json basis_to_json(const GeneratorSet& gs) {
  json gens = json::array();
  for (const Generator& g : gs.generators)
    gens.push_back(
        {{"index", g.index}, {"edge", g.edge}, {"loop_vertices", g.loop_vertices}});
  return {{"schema", kSchema},
          {"rank", static_cast<long long>(gs.generators.size())},
          {"generators", gens}};
}

json word_to_json(const FreeWord& w) {
  return {{"schema", kSchema}, {"word", w}, {"word_string", word_to_string(w)}};
}

json report_to_json(const EmbeddingReport& r) {
  json corr = json::array();
  for (const GeneratorImage& im : r.images)
    corr.push_back(
        {{"source_gen", im.source_gen}, {"target_gen", im.target_gen}, {"sign", im.sign}});
  return {{"schema", kSchema}, {"n", r.n},
          {"k", r.k},          {"arm", r.arm},
          {"correspondence", corr}, {"verified", r.verified}};
}

json retraction_to_json(const StarParams& sp, const Configuration& c, int trace_samples) {
  if (trace_samples < 2) throw std::invalid_argument("trace needs at least two samples");
  const RetractionTarget rt = retract_target(sp, c);
  const HomotopyPath path = homotopy(sp, c);

  json trace = json::array();
  for (int i = 0; i < trace_samples; ++i) {
    const double t = double(i) / (trace_samples - 1);
    json pts = json::array();
    for (const StarPoint& p : path.sample(sp, t).points)
      pts.push_back({{"arm", p.arm}, {"dist", p.dist}});
    trace.push_back({{"t", t}, {"points", pts}});
  }

  json out{{"schema", kSchema},
           {"n", sp.n},
           {"k", sp.k},
           {"kappa", sp.kappa},
           {"p", rt.p},
           {"q", rt.q},
           {"target", spine_point_to_json(rt.target)},
           {"trace", trace}};
  out["governing_arm"] = rt.governing_arm ? json(*rt.governing_arm) : json(nullptr);
  return out;
}

}  // namespace spinecalc
