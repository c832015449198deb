#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinecalc/basis.hpp"
#include "spinecalc/combinatorics.hpp"
#include "spinecalc/embedding.hpp"
#include "spinecalc/io.hpp"
#include "spinecalc/random.hpp"
#include "spinecalc/retraction.hpp"
#include "spinecalc/spine.hpp"
#include "spinecalc/star.hpp"

using nlohmann::json;
using namespace spinecalc;

namespace {

json read_json_input(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return json::parse(in);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

StarParams make_params(int n, int k, double kappa) {
  return kappa > 0 ? StarParams(n, k, kappa) : StarParams(n, k);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run_build(int n, int k, double kappa, const std::string& format, const std::string& output) {
  const StarParams sp = make_params(n, k, kappa);
  const SpineGraph g = build_spine(sp);
  if (format == "dot")
    write_output(output, spine_to_dot(g));
  else
    write_output(output, dump(spine_to_json(g)));
  return 0;
}

int run_rank(int n, int k) {
  const SpineGraph g = build_spine(StarParams(n, k));
  std::cout << "rank=" << rank_formula(n, k) << " V=" << g.vertices.size()
            << " E=" << g.edges.size() << "\n";
  return 0;
}

int run_basis(int n, int k, double kappa, const std::string& output) {
  const StarParams sp = make_params(n, k, kappa);
  const SpineGraph g = build_spine(sp);
  const SpanningTree t = build_tree(g);
  write_output(output, dump(basis_to_json(basis(g, t))));
  return 0;
}

int run_embed(int n, int k, int arm, const std::string& output) {
  if (k < 3) throw std::invalid_argument("embed requires k >= 3 (source level k - 1 >= 2)");
  const SpineGraph gk1 = build_spine(StarParams(n, k - 1));
  const SpineGraph gk = build_spine(StarParams(n, k));
  const EmbeddingMap emb = embed(gk1, gk, arm);
  const SpanningTree tk1 = build_tree(gk1);
  const SpanningTree tk = compatible_tree(gk, emb, tk1);
  const EmbeddingReport report = verify_monomorphism(gk1, gk, emb, tk1, tk);
  write_output(output, dump(report_to_json(report)));
  return report.verified ? 0 : 1;
}

int run_retract(const std::string& input, int trace_samples, const std::string& output) {
  const ParsedConfiguration parsed = configuration_from_json(read_json_input(input));
  write_output(output, dump(retraction_to_json(parsed.params, parsed.config, trace_samples)));
  return 0;
}

int run_word(const std::string& input, int n, int k, int generator, bool reverse,
             int samples_per_edge, const std::string& output) {
  FreeWord w;
  if (!input.empty()) {
    const ParsedSamples parsed = samples_from_json(read_json_input(input));
    const SpineGraph g = build_spine(parsed.params);
    const SpanningTree t = build_tree(g);
    w = project_loop(parsed.params, g, t, parsed.samples);
  } else {
    if (generator < 1) throw std::invalid_argument("word needs --input or --generator");
    const StarParams sp(n, k);
    const SpineGraph g = build_spine(sp);
    const SpanningTree t = build_tree(g);
    const GeneratorSet gs = basis(g, t);
    if (generator > static_cast<int>(gs.generators.size()))
      throw std::invalid_argument("generator index exceeds the rank");
    std::vector<Configuration> samples =
        sample_edge_path(sp, g, gs.generators[generator - 1].loop_vertices, samples_per_edge);
    if (reverse) std::reverse(samples.begin(), samples.end());
    w = project_loop(sp, g, t, samples);
  }
  write_output(output, dump(word_to_json(w)));
  return 0;
}

int run_check(int n_max, int k_max, unsigned long long seed, int samples) {
  std::cout << "seed=" << seed << "\n";
  std::vector<std::string> failures;
  const auto verdict = [&](const std::string& name, bool ok) {
    std::cout << name << ": " << (ok ? "ok" : "FAIL") << "\n";
    if (!ok) failures.push_back(name);
  };

  for (int n = 2; n <= n_max; ++n) {
    for (int k = 2; k <= k_max; ++k) {
      const SpineGraph g = build_spine(StarParams(n, k));
      const long long v1 = binomial(n + k - 2, n - 1);
      const long long v2 = binomial(n + k - 1, n - 1) - n;
      bool ok = g.num_type1 == v1 &&
                static_cast<long long>(g.vertices.size()) == v1 + v2 &&
                static_cast<long long>(g.edges.size()) == n * v1 - n;
      for (const SpineEdge& e : g.edges)
        ok = ok && g.vertices[e.c0].kind == VertexKind::TypeI &&
             g.vertices[e.c1].kind == VertexKind::TypeII;
      for (int vi = 0; vi < g.num_type1 && ok; ++vi) {
        const int nz = static_cast<int>(std::count_if(g.vertices[vi].arms.begin(),
                                                      g.vertices[vi].arms.end(),
                                                      [](int x) { return x != 0; }));
        const int want = (nz <= 1) ? n - 1 : n;
        ok = static_cast<int>(g.incident[vi].size()) == want;
      }
      const SpanningTree t = build_tree(g);  // throws if disconnected
      ok = ok && rank_formula(n, k) ==
                     static_cast<long long>(g.edges.size()) - static_cast<long long>(g.vertices.size()) + 1;
      ok = ok && static_cast<long long>(t.non_tree.size()) == rank_formula(n, k);
      std::ostringstream name;
      name << "structure n=" << n << " k=" << k;
      verdict(name.str(), ok);
    }
  }

  for (int n = 3; n <= n_max; ++n) {
    for (int k = 3; k <= k_max; ++k) {
      const SpineGraph gk1 = build_spine(StarParams(n, k - 1));
      const SpineGraph gk = build_spine(StarParams(n, k));
      const SpanningTree tk1 = build_tree(gk1);
      bool ok = true;
      for (int m = 1; m <= n; ++m) {
        const EmbeddingMap emb = embed(gk1, gk, m);
        const SpanningTree tk = compatible_tree(gk, emb, tk1);
        ok = ok && verify_monomorphism(gk1, gk, emb, tk1, tk).verified;
      }
      std::ostringstream name;
      name << "embedding n=" << n << " k=" << k;
      verdict(name.str(), ok);
    }
  }

  std::mt19937_64 rng(seed);
  for (int n = 3; n <= n_max; ++n) {
    for (int k = 3; k <= k_max; ++k) {
      const StarParams sp(n, k);
      bool ok = true;
      for (int i = 0; i < samples && ok; ++i) {
        const Configuration c = random_configuration(sp, rng);
        const RetractionTarget rt = retract_target(sp, c);
        const Configuration realized = realize(sp, rt.target);
        ok = is_regular(sp, realized).regular;
        const RetractionTarget again = retract_target(sp, realized);
        ok = ok && hausdorff_distance(realized, realize(sp, again.target)) <= kEps;
        const HomotopyPath path = homotopy(sp, c);
        for (int ti = 0; ti <= 10 && ok; ++ti)
          ok = static_cast<int>(path.sample(sp, ti / 10.0).points.size()) == k;
      }
      std::ostringstream name;
      name << "retraction n=" << n << " k=" << k;
      verdict(name.str(), ok);
    }
  }

  if (!failures.empty()) {
    std::cout << failures.size() << " check(s) failed\n";
    return 1;
  }
  std::cout << "all checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spine graphs and braid-group bases for star configuration spaces"};
  app.require_subcommand(1);

  int n = 3, k = 2, arm = 1, trace_samples = 11, generator = 0, samples_per_edge = 20;
  int n_max = 6, k_max = 5, samples = 1000;
  unsigned long long seed = 0;
  double kappa = 0.0;
  bool reverse = false;
  std::string format = "json", input, output;

  CLI::App* build = app.add_subcommand("build", "construct the spine graph");
  build->add_option("--n", n, "number of arms")->required();
  build->add_option("--k", k, "number of particles")->required();
  build->add_option("--kappa", kappa, "arm length (default k - 1)");
  build->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  build->add_option("--output", output, "output file (default stdout)");

  CLI::App* rank = app.add_subcommand("rank", "rank of the braid group");
  rank->add_option("--n", n, "number of arms")->required();
  rank->add_option("--k", k, "number of particles")->required();

  CLI::App* basis_cmd = app.add_subcommand("basis", "free basis from the spanning tree");
  basis_cmd->add_option("--n", n, "number of arms")->required();
  basis_cmd->add_option("--k", k, "number of particles")->required();
  basis_cmd->add_option("--kappa", kappa, "arm length (default k - 1)");
  basis_cmd->add_option("--output", output, "output file (default stdout)");

  CLI::App* embed_cmd = app.add_subcommand("embed", "verify one arm's embedding");
  embed_cmd->add_option("--n", n, "number of arms")->required();
  embed_cmd->add_option("--k", k, "target particle count")->required();
  embed_cmd->add_option("--arm", arm, "arm receiving the new particle");
  embed_cmd->add_option("--output", output, "output file (default stdout)");

  CLI::App* retract = app.add_subcommand("retract", "retract a configuration onto the spine");
  retract->add_option("--input", input, "configuration JSON file, - for stdin")->required();
  retract->add_option("--trace-samples", trace_samples, "points on the homotopy trace")
      ->check(CLI::Range(2, 100000));
  retract->add_option("--output", output, "output file (default stdout)");

  CLI::App* word = app.add_subcommand("word", "project a sampled loop to a word");
  word->add_option("--input", input, "loop samples JSON file, - for stdin");
  word->add_option("--n", n, "number of arms");
  word->add_option("--k", k, "number of particles");
  word->add_option("--generator", generator, "realize this basis generator's loop");
  word->add_flag("--reverse", reverse, "traverse the generator loop backwards");
  word->add_option("--samples-per-edge", samples_per_edge, "sampling density")
      ->check(CLI::Range(2, 100000));
  word->add_option("--output", output, "output file (default stdout)");

  CLI::App* check = app.add_subcommand("check", "run the invariant sweep");
  check->add_option("--n-max", n_max, "largest n")->check(CLI::Range(2, 12));
  check->add_option("--k-max", k_max, "largest k")->check(CLI::Range(2, 12));
  check->add_option("--seed", seed, "random seed");
  check->add_option("--samples", samples, "random configurations per (n, k)")
      ->check(CLI::Range(1, 10000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (build->parsed()) return run_build(n, k, kappa, format, output);
    if (rank->parsed()) return run_rank(n, k);
    if (basis_cmd->parsed()) return run_basis(n, k, kappa, output);
    if (embed_cmd->parsed()) return run_embed(n, k, arm, output);
    if (retract->parsed()) return run_retract(input, trace_samples, output);
    if (word->parsed())
      return run_word(input, n, k, generator, reverse, samples_per_edge, output);
    if (check->parsed()) return run_check(n_max, k_max, seed, samples);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
