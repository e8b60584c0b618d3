// halobraid: command-line front end.
//
//   halobraid color       --input G.json [--exact]
//   halobraid halo        --input G.json [--coloring C.json | --exact]
//   halobraid configspace --input G.json --n N [--cell-budget B]
//   halobraid embed       --input G.json [--coloring C.json] [--unsquared] WORD
//   halobraid verify      --input G.json|H.json [--max-len L] [--samples S] [--seed S]
//
// Exit codes: 0 success, 2 input error, 3 resource bound, 4 verification
// failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "halobraid.hpp"

namespace hb = halobraid;
using hb::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_resource = 3;
constexpr int exit_verify = 4;

enum class Format { json, dot, text };

struct RunConfig {
  std::string input;
  std::string coloring_file;
  bool exact = false;
  std::optional<std::size_t> n;
  bool unsquared = false;
  std::size_t max_len = 4;
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  Format format = Format::json;
  hb::PathThreshold threshold = hb::PathThreshold::paper;
  std::uint64_t cell_budget = 1'000'000;
  bool timings = false;
  std::string word;
};

class Stopwatch {
 public:
  void lap(std::string const& name) {
    auto now = std::chrono::steady_clock::now();
    laps_[name] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

  json to_json() const {
    json j = json::object();
    for (auto const& [k, v] : laps_) {
      j[k] = v;
    }
    return j;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  std::map<std::string, double> laps_;
};

json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw hb::input_error("cannot open '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (nlohmann::json::parse_error const& e) {
    throw hb::parse_error("'" + path + "' is not valid JSON: " + e.what());
  }
}

hb::Coloring choose_coloring(hb::SimpleGraph const& g, RunConfig const& cfg) {
  if (!cfg.coloring_file.empty()) {
    return hb::coloring_from_json(read_json_file(cfg.coloring_file));
  }
  return cfg.exact ? hb::chromatic_number(g) : hb::greedy_color(g);
}

void check_strands(RunConfig const& cfg, hb::Coloring const& c) {
  if (cfg.n && *cfg.n != static_cast<std::size_t>(c.color_count)) {
    throw hb::input_error("--n " + std::to_string(*cfg.n) + " disagrees with the "
                          + std::to_string(c.color_count) + "-color coloring");
  }
}

void emit(json const& j) {
  std::cout << j.dump(2) << '\n';
}

std::optional<bool> planar_or_null(hb::SimpleGraph const& g) {
  try {
    return hb::is_planar(g);
  } catch (hb::size_exceeded_error const&) {
    return std::nullopt;
  }
}

json nullable(std::optional<bool> b) {
  return b ? json(*b) : json(nullptr);
}

int cmd_color(RunConfig const& cfg) {
  Stopwatch clock;
  auto g = hb::graph_from_json(read_json_file(cfg.input));
  hb::Coloring c = cfg.exact ? hb::chromatic_number(g) : hb::greedy_color(g);
  clock.lap("color");
  switch (cfg.format) {
    case Format::dot:
      std::cout << hb::to_dot(g, c);
      break;
    case Format::text:
      std::cout << "colors: " << c.color_count << '\n';
      for (auto const& [v, col] : c.assignment) {
        std::cout << v << ' ' << col << '\n';
      }
      break;
    case Format::json: {
      json j = hb::to_json(c);
      j["exact"] = cfg.exact;
      if (cfg.timings) {
        j["timings_ms"] = clock.to_json();
      }
      emit(j);
    }
  }
  return exit_ok;
}

int cmd_halo(RunConfig const& cfg) {
  Stopwatch clock;
  auto delta = hb::graph_from_json(read_json_file(cfg.input));
  hb::Coloring coloring = choose_coloring(delta, cfg);
  check_strands(cfg, coloring);
  if (auto defect = hb::coloring_defect(delta, coloring)) {
    json j;
    j["pass"] = false;
    j["error"] = *defect;
    emit(j);
    return exit_verify;
  }
  hb::Halo halo = hb::build_halo(delta, coloring);
  clock.lap("build");
  hb::HaloReport axioms = hb::verify_halo(halo);
  auto planar = planar_or_null(halo.gamma);
  std::size_t const n = halo.strand_count();
  hb::Halo sub = axioms.passed() ? hb::subdivided_halo(halo, n, cfg.threshold) : halo;
  hb::SubdivisionReport subdivision = hb::is_sufficiently_subdivided(sub.gamma, n, cfg.threshold);
  hb::HaloReport sub_axioms = hb::verify_halo(sub);
  clock.lap("verify");
  bool const pass = axioms.passed() && sub_axioms.passed() && subdivision.sufficient();

  if (cfg.format == Format::dot) {
    std::cout << hb::to_dot(sub);
    return pass ? exit_ok : exit_verify;
  }
  if (cfg.format == Format::text) {
    std::cout << "strands: " << n << '\n'
              << "gamma: " << halo.gamma.order() << " vertices, " << halo.gamma.size() << " edges\n"
              << "subdivided: " << sub.gamma.order() << " vertices, " << sub.gamma.size()
              << " edges\n"
              << "planar: " << (planar ? (*planar ? "true" : "false") : "unknown") << '\n'
              << "axioms: " << (axioms.passed() ? "pass" : "fail") << '\n'
              << "subdivision: " << (subdivision.sufficient() ? "pass" : "fail") << '\n';
    for (auto const& v : axioms.violations) {
      std::cout << "  " << hb::to_string(v.axiom) << ": " << v.message << '\n';
    }
    return pass ? exit_ok : exit_verify;
  }
  json j;
  j["halo"] = hb::to_json(sub);
  j["report"]["pass"] = pass;
  j["report"]["strands"] = n;
  j["report"]["planar"] = nullable(planar);
  j["report"]["axioms"] = hb::to_json(axioms);
  j["report"]["subdivided_axioms"] = hb::to_json(sub_axioms);
  j["report"]["subdivision"] = hb::to_json(subdivision);
  if (cfg.timings) {
    j["timings_ms"] = clock.to_json();
  }
  emit(j);
  return pass ? exit_ok : exit_verify;
}

int cmd_configspace(RunConfig const& cfg) {
  if (!cfg.n) {
    throw hb::input_error("configspace needs --n");
  }
  Stopwatch clock;
  auto gamma = hb::graph_from_json(read_json_file(cfg.input));
  hb::DiscreteConfigSpace space = hb::build_udc(gamma, *cfg.n, cfg.cell_budget);
  clock.lap("build");
  hb::CellCounts counts = space.counts();
  if (cfg.format == Format::text) {
    std::cout << "n: " << counts.n << '\n'
              << "zero_cells: " << counts.zero_cells << '\n'
              << "one_cells: " << counts.one_cells << '\n';
    return exit_ok;
  }
  if (cfg.format == Format::dot) {
    throw hb::input_error("configspace has no DOT output");
  }
  json j = hb::to_json(counts);
  if (cfg.timings) {
    j["timings_ms"] = clock.to_json();
  }
  emit(j);
  return exit_ok;
}

// A graph plus coloring, or a halo file.
hb::EmbeddingContext load_context(RunConfig const& cfg) {
  json in = read_json_file(cfg.input);
  if (hb::looks_like_halo(in)) {
    hb::Halo h = hb::halo_from_json(in);
    check_strands(cfg, h.coloring);
    return hb::context_from_halo(h, cfg.threshold);
  }
  auto delta = hb::graph_from_json(in);
  hb::Coloring coloring = choose_coloring(delta, cfg);
  check_strands(cfg, coloring);
  return hb::build_context(delta, coloring, cfg.threshold);
}

int cmd_embed(RunConfig const& cfg) {
  Stopwatch clock;
  hb::EmbeddingContext ctx = load_context(cfg);
  hb::GroupWord w = hb::parse_word(cfg.word, ctx.a_delta);
  bool const squared = !cfg.unsquared;
  hb::GroupWord image = hb::phi_psi(w, ctx, squared);
  bool const trivial = hb::is_trivial(image, ctx.a_gamma);
  clock.lap("embed");
  if (cfg.format == Format::text) {
    std::cout << "word: " << hb::format_word(w, ctx.a_delta) << '\n'
              << "image: " << hb::format_word(image, ctx.a_gamma) << '\n'
              << "trivial: " << (trivial ? "true" : "false") << '\n';
    return exit_ok;
  }
  if (cfg.format == Format::dot) {
    throw hb::input_error("embed has no DOT output");
  }
  json j;
  j["word"] = hb::format_word(w, ctx.a_delta);
  j["squared"] = squared;
  j["strands"] = ctx.n;
  j["image"] = hb::format_word(image, ctx.a_gamma);
  j["image_length"] = image.size();
  j["reduced_image"] = hb::format_word(hb::raag_reduce(image, ctx.a_gamma), ctx.a_gamma);
  j["trivial"] = trivial;
  if (cfg.timings) {
    j["timings_ms"] = clock.to_json();
  }
  emit(j);
  return exit_ok;
}

json homomorphism_json(hb::HomomorphismReport const& r) {
  json j;
  j["pass"] = r.passed();
  j["relators"] = json::array();
  for (auto const& rel : r.relators) {
    j["relators"].push_back({{"a", rel.a},
                             {"b", rel.b},
                             {"image_trivial", rel.image_trivial},
                             {"disjoint_support", rel.disjoint_support},
                             {"supports_commute", rel.supports_commute}});
  }
  return j;
}

json injectivity_json(hb::InjectivityReport const& r, hb::RaagPresentation const& p) {
  json j;
  j["pass"] = r.passed();
  j["squared"] = r.squared;
  j["max_len"] = r.max_len;
  j["exhaustive"] = r.exhaustive;
  j["exhaustive_words"] = r.exhaustive_words;
  j["samples"] = r.samples_checked;
  j["seed"] = r.seed;
  j["failures"] = json::array();
  for (auto const& w : r.failures) {
    j["failures"].push_back(hb::format_word(w, p));
  }
  return j;
}

json counterexample_json(hb::CounterexampleReport const& r, hb::SimpleGraph const& delta) {
  hb::RaagPresentation p(delta);
  json j;
  j["pass"] = r.reproduced();
  j["roles"] = {{"a", r.roles[0]}, {"b", r.roles[1]}, {"c", r.roles[2]}};
  j["coloring"] = hb::to_json(r.coloring);
  j["g"] = hb::format_word(r.g, p);
  j["g_trivial"] = r.g_trivial;
  j["unsquared_image_length"] = r.unsquared_image.size();
  j["unsquared_trivial"] = r.unsquared_trivial;
  j["squared_image_length"] = r.squared_image.size();
  j["squared_trivial"] = r.squared_trivial;
  return j;
}

int cmd_verify(RunConfig const& cfg) {
  Stopwatch clock;
  json in = read_json_file(cfg.input);
  hb::Halo halo;
  json report;
  if (hb::looks_like_halo(in)) {
    halo = hb::halo_from_json(in);
    report["input"] = "halo";
  } else {
    auto delta = hb::graph_from_json(in);
    hb::Coloring coloring = choose_coloring(delta, cfg);
    report["input"] = "graph";
    if (auto defect = hb::coloring_defect(delta, coloring)) {
      report["pass"] = false;
      report["coloring"] = hb::to_json(coloring);
      report["error"] = *defect;
      emit(report);
      return exit_verify;
    }
    halo = hb::build_halo(delta, coloring);
  }
  check_strands(cfg, halo.coloring);
  report["strands"] = halo.strand_count();
  report["path_threshold"] = hb::to_string(cfg.threshold);
  report["coloring"] = hb::to_json(halo.coloring);

  hb::HaloReport axioms = hb::verify_halo(halo);
  report["halo"] = hb::to_json(axioms);
  clock.lap("halo");
  if (!axioms.passed()) {
    report["pass"] = false;
    emit(report);
    return exit_verify;
  }
  report["planar"] = nullable(planar_or_null(halo.gamma));

  hb::EmbeddingContext ctx = hb::context_from_halo(halo, cfg.threshold);
  hb::SubdivisionReport subdivision = hb::is_sufficiently_subdivided(ctx.halo.gamma, ctx.n, cfg.threshold);
  report["subdivision"] = hb::to_json(subdivision);
  report["subdivided_gamma"] = {{"vertices", ctx.halo.gamma.order()}, {"edges", ctx.halo.gamma.size()}};
  clock.lap("subdivision");

  hb::HomomorphismReport hom = hb::check_homomorphism(ctx);
  report["homomorphism"] = homomorphism_json(hom);
  clock.lap("homomorphism");

  hb::InjectivityReport inj =
      hb::injectivity_spot_check(ctx, cfg.max_len, cfg.samples, cfg.seed, !cfg.unsquared);
  report["injectivity"] = injectivity_json(inj, ctx.a_delta);
  clock.lap("injectivity");

  bool pass = subdivision.sufficient() && hom.passed() && inj.passed();
  if (hb::squaring_counterexample_roles(ctx.delta)) {
    hb::CounterexampleReport cx = hb::squaring_counterexample(ctx.delta, cfg.threshold);
    report["counterexample"] = counterexample_json(cx, ctx.delta);
    pass = pass && cx.reproduced();
    clock.lap("counterexample");
  }
  report["pass"] = pass;
  if (cfg.timings) {
    report["timings_ms"] = clock.to_json();
  }
  if (cfg.format == Format::text) {
    std::cout << "halo axioms: " << (axioms.passed() ? "pass" : "fail") << '\n'
              << "subdivision: " << (subdivision.sufficient() ? "pass" : "fail") << '\n'
              << "homomorphism: " << (hom.passed() ? "pass" : "fail") << '\n'
              << "injectivity: " << (inj.passed() ? "pass" : "fail") << " ("
              << inj.words_checked() << " words)\n";
    if (report.contains("counterexample")) {
      std::cout << "counterexample: "
                << (report["counterexample"]["pass"].get<bool>() ? "reproduced" : "not reproduced")
                << '\n';
    }
    std::cout << "overall: " << (pass ? "pass" : "fail") << '\n';
  } else {
    emit(report);
  }
  return pass ? exit_ok : exit_verify;
}

int dispatch(std::string const& command, RunConfig const& cfg) {
  try {
    if (command == "color") {
      return cmd_color(cfg);
    }
    if (command == "halo") {
      return cmd_halo(cfg);
    }
    if (command == "configspace") {
      return cmd_configspace(cfg);
    }
    if (command == "embed") {
      return cmd_embed(cfg);
    }
    return cmd_verify(cfg);
  } catch (hb::input_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  } catch (hb::size_exceeded_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_resource;
  } catch (hb::error const& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return exit_verify;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Halo graphs, graph braid groups and the embedding of right-angled Artin groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "json";
  std::string threshold = "paper";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", cfg.input, "graph or halo JSON file")->required();
    sub->add_option("--format,-f", format, "output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_flag("--timings", cfg.timings, "add wall-clock timings to the output");
  };
  auto add_coloring = [&](CLI::App* sub) {
    sub->add_option("--coloring", cfg.coloring_file, "coloring JSON file");
    sub->add_flag("--exact", cfg.exact, "use a minimum coloring instead of greedy");
    sub->add_option("--n", cfg.n, "strand count; must equal the number of colors");
    sub->add_option("--path-threshold", threshold, "minimum essential path length rule")
        ->check(CLI::IsMember({"paper", "alt"}));
  };

  auto* color = app.add_subcommand("color", "color a graph");
  add_common(color);
  color->add_flag("--exact", cfg.exact, "minimum coloring");

  auto* halo = app.add_subcommand("halo", "build, subdivide and verify the canonical halo");
  add_common(halo);
  add_coloring(halo);

  auto* configspace = app.add_subcommand("configspace", "count cells of UD^n");
  add_common(configspace);
  configspace->add_option("--n", cfg.n, "strand count")->required();
  configspace->add_option("--cell-budget", cfg.cell_budget, "maximum number of cells");

  auto* embed = app.add_subcommand("embed", "image of a word of G(Delta) in A_Gamma");
  add_common(embed);
  add_coloring(embed);
  embed->add_flag("--unsquared", cfg.unsquared, "map a_i to its loop once instead of twice");
  embed->add_option("word", cfg.word, "word such as \"a b a^-1 ~b\"");

  auto* verify = app.add_subcommand("verify", "run every check on a graph or halo");
  add_common(verify);
  add_coloring(verify);
  verify->add_flag("--unsquared", cfg.unsquared, "spot-check the unsquared map");
  verify->add_option("--max-len", cfg.max_len, "maximum word length for the spot check");
  verify->add_option("--samples", cfg.samples, "random words in the spot check");
  verify->add_option("--seed", cfg.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_input;
  }

  cfg.format = format == "dot" ? Format::dot : format == "text" ? Format::text : Format::json;
  cfg.threshold = threshold == "alt" ? hb::PathThreshold::alt : hb::PathThreshold::paper;
  if (cfg.exact && !cfg.coloring_file.empty()) {
    std::cerr << "error: --exact and --coloring are exclusive\n";
    return exit_input;
  }
  return dispatch(app.get_subcommands().front()->get_name(), cfg);
}
