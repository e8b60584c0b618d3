#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "halobraid.hpp"
#include "oracles.hpp"

using namespace halobraid;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, std::string const& what) {
    if (!ok && pass) {
      detail << "first failure: " << what << "; ";
    }
    pass = pass && ok;
  }
};

GroupWord from_signed(std::vector<int> const& w) {
  GroupWord out;
  for (int x : w) {
    out.letters.push_back({static_cast<std::size_t>(std::abs(x) - 1), x < 0});
  }
  return out;
}

std::vector<Coloring> standard_colorings(SimpleGraph const& delta) {
  return {greedy_color(delta), chromatic_number(delta)};
}

Outcome counterexample() {
  Outcome o;
  auto start = Clock::now();
  auto report = squaring_counterexample(squaring_counterexample_delta());
  double t = seconds_since(start);
  o.require(!report.g_trivial, "g is trivial in G(Delta)");
  o.require(report.unsquared_trivial, "unsquared image is nontrivial");
  o.require(!report.squared_trivial, "squared image is trivial");
  o.require(t < 1.0, "runtime over 1 s");
  o.detail << "g_trivial=" << report.g_trivial << " unsquared_trivial=" << report.unsquared_trivial
           << " squared_trivial=" << report.squared_trivial << " (" << t << " s)";
  return o;
}

Outcome c6_scenario() {
  Outcome o;
  auto start = Clock::now();
  auto c6 = oracle::cycle_graph(6);
  Coloring c = chromatic_number(c6);
  o.require(c.color_count == 2, "chromatic number is not 2");
  Halo h = build_halo(c6, c);
  o.require(verify_halo(h).passed(), "canonical halo fails verification");
  o.require(is_planar(h.gamma), "halo graph is not planar");

  EmbeddingContext ctx = build_context(c6, c);
  auto hom = check_homomorphism(ctx);
  o.require(hom.relators.size() == 6, "expected 6 relators");
  for (auto const& r : hom.relators) {
    o.require(r.image_trivial, "relator [" + r.a + "," + r.b + "] has nontrivial image");
  }
  auto exhaustive = injectivity_spot_check(ctx, 4, 0, 0);
  o.require(exhaustive.exhaustive, "length 4 check was not exhaustive");
  o.require(exhaustive.passed(), "failure among words of length <= 4");
  auto sampled = injectivity_spot_check(ctx, 8, 500, 2024);
  o.require(sampled.samples_checked == 500, "fewer than 500 samples");
  o.require(sampled.passed(), "failure among sampled words of length <= 8");
  double t = seconds_since(start);
  o.require(t < 60.0, "runtime over 60 s");
  o.detail << "colors=" << c.color_count << " relators=" << hom.relators.size()
           << " exhaustive_words=" << exhaustive.exhaustive_words << " samples=" << sampled.samples_checked
           << " failures=" << exhaustive.failures.size() + sampled.failures.size() << " (" << t << " s)";
  return o;
}

Outcome config_space_oracle() {
  Outcome o;
  auto start = Clock::now();
  std::size_t graphs = 0;
  std::size_t comparisons = 0;
  std::size_t mismatches = 0;
  auto compare = [&](SimpleGraph const& g) {
    ++graphs;
    for (std::size_t n = 1; n <= 3 && n <= g.order(); ++n) {
      auto ours = build_udc(g, n).counts();
      auto brute = oracle::brute_udc_counts(g, n);
      ++comparisons;
      if (ours.zero_cells != brute.zero_cells || ours.one_cells != brute.one_cells) {
        ++mismatches;
      }
    }
  };
  for (auto const& g : oracle::graphs_up_to(6, true, 9)) {
    compare(g);
  }
  // Seven vertices: every labelled connected graph with at most 9 edges.
  std::size_t const pairs = oracle::all_pairs(7).size();
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    if (std::popcount(mask) <= 9 && oracle::mask_connected(7, mask)) {
      compare(oracle::graph_from_mask(7, mask));
    }
  }
  double t = seconds_since(start);
  o.require(mismatches == 0, "cell counts disagree with brute force");
  o.detail << "graphs=" << graphs << " comparisons=" << comparisons << " mismatches=" << mismatches << " ("
           << t << " s)";
  return o;
}

Outcome raag_oracle() {
  Outcome o;
  auto start = Clock::now();
  auto graphs = oracle::graphs_up_to(3, false);
  auto four = oracle::graphs_up_to_isomorphism(4, false);
  o.require(four.size() == 11, "expected 11 graphs on 4 vertices");
  graphs.insert(graphs.end(), four.begin(), four.end());
  std::size_t words = 0;
  std::size_t mismatches = 0;
  for (auto const& g : graphs) {
    RaagPresentation p(g);
    oracle::TrivialityOracle bfs(g);
    for (std::size_t len = 0; len <= 6; ++len) {
      oracle::for_each_signed_word(g.order(), len, [&](std::vector<int> const& w) {
        ++words;
        if (is_trivial(from_signed(w), p) != bfs.trivial(w)) {
          ++mismatches;
        }
      });
    }
  }
  double t = seconds_since(start);
  o.require(mismatches == 0, "is_trivial disagrees with the rewriting oracle");
  o.require(t < 600.0, "runtime over 10 min");
  o.detail << "groups=" << graphs.size() << " words=" << words << " mismatches=" << mismatches << " (" << t
           << " s)";
  return o;
}

Outcome subdivision_fixtures() {
  Outcome o;
  o.require(is_sufficiently_subdivided(fixture::figure_three_squares().gamma, 3).sufficient(),
            "three-square halo fails for n = 3");
  o.require(!is_sufficiently_subdivided(oracle::cycle_graph(3), 3).sufficient(), "C3 passes for n = 3");
  std::size_t halos = 0;
  for (auto const& delta : oracle::graphs_up_to(6, false)) {
    for (auto const& c : standard_colorings(delta)) {
      Halo h = build_halo(delta, c);
      std::size_t n = static_cast<std::size_t>(c.color_count);
      ++halos;
      o.require(is_sufficiently_subdivided(subdivide_for(h.gamma, n), n).sufficient(),
                "subdivide_for output fails the checker");
      Halo s = subdivided_halo(h, n);
      o.require(is_sufficiently_subdivided(s.gamma, n).sufficient() && verify_halo(s).passed(),
                "subdivided halo fails");
    }
  }
  o.detail << "three_squares=pass C3=fail subdivided_halos=" << halos;
  return o;
}

bool names(HaloReport const& r, HaloAxiom axiom, std::vector<Vertex> const& witnesses) {
  for (auto const& v : r.violations) {
    if (v.axiom != axiom) {
      continue;
    }
    bool all = true;
    for (auto const& w : witnesses) {
      all = all && std::find(v.witnesses.begin(), v.witnesses.end(), w) != v.witnesses.end();
    }
    if (all) {
      return true;
    }
  }
  return false;
}

Outcome halo_axioms() {
  Outcome o;
  std::size_t halos = 0;
  std::size_t mutations = 0;
  for (auto const& delta : oracle::graphs_up_to(6, true)) {
    for (auto const& c : standard_colorings(delta)) {
      Halo h = build_halo(delta, c);
      ++halos;
      o.require(verify_halo(h).passed(), "canonical halo fails verification");
      for (auto const& a : delta.vertices()) {
        ++mutations;
        o.require(names(verify_halo(fixture::delete_loop_edge(h, a)), HaloAxiom::simple_loop, {a}),
                  "deleted loop edge of " + a + " not reported as simple-loop");
      }
      for (auto const& e : delta.edges()) {
        ++mutations;
        o.require(names(verify_halo(fixture::force_intersection(h, e.first, e.second)), HaloAxiom::edge,
                        {e.first, e.second}),
                  "forced intersection of " + e.first + "," + e.second + " not reported as edge");
      }
      for (int color = 1; color <= c.color_count; ++color) {
        ++mutations;
        // A lone loop of its color still holds the moved point, so only its start is wrong.
        bool lone = c.color_class(color).size() == 1;
        HaloAxiom expected = lone ? HaloAxiom::loop_start : HaloAxiom::basepoint;
        o.require(verify_halo(fixture::move_basepoint(h, color)).violates(expected),
                  std::string("moved basepoint not reported as ") + to_string(expected));
      }
    }
  }
  o.detail << "halos=" << halos << " mutations=" << mutations;
  return o;
}

Outcome britton() {
  Outcome o;
  std::mt19937_64 rng(31);
  std::size_t fixpoints = 0;
  for (auto const& g : oracle::graphs_up_to(4, false)) {
    RaagPresentation p(g);
    for (int k = 0; k < 200; ++k) {
      GroupWord w;
      std::size_t len = rng() % 16;
      for (std::size_t i = 0; i < len; ++i) {
        w.letters.push_back({static_cast<std::size_t>(rng() % g.order()), rng() % 2 == 1});
      }
      for (std::size_t v = 0; v < p.rank(); ++v) {
        ++fixpoints;
        o.require(!detect_pinch(pinch_reduce(w, v, p), v, p).has_value(), "pinch_reduce left a pinch");
      }
    }
  }

  auto delta = squaring_counterexample_delta();
  EmbeddingContext figure = build_context(delta, fixture::figure_coloring());
  auto roles = *squaring_counterexample_roles(delta);
  auto g = squaring_counterexample_word(figure.a_delta, roles);
  auto unsquared = pinch_trace(g, figure, false);
  o.require(unsquared.reached_empty(), "unsquared counterexample trace does not reach the empty word");

  std::vector<EmbeddingContext> contexts{figure};
  auto c6 = oracle::cycle_graph(6);
  contexts.push_back(build_context(c6, chromatic_number(c6)));
  for (auto const& d : oracle::graphs_up_to(4, false)) {
    contexts.push_back(build_context(d, chromatic_number(d)));
  }
  std::size_t singles = 0;
  for (auto const& ctx : contexts) {
    for (std::size_t a = 0; a < ctx.a_delta.rank(); ++a) {
      for (bool inv : {false, true}) {
        ++singles;
        o.require(!pinch_trace(GroupWord{{a, inv}}, ctx, true).reached_empty(),
                  "squared image of a single generator traced to the empty word");
      }
    }
  }
  o.detail << "fixpoints=" << fixpoints << " unsquared_steps=" << unsquared.steps.size()
           << " squared_single_generator_traces=" << singles << " in " << contexts.size() << " contexts";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<char const*, std::function<Outcome()>>> criteria{
      {"counterexample regression", counterexample},
      {"C6 planar two-strand scenario", c6_scenario},
      {"configuration space oracle", config_space_oracle},
      {"RAAG oracle", raag_oracle},
      {"subdivision fixtures", subdivision_fixtures},
      {"halo axiom suite", halo_axioms},
      {"Britton machinery", britton},
  };
  int failed = 0;
  int index = 0;
  for (auto const& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (std::exception const& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.str().c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
