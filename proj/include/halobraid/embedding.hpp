#ifndef HALOBRAID_EMBEDDING_HPP_
#define HALOBRAID_EMBEDDING_HPP_

// G(Delta) -> B_n Gamma -> A_Gamma.
//
// Delta_Gamma has one vertex per edge of Gamma, two of them adjacent iff the
// edges' closures are disjoint; A_Gamma = G(Delta_Gamma). The forgetful map
// phi sends an edge path of UD^n Gamma to the word of edges crossed, and psi
// sends a_i to the Artin loop gamma_i (squared by default). The composite is
// injective when squared; without the square it can fail, which the
// squaring counterexample reproduces.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "halobraid/config_space.hpp"
#include "halobraid/errors.hpp"
#include "halobraid/graph.hpp"
#include "halobraid/halo.hpp"
#include "halobraid/raag.hpp"
#include "halobraid/subdivision.hpp"

namespace halobraid {

struct EmbeddingContext {
  SimpleGraph delta;
  Coloring coloring;
  Halo halo;  // sufficiently subdivided for n strands
  std::size_t n = 0;
  PathThreshold threshold = PathThreshold::paper;
  RaagPresentation a_delta;
  SimpleGraph delta_gamma;
  RaagPresentation a_gamma;
  // Gamma-edge -> generator of A_Gamma. The edge's stored order is its
  // orientation: crossing first -> second reads as a positive letter.
  std::map<Edge, std::size_t> edge_generator;
  // One traversal of each Artin loop and its image under phi.
  std::map<Vertex, ConfigEdgePath> unit_loops;
  std::map<Vertex, GroupWord> loop_images;
};

inline std::string edge_generator_name(Edge const& e) {
  return "[" + e.first + "|" + e.second + "]";
}

// Vertices are the edges of gamma; adjacency is closure-disjointness.
inline SimpleGraph build_delta_gamma(SimpleGraph const& gamma) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  auto const& ge = gamma.edges();
  for (auto const& e : ge) {
    vertices.push_back(edge_generator_name(e));
  }
  for (std::size_t i = 0; i < ge.size(); ++i) {
    for (std::size_t j = i + 1; j < ge.size(); ++j) {
      if (!ge[i].touches(ge[j])) {
        edges.emplace_back(vertices[i], vertices[j]);
      }
    }
  }
  return SimpleGraph(std::move(vertices), std::move(edges));
}

inline GroupWord phi(ConfigEdgePath const& path, EmbeddingContext const& ctx) {
  GroupWord w;
  w.letters.reserve(path.size());
  for (auto const& step : path.steps) {
    auto it = ctx.edge_generator.find(step.edge);
    if (it == ctx.edge_generator.end()) {
      throw unknown_generator_error(edge_generator_name(step.edge));
    }
    w.letters.push_back({it->second, step.from != step.edge.first});
  }
  return w;
}

// Context over a caller-supplied halo. The halo must verify; it is
// subdivided further if needed.
inline EmbeddingContext context_from_halo(Halo const& candidate,
                                          PathThreshold threshold = PathThreshold::paper) {
  HaloReport report = verify_halo(candidate);
  if (!report.passed()) {
    auto const& v = report.violations.front();
    throw verification_error(std::string("halo violates the ") + to_string(v.axiom)
                             + " axiom: " + v.message);
  }
  EmbeddingContext ctx;
  ctx.delta = candidate.delta;
  ctx.coloring = candidate.coloring;
  ctx.n = candidate.strand_count();
  ctx.threshold = threshold;
  ctx.halo = subdivided_halo(candidate, ctx.n, threshold);
  ctx.a_delta = RaagPresentation(ctx.delta);
  ctx.delta_gamma = build_delta_gamma(ctx.halo.gamma);
  ctx.a_gamma = RaagPresentation(ctx.delta_gamma);
  for (auto const& e : ctx.halo.gamma.edges()) {
    ctx.edge_generator.emplace(e, ctx.a_gamma.generator(edge_generator_name(e)));
  }
  for (auto const& a : ctx.delta.vertices()) {
    ConfigEdgePath unit = artin_loop_path(ctx.halo, ctx.n, a, 1, threshold);
    ctx.loop_images.emplace(a, phi(unit, ctx));
    ctx.unit_loops.emplace(a, std::move(unit));
  }
  return ctx;
}

inline EmbeddingContext build_context(SimpleGraph const& delta,
                                      Coloring const& coloring,
                                      PathThreshold threshold = PathThreshold::paper) {
  return context_from_halo(build_halo(delta, coloring), threshold);
}

// Per letter a^e: the loop of a run 2e times (e times when not squared).
inline ConfigEdgePath psi(GroupWord const& w, EmbeddingContext const& ctx, bool squared = true) {
  ConfigEdgePath out;
  out.base = ctx.halo.artin_basepoint();
  long const reps = squared ? 2 : 1;
  for (Letter const& x : w.letters) {
    ConfigEdgePath const& unit = ctx.unit_loops.at(ctx.a_delta.generator_name(x.generator));
    ConfigEdgePath const piece = x.inverse ? reverse_path(unit) : unit;
    for (long k = 0; k < reps; ++k) {
      out.steps.insert(out.steps.end(), piece.steps.begin(), piece.steps.end());
    }
  }
  return out;
}

// phi(psi(w)), assembled from the cached loop images; phi is a monoid map
// on paths, so this is letter-for-letter the same word.
inline GroupWord phi_psi(GroupWord const& w, EmbeddingContext const& ctx, bool squared = true) {
  GroupWord out;
  long const reps = squared ? 2 : 1;
  for (Letter const& x : w.letters) {
    GroupWord const& img = ctx.loop_images.at(ctx.a_delta.generator_name(x.generator));
    out *= power(img, x.inverse ? -reps : reps);
  }
  return out;
}

// Generators of A_Gamma occurring in w.
inline std::set<std::size_t> support(GroupWord const& w) {
  std::set<std::size_t> s;
  for (Letter const& x : w.letters) {
    s.insert(x.generator);
  }
  return s;
}

////////////////////////////////////////////////////////////////////////////////
// Homomorphism check
////////////////////////////////////////////////////////////////////////////////

struct RelatorCheck {
  Vertex a;
  Vertex b;
  bool image_trivial = false;
  bool disjoint_support = false;
  bool supports_commute = false;

  bool passed() const noexcept {
    return image_trivial && disjoint_support && supports_commute;
  }
};

struct HomomorphismReport {
  std::vector<RelatorCheck> relators;

  bool passed() const noexcept {
    return std::all_of(relators.begin(), relators.end(),
                       [](auto const& r) { return r.passed(); });
  }
};

// Each defining relator [a, b] of G(Delta) must map to the identity; in
// addition the images of a and b use disjoint, pairwise commuting sets of
// generators.
inline HomomorphismReport check_homomorphism(EmbeddingContext const& ctx) {
  HomomorphismReport report;
  for (auto const& e : ctx.delta.edges()) {
    RelatorCheck r;
    r.a = e.first;
    r.b = e.second;
    GroupWord wa{letter(ctx.a_delta, e.first)};
    GroupWord wb{letter(ctx.a_delta, e.second)};
    r.image_trivial = is_trivial(phi_psi(commutator(wa, wb), ctx, true), ctx.a_gamma);
    auto sa = support(phi_psi(wa, ctx, true));
    auto sb = support(phi_psi(wb, ctx, true));
    std::vector<std::size_t> shared;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::back_inserter(shared));
    r.disjoint_support = shared.empty();
    r.supports_commute = true;
    for (std::size_t x : sa) {
      for (std::size_t y : sb) {
        if (x == y || !ctx.a_gamma.commute(x, y)) {
          r.supports_commute = false;
        }
      }
    }
    report.relators.push_back(std::move(r));
  }
  return report;
}

////////////////////////////////////////////////////////////////////////////////
// Injectivity spot check
////////////////////////////////////////////////////////////////////////////////

struct InjectivityReport {
  bool squared = true;
  std::size_t max_len = 0;
  bool exhaustive = false;
  std::size_t exhaustive_words = 0;
  std::size_t samples_requested = 0;
  std::size_t samples_checked = 0;
  std::uint64_t seed = 0;
  // Nontrivial elements of G(Delta), as canonical words, with trivial image.
  std::vector<GroupWord> failures;

  bool passed() const noexcept {
    return failures.empty();
  }

  std::size_t words_checked() const noexcept {
    return exhaustive_words + samples_checked;
  }
};

namespace detail {

  inline constexpr std::uint64_t exhaustive_word_limit = 1'000'000;

  // Upper bound on freely reduced words of length 1..max_len.
  inline std::uint64_t free_word_bound(std::size_t rank, std::size_t max_len) {
    if (rank == 0) {
      return 0;
    }
    std::uint64_t total = 0;
    std::uint64_t layer = 2 * rank;
    for (std::size_t len = 1; len <= max_len; ++len) {
      total = saturating_add(total, layer);
      if (total > exhaustive_word_limit) {
        return total;
      }
      layer = layer > exhaustive_word_limit ? layer : layer * (2 * rank - 1);
    }
    return total;
  }

  // Visits each nontrivial element of length <= max_len once, as its
  // canonical word. Prefixes of canonical words are canonical.
  template <typename F>
  void for_each_canonical_word(RaagPresentation const& p, std::size_t max_len, F&& f) {
    GroupWord w;
    auto extend = [&](auto&& self) -> void {
      if (w.size() == max_len) {
        return;
      }
      for (std::size_t g = 0; g < p.rank(); ++g) {
        for (bool inv : {false, true}) {
          w.letters.push_back({g, inv});
          if (raag_reduce(w, p) == w) {
            f(static_cast<GroupWord const&>(w));
            self(self);
          }
          w.letters.pop_back();
        }
      }
    };
    extend(extend);
  }

}  // namespace detail

// Checks that nontrivial elements of G(Delta) of length <= max_len have
// nontrivial image. Enumerates every element when the word count is
// manageable, then adds sample_count seeded random elements.
inline InjectivityReport injectivity_spot_check(EmbeddingContext const& ctx,
                                                std::size_t max_len,
                                                std::size_t sample_count,
                                                std::uint64_t seed,
                                                bool squared = true) {
  InjectivityReport report;
  report.squared = squared;
  report.max_len = max_len;
  report.samples_requested = sample_count;
  report.seed = seed;
  std::set<GroupWord> failures;
  auto check = [&](GroupWord const& w) {
    if (is_trivial(phi_psi(w, ctx, squared), ctx.a_gamma)) {
      failures.insert(w);
    }
  };
  std::size_t const rank = ctx.a_delta.rank();
  if (max_len == 0 || rank == 0) {
    report.exhaustive = true;
    return report;
  }
  if (detail::free_word_bound(rank, max_len) <= detail::exhaustive_word_limit) {
    report.exhaustive = true;
    detail::for_each_canonical_word(ctx.a_delta, max_len, [&](GroupWord const& w) {
      ++report.exhaustive_words;
      check(w);
    });
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < sample_count; ++s) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::size_t len = 1 + static_cast<std::size_t>(rng() % max_len);
      GroupWord w;
      for (std::size_t k = 0; k < len; ++k) {
        std::uint64_t r = rng() % (2 * rank);
        w.letters.push_back({static_cast<std::size_t>(r / 2), (r % 2) == 1});
      }
      w = raag_reduce(w, ctx.a_delta);
      if (!w.empty()) {
        ++report.samples_checked;
        check(w);
        break;
      }
    }
  }
  report.failures.assign(failures.begin(), failures.end());
  return report;
}

////////////////////////////////////////////////////////////////////////////////
// Pinch trace
////////////////////////////////////////////////////////////////////////////////

// Shapes of e_1-pinches around a whole traversal e_1 ... e_m of the chosen
// loop: e_1..e_m g e_m^-1..e_1^-1 (forward) and
// e_1^-1 e_m^-1..e_2^-1 g e_2..e_m e_1 (backward).
enum class PinchPattern { plain, loop_forward, loop_backward };

inline char const* to_string(PinchPattern p) noexcept {
  switch (p) {
    case PinchPattern::plain:
      return "plain";
    case PinchPattern::loop_forward:
      return "loop-forward";
    case PinchPattern::loop_backward:
      return "loop-backward";
  }
  return "unknown";
}

struct PinchStep {
  PinchWitness pinch;
  PinchPattern pattern = PinchPattern::plain;
  GroupWord result;
};

struct PinchTrace {
  bool squared = true;
  Vertex loop_vertex;                    // a, the first generator of w
  std::optional<std::size_t> stable;     // e_1
  GroupWord image;
  std::vector<PinchStep> steps;
  GroupWord final_word;

  bool reached_empty() const noexcept {
    return final_word.empty();
  }
};

namespace detail {

  inline bool matches_at(GroupWord const& w, std::size_t pos, std::vector<Letter> const& pattern) {
    if (pos + pattern.size() > w.size()) {
      return false;
    }
    return std::equal(pattern.begin(), pattern.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(pos));
  }

  inline PinchPattern classify_pinch(GroupWord const& w,
                                     PinchWitness const& pinch,
                                     GroupWord const& loop) {
    std::size_t const m = loop.size();
    if (m == 0 || pinch.stable != loop[0].generator || pinch.last + 1 < m
        || pinch.first + 2 * m > pinch.last + 1) {
      return PinchPattern::plain;
    }
    std::size_t tail = pinch.last + 1 - m;
    if (matches_at(w, pinch.first, loop.letters)
        && matches_at(w, tail, loop.inverse().letters)) {
      return PinchPattern::loop_forward;
    }
    // e_2 .. e_m e_1
    std::vector<Letter> rotated(loop.letters.begin() + 1, loop.letters.end());
    rotated.push_back(loop[0]);
    GroupWord rot(rotated);
    if (matches_at(w, pinch.first, rot.inverse().letters) && matches_at(w, tail, rot.letters)) {
      return PinchPattern::loop_backward;
    }
    return PinchPattern::plain;
  }

}  // namespace detail

// Replays the pinch argument on the image of w: with e_1 the first edge of
// the Artin loop of w's first generator, pinches are removed with stable
// letters tried in the order e_1, e_2, ..., e_m, then every other generator,
// restarting from e_1 after each removal. By Britton's lemma the trace ends
// at the empty word exactly when the image is trivial.
inline PinchTrace pinch_trace(GroupWord const& w, EmbeddingContext const& ctx, bool squared = true) {
  PinchTrace trace;
  trace.squared = squared;
  if (w.empty()) {
    return trace;
  }
  trace.loop_vertex = ctx.a_delta.generator_name(w[0].generator);
  GroupWord const& loop = ctx.loop_images.at(trace.loop_vertex);
  if (!loop.empty()) {
    trace.stable = loop[0].generator;
  }
  std::vector<std::size_t> priority;
  std::vector<bool> listed(ctx.a_gamma.rank(), false);
  for (Letter const& x : loop.letters) {
    if (!listed[x.generator]) {
      listed[x.generator] = true;
      priority.push_back(x.generator);
    }
  }
  for (std::size_t g = 0; g < ctx.a_gamma.rank(); ++g) {
    if (!listed[g]) {
      priority.push_back(g);
    }
  }

  trace.image = phi_psi(w, ctx, squared);
  GroupWord current = trace.image;
  while (!current.empty()) {
    std::vector<bool> present(ctx.a_gamma.rank(), false);
    for (Letter const& x : current.letters) {
      present[x.generator] = true;
    }
    std::optional<PinchWitness> found;
    for (std::size_t v : priority) {
      if (present[v]) {
        found = detect_pinch(current, v, ctx.a_gamma);
        if (found) {
          break;
        }
      }
    }
    if (!found) {
      break;
    }
    PinchStep step;
    step.pattern = detail::classify_pinch(current, *found, loop);
    current = apply_pinch(current, *found);
    step.pinch = std::move(*found);
    step.result = current;
    trace.steps.push_back(std::move(step));
  }
  trace.final_word = std::move(current);
  return trace;
}

////////////////////////////////////////////////////////////////////////////////
// The squaring counterexample: Delta = <a, b, c | [a, c]> with three colors,
// g = c b a b^-1 c^-1 b a^-1 b^-1 is nontrivial, its unsquared image is
// trivial and its squared image is not.
////////////////////////////////////////////////////////////////////////////////

// Roles (a, b, c) when delta has three vertices and exactly one edge: the
// edge's endpoints in vertex order, then the isolated vertex.
inline std::optional<std::array<Vertex, 3>> squaring_counterexample_roles(SimpleGraph const& delta) {
  if (delta.order() != 3 || delta.size() != 1) {
    return std::nullopt;
  }
  Edge const& e = delta.edges().front();
  for (auto const& v : delta.vertices()) {
    if (!e.contains(v)) {
      return std::array<Vertex, 3>{e.first, v, e.second};
    }
  }
  return std::nullopt;
}

inline SimpleGraph squaring_counterexample_delta() {
  return SimpleGraph({"a", "b", "c"}, {Edge("a", "c")});
}

struct CounterexampleReport {
  std::array<Vertex, 3> roles;
  Coloring coloring;
  GroupWord g;
  bool g_trivial = true;
  GroupWord unsquared_image;
  bool unsquared_trivial = false;
  GroupWord squared_image;
  bool squared_trivial = true;

  bool reproduced() const noexcept {
    return !g_trivial && unsquared_trivial && !squared_trivial;
  }
};

inline GroupWord squaring_counterexample_word(RaagPresentation const& p,
                                              std::array<Vertex, 3> const& roles) {
  Letter a = letter(p, roles[0]);
  Letter b = letter(p, roles[1]);
  Letter c = letter(p, roles[2]);
  return GroupWord{c, b, a, b.inverted(), c.inverted(), b, a.inverted(), b.inverted()};
}

// Runs on the figure's coloring a -> 1, b -> 2, c -> 3.
inline CounterexampleReport squaring_counterexample(SimpleGraph const& delta,
                                                    PathThreshold threshold = PathThreshold::paper) {
  auto roles = squaring_counterexample_roles(delta);
  if (!roles) {
    throw input_error("graph is not a single edge plus an isolated vertex");
  }
  CounterexampleReport report;
  report.roles = *roles;
  report.coloring.color_count = 3;
  for (int k = 0; k < 3; ++k) {
    report.coloring.assignment.emplace((*roles)[static_cast<std::size_t>(k)], k + 1);
  }
  EmbeddingContext ctx = build_context(delta, report.coloring, threshold);
  report.g = squaring_counterexample_word(ctx.a_delta, *roles);
  report.g_trivial = is_trivial(report.g, ctx.a_delta);
  report.unsquared_image = phi_psi(report.g, ctx, false);
  report.unsquared_trivial = is_trivial(report.unsquared_image, ctx.a_gamma);
  report.squared_image = phi_psi(report.g, ctx, true);
  report.squared_trivial = is_trivial(report.squared_image, ctx.a_gamma);
  return report;
}

}  // namespace halobraid

#endif  // HALOBRAID_EMBEDDING_HPP_
