#ifndef HALOBRAID_HALO_HPP_
#define HALOBRAID_HALO_HPP_

// Delta-halos: a connected graph Gamma with one simple edge loop per vertex
// of Delta (its Artin loop) and one basepoint x_c per color c such that
//
//   * x_c lies on exactly the loops of the vertices colored c;
//   * loops of non-adjacent vertices meet in exactly one vertex, which is
//     x_c when the colors agree and lies on no third loop otherwise;
//   * loops of adjacent vertices are disjoint.
//
// build_halo emits one canonical halo; verify_halo checks any candidate.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "halobraid/errors.hpp"
#include "halobraid/graph.hpp"
#include "halobraid/subdivision.hpp"

namespace halobraid {

struct Halo {
  SimpleGraph delta;
  Coloring coloring;
  SimpleGraph gamma;
  // Delta-vertex -> closed vertex sequence (front == back == x_{C(a)}); the
  // stored order is the traversal direction.
  std::map<Vertex, std::vector<Vertex>> artin_loops;
  std::map<int, Vertex> basepoints;

  std::size_t strand_count() const noexcept {
    return static_cast<std::size_t>(coloring.color_count);
  }

  std::vector<Vertex> const& loop(Vertex const& a) const {
    auto it = artin_loops.find(a);
    if (it == artin_loops.end()) {
      throw unknown_vertex_error(a);
    }
    return it->second;
  }

  // Sorted basepoints {x_1, ..., x_n}.
  std::vector<Vertex> artin_basepoint() const {
    std::vector<Vertex> out;
    for (auto const& [c, x] : basepoints) {
      out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(Halo const&, Halo const&) = default;
};

enum class HaloAxiom {
  coloring,
  simple_loop,
  loop_start,
  basepoint,
  non_edge,
  edge,
  connected
};

inline char const* to_string(HaloAxiom a) noexcept {
  switch (a) {
    case HaloAxiom::coloring:
      return "coloring";
    case HaloAxiom::simple_loop:
      return "simple-loop";
    case HaloAxiom::loop_start:
      return "loop-start";
    case HaloAxiom::basepoint:
      return "basepoint";
    case HaloAxiom::non_edge:
      return "non-edge";
    case HaloAxiom::edge:
      return "edge";
    case HaloAxiom::connected:
      return "connected";
  }
  return "unknown";
}

struct HaloViolation {
  HaloAxiom axiom;
  std::string message;
  std::vector<std::string> witnesses;
};

struct HaloReport {
  std::vector<HaloViolation> violations;

  bool passed() const noexcept {
    return violations.empty();
  }

  bool violates(HaloAxiom a) const noexcept {
    return std::any_of(violations.begin(), violations.end(), [a](auto const& v) {
      return v.axiom == a;
    });
  }
};

namespace detail {

  inline std::string basepoint_name(int c) {
    return "x_" + std::to_string(c);
  }

  inline std::string junction_name(Vertex const& a, Vertex const& b) {
    return "v_" + a + "_" + b;
  }

  inline std::string arc_name(Vertex const& a, std::size_t k) {
    return "p_" + a + "_" + std::to_string(k);
  }

  inline std::string graft_name(std::size_t k) {
    return "g_" + std::to_string(k);
  }

  inline std::set<Vertex> loop_vertex_set(std::vector<Vertex> const& loop) {
    if (loop.size() <= 1) {
      return {loop.begin(), loop.end()};
    }
    return {loop.begin(), loop.end() - 1};
  }

}  // namespace detail

// Canonical halo: one basepoint per color, one junction per non-adjacent
// pair of distinct colors, loops through x_{C(a)} and then the junctions of
// a in vertex order, consecutive stops joined by private 2-edge arcs. A
// vertex with no junction gets a private 3-cycle through its basepoint.
// Components of the result are joined by private 2-edge paths between
// basepoints.
inline Halo build_halo(SimpleGraph const& delta, Coloring const& coloring) {
  if (delta.empty()) {
    throw empty_graph_error();
  }
  require_proper_coloring(delta, coloring);

  Halo h;
  h.delta = delta;
  h.coloring = coloring;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  for (int c = 1; c <= coloring.color_count; ++c) {
    h.basepoints.emplace(c, detail::basepoint_name(c));
    vertices.push_back(detail::basepoint_name(c));
  }

  auto const& dv = delta.vertices();
  // junctions[i] lists the junction vertices of loop i in partner order.
  std::vector<std::vector<Vertex>> junctions(dv.size());
  for (std::size_t i = 0; i < dv.size(); ++i) {
    for (std::size_t j = i + 1; j < dv.size(); ++j) {
      if (delta.adjacent(i, j)
          || coloring.color_of(dv[i]) == coloring.color_of(dv[j])) {
        continue;
      }
      Vertex v = detail::junction_name(dv[i], dv[j]);
      vertices.push_back(v);
      junctions[i].push_back(v);
      junctions[j].push_back(v);
    }
  }
  // Each junctions[i] is ascending in partner order.

  for (std::size_t i = 0; i < dv.size(); ++i) {
    Vertex const& a = dv[i];
    Vertex const& x = h.basepoints.at(coloring.color_of(a));
    std::vector<Vertex> loop{x};
    if (junctions[i].empty()) {
      for (std::size_t k = 1; k <= 2; ++k) {
        vertices.push_back(detail::arc_name(a, k));
        loop.push_back(detail::arc_name(a, k));
      }
    } else {
      std::size_t k = 0;
      for (auto const& stop : junctions[i]) {
        vertices.push_back(detail::arc_name(a, ++k));
        loop.push_back(detail::arc_name(a, k));
        loop.push_back(stop);
      }
      vertices.push_back(detail::arc_name(a, ++k));
      loop.push_back(detail::arc_name(a, k));
    }
    loop.push_back(x);
    for (std::size_t k = 0; k + 1 < loop.size(); ++k) {
      edges.emplace_back(loop[k], loop[k + 1]);
    }
    h.artin_loops.emplace(a, std::move(loop));
  }

  SimpleGraph gamma(vertices, edges);
  auto components = connected_components(gamma);
  if (components.size() > 1) {
    // Anchor each component at its lowest-colored basepoint.
    auto anchor = [&](std::vector<std::size_t> const& comp) {
      int best = 0;
      for (auto const& [c, x] : h.basepoints) {
        if (std::binary_search(comp.begin(), comp.end(), gamma.index_of(x))) {
          best = c;
          break;
        }
      }
      return best;
    };
    std::vector<int> anchors;
    for (auto const& comp : components) {
      anchors.push_back(anchor(comp));
    }
    std::sort(anchors.begin(), anchors.end());
    for (std::size_t k = 1; k < anchors.size(); ++k) {
      Vertex g = detail::graft_name(k);
      vertices.push_back(g);
      edges.emplace_back(h.basepoints.at(anchors[0]), g);
      edges.emplace_back(g, h.basepoints.at(anchors[k]));
    }
    gamma = SimpleGraph(std::move(vertices), std::move(edges));
  }
  h.gamma = std::move(gamma);
  return h;
}

inline HaloReport verify_halo(Halo const& h) {
  HaloReport report;
  auto fail = [&](HaloAxiom axiom, std::string msg, std::vector<std::string> w) {
    report.violations.push_back({axiom, std::move(msg), std::move(w)});
  };

  if (auto defect = coloring_defect(h.delta, h.coloring)) {
    fail(HaloAxiom::coloring, *defect, {});
    return report;
  }

  auto const& dv = h.delta.vertices();
  std::vector<std::set<Vertex>> members(dv.size());

  for (std::size_t i = 0; i < dv.size(); ++i) {
    Vertex const& a = dv[i];
    auto it = h.artin_loops.find(a);
    if (it == h.artin_loops.end()) {
      fail(HaloAxiom::simple_loop, "no Artin loop for '" + a + "'", {a});
      continue;
    }
    auto const& loop = it->second;
    members[i] = detail::loop_vertex_set(loop);
    if (loop.size() < 4 || loop.front() != loop.back()) {
      fail(HaloAxiom::simple_loop,
           "Artin loop of '" + a + "' is not closed or has fewer than 3 edges",
           {a});
      continue;
    }
    if (members[i].size() != loop.size() - 1) {
      fail(HaloAxiom::simple_loop,
           "Artin loop of '" + a + "' repeats a vertex",
           {a});
    }
    for (std::size_t k = 0; k + 1 < loop.size(); ++k) {
      if (!h.gamma.contains(loop[k]) || !h.gamma.contains(loop[k + 1])
          || !h.gamma.adjacent(loop[k], loop[k + 1])) {
        fail(HaloAxiom::simple_loop,
             "Artin loop of '" + a + "' steps along a non-edge",
             {a, loop[k], loop[k + 1]});
        break;
      }
    }
  }
  for (auto const& [a, loop] : h.artin_loops) {
    if (!h.delta.contains(a)) {
      fail(HaloAxiom::simple_loop, "Artin loop for unknown vertex '" + a + "'", {a});
    }
  }

  for (int c = 1; c <= h.coloring.color_count; ++c) {
    auto it = h.basepoints.find(c);
    if (it == h.basepoints.end()) {
      fail(HaloAxiom::basepoint, "no basepoint for color " + std::to_string(c),
           {std::to_string(c)});
      continue;
    }
    Vertex const& x = it->second;
    if (!h.gamma.contains(x)) {
      fail(HaloAxiom::basepoint, "basepoint '" + x + "' is not a vertex of Gamma",
           {std::to_string(c), x});
      continue;
    }
    for (std::size_t i = 0; i < dv.size(); ++i) {
      bool on = members[i].contains(x);
      bool should = h.coloring.color_of(dv[i]) == c;
      if (on != should) {
        fail(HaloAxiom::basepoint,
             "basepoint x_" + std::to_string(c) + " = '" + x + "' "
                 + (should ? "missing from" : "lies on") + " the loop of '"
                 + dv[i] + "'",
             {std::to_string(c), x, dv[i]});
      }
    }
  }
  for (auto const& [c, x] : h.basepoints) {
    if (c < 1 || c > h.coloring.color_count) {
      fail(HaloAxiom::basepoint, "basepoint for unused color " + std::to_string(c),
           {std::to_string(c), x});
    }
  }

  for (std::size_t i = 0; i < dv.size(); ++i) {
    auto it = h.artin_loops.find(dv[i]);
    auto bp = h.basepoints.find(h.coloring.color_of(dv[i]));
    if (it == h.artin_loops.end() || it->second.empty() || bp == h.basepoints.end()) {
      continue;
    }
    if (it->second.front() != bp->second) {
      fail(HaloAxiom::loop_start,
           "Artin loop of '" + dv[i] + "' starts at '" + it->second.front()
               + "' instead of its basepoint '" + bp->second + "'",
           {dv[i], it->second.front()});
    }
  }

  for (std::size_t i = 0; i < dv.size(); ++i) {
    for (std::size_t j = i + 1; j < dv.size(); ++j) {
      std::vector<Vertex> common;
      std::set_intersection(members[i].begin(), members[i].end(),
                            members[j].begin(), members[j].end(),
                            std::back_inserter(common));
      if (h.delta.adjacent(i, j)) {
        if (!common.empty()) {
          std::vector<std::string> w{dv[i], dv[j]};
          w.insert(w.end(), common.begin(), common.end());
          fail(HaloAxiom::edge,
               "loops of adjacent '" + dv[i] + "' and '" + dv[j] + "' intersect",
               std::move(w));
        }
        continue;
      }
      if (common.size() != 1) {
        fail(HaloAxiom::non_edge,
             "loops of non-adjacent '" + dv[i] + "' and '" + dv[j] + "' share "
                 + std::to_string(common.size()) + " vertices",
             {dv[i], dv[j]});
        continue;
      }
      Vertex const& v = common.front();
      int ci = h.coloring.color_of(dv[i]);
      if (ci == h.coloring.color_of(dv[j])) {
        auto bp = h.basepoints.find(ci);
        if (bp == h.basepoints.end() || bp->second != v) {
          fail(HaloAxiom::non_edge,
               "same-colored loops of '" + dv[i] + "' and '" + dv[j]
                   + "' meet away from their basepoint",
               {dv[i], dv[j], v});
        }
        continue;
      }
      for (std::size_t k = 0; k < dv.size(); ++k) {
        if (k != i && k != j && members[k].contains(v)) {
          fail(HaloAxiom::non_edge,
               "junction '" + v + "' of '" + dv[i] + "' and '" + dv[j]
                   + "' also lies on the loop of '" + dv[k] + "'",
               {dv[i], dv[j], v, dv[k]});
        }
      }
    }
  }

  if (h.gamma.empty() || !is_connected(h.gamma)) {
    fail(HaloAxiom::connected, "Gamma is not connected", {});
  }
  return report;
}

// Gamma cut uniformly until sufficiently subdivided for n strands, Artin
// loops rerouted through the new vertices. Basepoints are unchanged.
inline Halo subdivided_halo(Halo const& h,
                            std::size_t n,
                            PathThreshold threshold = PathThreshold::paper) {
  if (n != h.strand_count()) {
    throw input_error("strand count " + std::to_string(n)
                      + " differs from the coloring's "
                      + std::to_string(h.strand_count()) + " colors");
  }
  std::size_t k = subdivision_factor(h.gamma, n, threshold);
  if (k == 1) {
    return h;
  }
  Halo out = h;
  out.gamma = subdivide_uniform(h.gamma, k);
  for (auto& [a, loop] : out.artin_loops) {
    std::vector<Vertex> rerouted{loop.front()};
    for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
      auto interior = subdivision_interior(Edge(loop[i], loop[i + 1]), k, loop[i]);
      rerouted.insert(rerouted.end(), interior.begin(), interior.end());
      rerouted.push_back(loop[i + 1]);
    }
    loop = std::move(rerouted);
  }
  return out;
}

}  // namespace halobraid

#endif  // HALOBRAID_HALO_HPP_
