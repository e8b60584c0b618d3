#ifndef HALOBRAID_TESTS_FIXTURES_HPP_
#define HALOBRAID_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "halobraid/graph.hpp"
#include "halobraid/halo.hpp"

namespace fixture {

using namespace halobraid;

inline SimpleGraph figure_delta() {
  return SimpleGraph({"a", "b", "c"}, {{"a", "c"}});
}

inline Coloring figure_coloring() {
  return Coloring{{{"a", 1}, {"b", 2}, {"c", 3}}, 3};
}

// Three squares in a chain, consecutive squares sharing a corner:
//
//   x1 - p1        x2         x3 - p3
//   |     |       /  \         |    |
//   q1 - s1 ---- (    ) ---- s2 - q3
//                 \  /
//                  y
//
// Square a: x1 p1 s1 q1, square b: x2 s1 y s2, square c: x3 p3 s2 q3.
inline Halo figure_three_squares() {
  Halo h;
  h.delta = figure_delta();
  h.coloring = figure_coloring();
  h.gamma = SimpleGraph({"x1", "p1", "s1", "q1", "x2", "y", "s2", "x3", "p3", "q3"},
                        {{"x1", "p1"}, {"p1", "s1"}, {"s1", "q1"}, {"q1", "x1"},
                         {"x2", "s1"}, {"s1", "y"}, {"y", "s2"}, {"s2", "x2"},
                         {"x3", "p3"}, {"p3", "s2"}, {"s2", "q3"}, {"q3", "x3"}});
  h.artin_loops = {{"a", {"x1", "p1", "s1", "q1", "x1"}},
                   {"b", {"x2", "s1", "y", "s2", "x2"}},
                   {"c", {"x3", "p3", "s2", "q3", "x3"}}};
  h.basepoints = {{1, "x1"}, {2, "x2"}, {3, "x3"}};
  return h;
}

inline SimpleGraph without_edge(SimpleGraph const& g, Edge const& drop) {
  std::vector<Edge> es;
  for (auto const& e : g.edges()) {
    if (e != drop) {
      es.push_back(e);
    }
  }
  return SimpleGraph(g.vertices(), es);
}

// Removes the first edge of a's loop from Gamma.
inline Halo delete_loop_edge(Halo h, Vertex const& a) {
  auto const& loop = h.loop(a);
  h.gamma = without_edge(h.gamma, Edge(loop[0], loop[1]));
  return h;
}

// Identifies an interior vertex of a's loop with one of b's loop (a and b
// adjacent in Delta), so the two loops meet. Interior vertices of distinct
// loops of adjacent vertices have disjoint neighborhoods, so the result is
// still simple.
inline Halo force_intersection(Halo h, Vertex const& a, Vertex const& b) {
  Vertex keep = h.loop(a)[1];
  Vertex gone = h.loop(b)[1];
  auto rename = [&](Vertex const& v) { return v == gone ? keep : v; };
  std::vector<Vertex> vs;
  for (auto const& v : h.gamma.vertices()) {
    if (v != gone) {
      vs.push_back(v);
    }
  }
  std::vector<Edge> es;
  for (auto const& e : h.gamma.edges()) {
    Edge r(rename(e.first), rename(e.second));
    if (std::find(es.begin(), es.end(), r) == es.end()) {
      es.push_back(r);
    }
  }
  h.gamma = SimpleGraph(vs, es);
  for (auto& [v, loop] : h.artin_loops) {
    std::transform(loop.begin(), loop.end(), loop.begin(), rename);
  }
  for (auto& [c, x] : h.basepoints) {
    x = rename(x);
  }
  return h;
}

// Moves x_c to the second vertex of some loop of color c.
inline Halo move_basepoint(Halo h, int c) {
  for (auto const& a : h.coloring.color_class(c)) {
    h.basepoints[c] = h.loop(a)[1];
    break;
  }
  return h;
}

// First edge of delta, if any.
inline std::optional<Edge> some_edge(SimpleGraph const& delta) {
  if (delta.edges().empty()) {
    return std::nullopt;
  }
  return delta.edges().front();
}

}  // namespace fixture

#endif  // HALOBRAID_TESTS_FIXTURES_HPP_
