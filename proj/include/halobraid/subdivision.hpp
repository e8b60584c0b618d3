#ifndef HALOBRAID_SUBDIVISION_HPP_
#define HALOBRAID_SUBDIVISION_HPP_

// Sufficient subdivision for n strands: every path between two distinct
// essential vertices (no essential vertex inside) has at least n - 1 edges,
// and every simple cycle has at least n + 1 edges.
//
// Other statements of the criterion require n + 1 edges on the paths as
// well; PathThreshold::alt selects that reading. Cycles need n + 1 edges
// under both.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "halobraid/errors.hpp"
#include "halobraid/graph.hpp"

namespace halobraid {

enum class PathThreshold { paper, alt };

inline char const* to_string(PathThreshold t) noexcept {
  return t == PathThreshold::paper ? "paper" : "alt";
}

inline std::size_t min_path_edges(std::size_t n, PathThreshold t) noexcept {
  if (t == PathThreshold::alt) {
    return n + 1;
  }
  return n == 0 ? 0 : n - 1;
}

inline std::size_t min_loop_edges(std::size_t n) noexcept {
  return n + 1;
}

struct SubdivisionViolation {
  enum class Kind { path, loop };
  Kind kind;
  // Path: endpoints first and last. Loop: closed, first == last.
  std::vector<Vertex> vertices;
  std::size_t length;
  std::size_t required;
};

struct SubdivisionReport {
  std::size_t strands = 0;
  PathThreshold threshold = PathThreshold::paper;
  std::vector<SubdivisionViolation> violations;

  bool sufficient() const noexcept {
    return violations.empty();
  }
  explicit operator bool() const noexcept {
    return sufficient();
  }
};

namespace detail {

  // Maximal paths whose interior vertices all have degree 2, running between
  // two distinct essential vertices. Each is reported once, starting at the
  // smaller endpoint index.
  inline std::vector<std::vector<std::size_t>> essential_branches(
      SimpleGraph const& g) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < g.order(); ++s) {
      if (g.degree(s) < 3) {
        continue;
      }
      for (std::size_t first : g.neighbors(s)) {
        std::vector<std::size_t> path{s, first};
        std::size_t prev = s;
        std::size_t cur = first;
        while (g.degree(cur) == 2 && cur != s) {
          auto const& nb = g.neighbors(cur);
          std::size_t next = nb[0] == prev ? nb[1] : nb[0];
          prev = cur;
          cur = next;
          path.push_back(cur);
        }
        // Closed branches are cycles and handled there.
        if (cur <= s || g.degree(cur) < 3) {
          continue;
        }
        out.push_back(std::move(path));
      }
    }
    return out;
  }

  // Simple cycles with fewer than `bound` edges, each once.
  inline std::vector<std::vector<std::size_t>> short_cycles(SimpleGraph const& g,
                                                            std::size_t bound) {
    std::vector<std::vector<std::size_t>> out;
    if (bound <= 3) {
      return out;
    }
    std::size_t max_len = bound - 1;
    std::vector<bool> on_path(g.order(), false);
    std::vector<std::size_t> path;
    for (std::size_t s = 0; s < g.order(); ++s) {
      auto dfs = [&](auto&& self, std::size_t u) -> void {
        for (std::size_t w : g.neighbors(u)) {
          if (w == s && path.size() >= 3 && path[1] < path.back()) {
            std::vector<std::size_t> cycle(path);
            cycle.push_back(s);
            out.push_back(std::move(cycle));
            continue;
          }
          if (w <= s || on_path[w] || path.size() >= max_len) {
            continue;
          }
          on_path[w] = true;
          path.push_back(w);
          self(self, w);
          path.pop_back();
          on_path[w] = false;
        }
      };
      path.assign(1, s);
      on_path[s] = true;
      dfs(dfs, s);
      on_path[s] = false;
    }
    return out;
  }

  inline std::vector<Vertex> names(SimpleGraph const& g,
                                   std::vector<std::size_t> const& idx) {
    std::vector<Vertex> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) {
      out.push_back(g.vertex(i));
    }
    return out;
  }

}  // namespace detail

inline SubdivisionReport is_sufficiently_subdivided(
    SimpleGraph const& g,
    std::size_t n,
    PathThreshold threshold = PathThreshold::paper) {
  if (n == 0) {
    throw input_error("strand count must be at least 1");
  }
  SubdivisionReport report;
  report.strands = n;
  report.threshold = threshold;
  std::size_t const path_req = min_path_edges(n, threshold);
  for (auto const& branch : detail::essential_branches(g)) {
    std::size_t len = branch.size() - 1;
    if (len < path_req) {
      report.violations.push_back({SubdivisionViolation::Kind::path,
                                   detail::names(g, branch),
                                   len,
                                   path_req});
    }
  }
  std::size_t const loop_req = min_loop_edges(n);
  for (auto const& cycle : detail::short_cycles(g, loop_req)) {
    report.violations.push_back({SubdivisionViolation::Kind::loop,
                                 detail::names(g, cycle),
                                 cycle.size() - 1,
                                 loop_req});
  }
  return report;
}

// Interior vertices that replace edge e when it is cut into k pieces, listed
// from `from` towards the other endpoint.
inline std::vector<Vertex> subdivision_interior(Edge const& e,
                                                std::size_t k,
                                                Vertex const& from) {
  std::vector<Vertex> out;
  for (std::size_t i = 1; i < k; ++i) {
    out.push_back(e.first + "~" + e.second + "~" + std::to_string(i));
  }
  if (from == e.second) {
    std::reverse(out.begin(), out.end());
  }
  return out;
}

// Replaces every edge with a path of k edges. k = 1 is the identity.
inline SimpleGraph subdivide_uniform(SimpleGraph const& g, std::size_t k) {
  if (k == 0) {
    throw input_error("subdivision factor must be at least 1");
  }
  if (k == 1) {
    return g;
  }
  std::vector<Vertex> vertices(g.vertices());
  std::vector<Edge> edges;
  for (auto const& e : g.edges()) {
    auto interior = subdivision_interior(e, k, e.first);
    Vertex prev = e.first;
    for (auto& v : interior) {
      edges.emplace_back(prev, v);
      prev = v;
      vertices.push_back(std::move(v));
    }
    edges.emplace_back(prev, e.second);
  }
  return SimpleGraph(std::move(vertices), std::move(edges));
}

// Smallest uniform factor whose subdivision passes the checker.
inline std::size_t subdivision_factor(SimpleGraph const& g,
                                      std::size_t n,
                                      PathThreshold threshold = PathThreshold::paper) {
  for (std::size_t k = 1;; ++k) {
    if (is_sufficiently_subdivided(subdivide_uniform(g, k), n, threshold)) {
      return k;
    }
  }
}

inline SimpleGraph subdivide_for(SimpleGraph const& g,
                                 std::size_t n,
                                 PathThreshold threshold = PathThreshold::paper) {
  return subdivide_uniform(g, subdivision_factor(g, n, threshold));
}

}  // namespace halobraid

#endif  // HALOBRAID_SUBDIVISION_HPP_
