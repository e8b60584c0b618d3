#ifndef HALOBRAID_CONFIG_SPACE_HPP_
#define HALOBRAID_CONFIG_SPACE_HPP_

// The unlabelled discretized configuration space UD^n Gamma: cells are
// unordered n-sets of cells of Gamma whose closures are pairwise disjoint.
// Only 0-cells (n vertices) and 1-cells (one edge plus n - 1 vertices) are
// built; relations are evaluated algebraically after the forgetful map.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "halobraid/errors.hpp"
#include "halobraid/graph.hpp"
#include "halobraid/halo.hpp"
#include "halobraid/subdivision.hpp"

namespace halobraid {

enum class CellKind { vertex, edge };

// A cell of Gamma by index into gamma.vertices() or gamma.edges().
struct GammaCell {
  CellKind kind;
  std::size_t id;

  friend auto operator<=>(GammaCell const&, GammaCell const&) = default;
};

// Closures are disjoint iff the cells share no vertex: distinct vertices, a
// vertex off an edge, or two edges with no common endpoint.
inline bool closure_disjoint(SimpleGraph const& g, GammaCell a, GammaCell b) {
  if (a.kind == CellKind::vertex && b.kind == CellKind::vertex) {
    return a.id != b.id;
  }
  if (a.kind == CellKind::edge && b.kind == CellKind::edge) {
    return !g.edges()[a.id].touches(g.edges()[b.id]);
  }
  if (a.kind == CellKind::edge) {
    std::swap(a, b);
  }
  return !g.edges()[b.id].contains(g.vertex(a.id));
}

// Sorted, so the unordered quotient is the sequence itself.
struct Configuration {
  std::vector<GammaCell> cells;

  friend auto operator<=>(Configuration const&, Configuration const&) = default;
};

struct OneCell {
  Configuration cell;
  // Indices into zero_cells: the edge replaced by its first / second endpoint.
  std::size_t first_end;
  std::size_t second_end;
};

struct CellCounts {
  std::size_t n = 0;
  std::uint64_t zero_cells = 0;
  std::uint64_t one_cells = 0;

  friend bool operator==(CellCounts const&, CellCounts const&) = default;
};

struct DiscreteConfigSpace {
  std::size_t n = 0;
  SimpleGraph gamma;
  std::vector<Configuration> zero_cells;  // lexicographic in vertex indices
  std::vector<OneCell> one_cells;         // by edge, then vertex indices

  CellCounts counts() const {
    return {n, zero_cells.size(), one_cells.size()};
  }
};

namespace detail {

  // Saturating binomial coefficient.
  inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
      return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
      if (r > cap) {
        return cap;
      }
    }
    return static_cast<std::uint64_t>(r);
  }

  inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b
               ? std::numeric_limits<std::uint64_t>::max()
               : a + b;
  }

  // Rank of a sorted k-subset of {0..n-1} among all k-subsets in
  // lexicographic order.
  inline std::size_t lex_rank(std::vector<std::size_t> const& subset,
                              std::size_t n) {
    std::size_t rank = 0;
    std::size_t k = subset.size();
    std::size_t lo = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = lo; j < subset[i]; ++j) {
        rank += binomial(n - 1 - j, k - 1 - i);
      }
      lo = subset[i] + 1;
    }
    return rank;
  }

  // Calls f on every sorted k-subset of `pool`, lexicographically.
  template <typename F>
  void for_each_subset(std::vector<std::size_t> const& pool, std::size_t k, F&& f) {
    if (k > pool.size()) {
      return;
    }
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) {
      pos[i] = i;
    }
    std::vector<std::size_t> chosen(k);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) {
        chosen[i] = pool[pos[i]];
      }
      f(chosen);
      std::size_t i = k;
      while (i > 0 && pos[i - 1] == pool.size() - k + (i - 1)) {
        --i;
      }
      if (i == 0) {
        return;
      }
      ++pos[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        pos[j] = pos[j - 1] + 1;
      }
    }
  }

  inline void require_strands(SimpleGraph const& gamma, std::size_t n) {
    if (n == 0) {
      throw input_error("strand count must be at least 1");
    }
    if (n > gamma.order()) {
      throw input_error("strand count " + std::to_string(n) + " exceeds the "
                        + std::to_string(gamma.order()) + " vertices of Gamma");
    }
  }

}  // namespace detail

// Counts without enumeration: C(|V|, n) vertex cells, and for each edge
// C(|V| - 2, n - 1) placements of the resting tokens.
inline CellCounts udc_cell_counts(SimpleGraph const& gamma, std::size_t n) {
  detail::require_strands(gamma, n);
  CellCounts c;
  c.n = n;
  c.zero_cells = detail::binomial(gamma.order(), n);
  std::uint64_t per_edge = detail::binomial(gamma.order() - 2, n - 1);
  for (std::size_t e = 0; e < gamma.size(); ++e) {
    c.one_cells = detail::saturating_add(c.one_cells, per_edge);
  }
  return c;
}

inline DiscreteConfigSpace build_udc(SimpleGraph const& gamma,
                                     std::size_t n,
                                     std::uint64_t cell_budget = 1'000'000) {
  CellCounts expected = udc_cell_counts(gamma, n);
  if (detail::saturating_add(expected.zero_cells, expected.one_cells) > cell_budget) {
    throw size_exceeded_error("UD^" + std::to_string(n) + " needs more than "
                              + std::to_string(cell_budget) + " cells");
  }
  DiscreteConfigSpace space;
  space.n = n;
  space.gamma = gamma;
  space.zero_cells.reserve(expected.zero_cells);
  space.one_cells.reserve(expected.one_cells);

  std::vector<std::size_t> all(gamma.order());
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i] = i;
  }
  detail::for_each_subset(all, n, [&](std::vector<std::size_t> const& s) {
    Configuration cfg;
    for (std::size_t v : s) {
      cfg.cells.push_back({CellKind::vertex, v});
    }
    space.zero_cells.push_back(std::move(cfg));
  });

  for (std::size_t e = 0; e < gamma.size(); ++e) {
    std::size_t u = gamma.index_of(gamma.edges()[e].first);
    std::size_t w = gamma.index_of(gamma.edges()[e].second);
    std::vector<std::size_t> pool;
    for (std::size_t v = 0; v < gamma.order(); ++v) {
      if (v != u && v != w) {
        pool.push_back(v);
      }
    }
    detail::for_each_subset(pool, n - 1, [&](std::vector<std::size_t> const& rest) {
      OneCell oc;
      for (std::size_t v : rest) {
        oc.cell.cells.push_back({CellKind::vertex, v});
      }
      oc.cell.cells.push_back({CellKind::edge, e});
      std::sort(oc.cell.cells.begin(), oc.cell.cells.end());
      auto end_rank = [&](std::size_t endpoint) {
        std::vector<std::size_t> verts(rest);
        verts.insert(std::upper_bound(verts.begin(), verts.end(), endpoint), endpoint);
        return detail::lex_rank(verts, gamma.order());
      };
      oc.first_end = end_rank(u);
      oc.second_end = end_rank(w);
      space.one_cells.push_back(std::move(oc));
    });
  }
  return space;
}

////////////////////////////////////////////////////////////////////////////////
// Edge paths
////////////////////////////////////////////////////////////////////////////////

// One token crosses `edge` starting at `from`; all other tokens rest.
struct PathStep {
  Edge edge;
  Vertex from;

  Vertex const& to() const noexcept {
    return edge.other(from);
  }

  friend bool operator==(PathStep const&, PathStep const&) = default;
};

struct ConfigEdgePath {
  std::vector<Vertex> base;  // sorted vertex configuration
  std::vector<PathStep> steps;

  std::size_t size() const noexcept {
    return steps.size();
  }

  bool empty() const noexcept {
    return steps.empty();
  }

  friend bool operator==(ConfigEdgePath const&, ConfigEdgePath const&) = default;
};

// Replays the token moves; the configuration reached at the end.
inline std::vector<Vertex> path_end(ConfigEdgePath const& p) {
  std::vector<Vertex> tokens(p.base);
  for (auto const& s : p.steps) {
    auto it = std::find(tokens.begin(), tokens.end(), s.from);
    if (it == tokens.end() || !s.edge.contains(s.from)) {
      throw illegal_step_error("no token at '" + s.from + "' to move along {"
                               + s.edge.first + "," + s.edge.second + "}");
    }
    if (std::find(tokens.begin(), tokens.end(), s.to()) != tokens.end()) {
      throw illegal_step_error("token at '" + s.from + "' would collide at '"
                               + s.to() + "'");
    }
    *it = s.to();
  }
  std::sort(tokens.begin(), tokens.end());
  return tokens;
}

inline bool is_closed(ConfigEdgePath const& p) {
  return path_end(p) == p.base;
}

// Checks every step is a 1-cell of UD^n gamma: the crossed edge exists and
// no resting token touches its closure.
inline void validate_path(SimpleGraph const& gamma, ConfigEdgePath const& p) {
  for (auto const& v : p.base) {
    if (!gamma.contains(v)) {
      throw illegal_step_error("base token '" + v + "' is not a vertex of Gamma");
    }
  }
  for (auto const& s : p.steps) {
    if (!gamma.contains(s.edge)) {
      throw illegal_step_error("{" + s.edge.first + "," + s.edge.second
                               + "} is not an edge of Gamma");
    }
  }
  path_end(p);
}

inline ConfigEdgePath reverse_path(ConfigEdgePath const& p) {
  ConfigEdgePath r;
  r.base = path_end(p);
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
    r.steps.push_back({it->edge, it->to()});
  }
  return r;
}

inline ConfigEdgePath concat_paths(ConfigEdgePath const& p, ConfigEdgePath const& q) {
  if (path_end(p) != q.base) {
    throw base_mismatch_error("second path does not start where the first ends");
  }
  ConfigEdgePath out = p;
  out.steps.insert(out.steps.end(), q.steps.begin(), q.steps.end());
  return out;
}

namespace detail {

  // One traversal of the Artin loop of a by the token at x_{C(a)}, every
  // step checked against the resting tokens.
  inline ConfigEdgePath unit_artin_loop(Halo const& h, Vertex const& a) {
    auto const& loop = h.loop(a);
    ConfigEdgePath p;
    p.base = h.artin_basepoint();
    Vertex const& mover = loop.front();
    for (std::size_t k = 0; k + 1 < loop.size(); ++k) {
      Edge e(loop[k], loop[k + 1]);
      if (!h.gamma.contains(e)) {
        throw illegal_step_error("Artin loop of '" + a + "' uses non-edge {"
                                 + e.first + "," + e.second + "}");
      }
      for (auto const& rest : p.base) {
        if (rest != mover && e.contains(rest)) {
          throw illegal_step_error("Artin loop of '" + a + "' crosses {" + e.first
                                   + "," + e.second + "} next to the token at '"
                                   + rest + "'");
        }
      }
      p.steps.push_back({std::move(e), loop[k]});
    }
    return p;
  }

}  // namespace detail

// The token at x_{C(a)} runs |power| times around the Artin loop of a
// (backwards for negative power) while the other tokens rest at their
// basepoints. power = 0 gives the empty path at the Artin basepoint.
inline ConfigEdgePath artin_loop_path(Halo const& h,
                                      std::size_t n,
                                      Vertex const& a,
                                      long power,
                                      PathThreshold threshold = PathThreshold::paper) {
  if (n != h.basepoints.size()) {
    throw input_error("strand count " + std::to_string(n) + " differs from the "
                      + std::to_string(h.basepoints.size()) + " basepoints");
  }
  if (auto report = is_sufficiently_subdivided(h.gamma, n, threshold); !report) {
    throw insufficient_subdivision_error(
        "Gamma is not sufficiently subdivided for " + std::to_string(n)
        + " strands (" + std::to_string(report.violations.size()) + " violations)");
  }
  ConfigEdgePath unit = detail::unit_artin_loop(h, a);
  if (power < 0) {
    unit = reverse_path(unit);
  }
  ConfigEdgePath out;
  out.base = unit.base;
  for (long k = 0; k < (power < 0 ? -power : power); ++k) {
    out.steps.insert(out.steps.end(), unit.steps.begin(), unit.steps.end());
  }
  return out;
}

}  // namespace halobraid

#endif  // HALOBRAID_CONFIG_SPACE_HPP_
