#ifndef HALOBRAID_GRAPH_HPP_
#define HALOBRAID_GRAPH_HPP_

// Finite simple graphs and the graph operations the rest of the library
// consumes: links, vertex deletion, opposite graphs, components, colorings.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "halobraid/errors.hpp"

namespace halobraid {

using Vertex = std::string;

// Unordered vertex pair stored with the lexicographically smaller endpoint
// first. The stored order doubles as the edge orientation (tail = first).
struct Edge {
  Vertex first;
  Vertex second;

  Edge() = default;
  Edge(Vertex u, Vertex v) : first(std::move(u)), second(std::move(v)) {
    if (second < first) {
      std::swap(first, second);
    }
  }

  bool contains(Vertex const& v) const noexcept {
    return first == v || second == v;
  }

  bool touches(Edge const& other) const noexcept {
    return contains(other.first) || contains(other.second);
  }

  Vertex const& other(Vertex const& v) const noexcept {
    return v == first ? second : first;
  }

  friend auto operator<=>(Edge const&, Edge const&) = default;
};

class SimpleGraph {
 public:
  SimpleGraph() = default;

  SimpleGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i].empty()) {
        throw input_error("vertex identifiers must be nonempty");
      }
      if (i > 0 && vertices_[i] == vertices_[i - 1]) {
        throw input_error("duplicate vertex '" + vertices_[i] + "'");
      }
    }
    std::sort(edges_.begin(), edges_.end());
    adjacency_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      Edge const& e = edges_[i];
      if (e.first == e.second) {
        throw input_error("self-loop at '" + e.first + "'");
      }
      if (i > 0 && e == edges_[i - 1]) {
        throw input_error("multi-edge {" + e.first + "," + e.second + "}");
      }
      std::size_t u = index_of(e.first);
      std::size_t v = index_of(e.second);
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
    }
  }

  std::size_t order() const noexcept {
    return vertices_.size();
  }

  std::size_t size() const noexcept {
    return edges_.size();
  }

  bool empty() const noexcept {
    return vertices_.empty();
  }

  std::vector<Vertex> const& vertices() const noexcept {
    return vertices_;
  }

  std::vector<Edge> const& edges() const noexcept {
    return edges_;
  }

  Vertex const& vertex(std::size_t i) const {
    return vertices_.at(i);
  }

  bool contains(Vertex const& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool contains(Edge const& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  std::size_t index_of(Vertex const& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
      throw unknown_vertex_error(v);
    }
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  std::size_t edge_index(Edge const& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) {
      throw input_error("no edge {" + e.first + "," + e.second + "}");
    }
    return static_cast<std::size_t>(it - edges_.begin());
  }

  // Neighbor indices, ascending.
  std::vector<std::size_t> const& neighbors(std::size_t i) const {
    return adjacency_.at(i);
  }

  std::size_t degree(std::size_t i) const {
    return adjacency_.at(i).size();
  }

  std::size_t degree(Vertex const& v) const {
    return degree(index_of(v));
  }

  bool adjacent(std::size_t i, std::size_t j) const {
    auto const& nbrs = adjacency_.at(i);
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
  }

  bool adjacent(Vertex const& u, Vertex const& v) const {
    return adjacent(index_of(u), index_of(v));
  }

  friend bool operator==(SimpleGraph const& a, SimpleGraph const& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Neighbors of v, v excluded.
inline std::vector<Vertex> link(SimpleGraph const& g, Vertex const& v) {
  std::vector<Vertex> out;
  for (std::size_t j : g.neighbors(g.index_of(v))) {
    out.push_back(g.vertex(j));
  }
  return out;
}

inline SimpleGraph induced_subgraph(SimpleGraph const& g,
                                    std::vector<Vertex> const& keep) {
  for (auto const& v : keep) {
    g.index_of(v);
  }
  std::vector<Vertex> sorted(keep);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Edge> edges;
  for (auto const& e : g.edges()) {
    if (std::binary_search(sorted.begin(), sorted.end(), e.first)
        && std::binary_search(sorted.begin(), sorted.end(), e.second)) {
      edges.push_back(e);
    }
  }
  return SimpleGraph(std::move(sorted), std::move(edges));
}

inline SimpleGraph delete_vertex(SimpleGraph const& g, Vertex const& v) {
  g.index_of(v);
  std::vector<Vertex> keep;
  for (auto const& u : g.vertices()) {
    if (u != v) {
      keep.push_back(u);
    }
  }
  return induced_subgraph(g, keep);
}

// Complement on the same vertex set.
inline SimpleGraph opposite_graph(SimpleGraph const& g) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i + 1; j < g.order(); ++j) {
      if (!g.adjacent(i, j)) {
        edges.emplace_back(g.vertex(i), g.vertex(j));
      }
    }
  }
  return SimpleGraph(g.vertices(), std::move(edges));
}

// Vertices of valence at least 3.
inline std::vector<Vertex> essential_vertices(SimpleGraph const& g) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.degree(i) >= 3) {
      out.push_back(g.vertex(i));
    }
  }
  return out;
}

// Components as ascending index lists, ordered by smallest member.
inline std::vector<std::vector<std::size_t>> connected_components(
    SimpleGraph const& g) {
  std::vector<std::vector<std::size_t>> components;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) {
      continue;
    }
    std::vector<std::size_t> comp;
    std::queue<std::size_t> frontier;
    frontier.push(s);
    seen[s] = true;
    while (!frontier.empty()) {
      std::size_t u = frontier.front();
      frontier.pop();
      comp.push_back(u);
      for (std::size_t w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

inline bool is_connected(SimpleGraph const& g) {
  return connected_components(g).size() <= 1;
}

// |E| - |V| + #components: the number of independent cycles.
inline std::size_t cycle_rank(SimpleGraph const& g) {
  return g.size() + connected_components(g).size() - g.order();
}

////////////////////////////////////////////////////////////////////////////////
// Colorings
////////////////////////////////////////////////////////////////////////////////

struct Coloring {
  std::map<Vertex, int> assignment;
  int color_count = 0;

  int color_of(Vertex const& v) const {
    auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw unknown_vertex_error(v);
    }
    return it->second;
  }

  // Vertices with color c, in vertex order.
  std::vector<Vertex> color_class(int c) const {
    std::vector<Vertex> out;
    for (auto const& [v, col] : assignment) {
      if (col == c) {
        out.push_back(v);
      }
    }
    return out;
  }

  friend bool operator==(Coloring const&, Coloring const&) = default;
};

// Describes the first defect that stops c from being a proper, surjective
// coloring of g onto {1..color_count}, or nullopt if there is none.
inline std::optional<std::string> coloring_defect(SimpleGraph const& g,
                                                  Coloring const& c) {
  if (c.assignment.size() != g.order()) {
    return "coloring assigns " + std::to_string(c.assignment.size())
           + " vertices but the graph has " + std::to_string(g.order());
  }
  std::vector<bool> used(static_cast<std::size_t>(std::max(c.color_count, 0)) + 1,
                         false);
  for (auto const& [v, col] : c.assignment) {
    if (!g.contains(v)) {
      return "coloring names unknown vertex '" + v + "'";
    }
    if (col < 1 || col > c.color_count) {
      return "vertex '" + v + "' has color " + std::to_string(col)
             + " outside 1.." + std::to_string(c.color_count);
    }
    used[static_cast<std::size_t>(col)] = true;
  }
  for (int col = 1; col <= c.color_count; ++col) {
    if (!used[static_cast<std::size_t>(col)]) {
      return "color " + std::to_string(col) + " is unused";
    }
  }
  for (auto const& e : g.edges()) {
    if (c.color_of(e.first) == c.color_of(e.second)) {
      return "adjacent vertices '" + e.first + "' and '" + e.second
             + "' share color " + std::to_string(c.color_of(e.first));
    }
  }
  return std::nullopt;
}

inline void require_proper_coloring(SimpleGraph const& g, Coloring const& c) {
  if (auto defect = coloring_defect(g, c)) {
    throw improper_coloring_error(*defect);
  }
}

// First-fit in vertex order, smallest free color.
inline Coloring greedy_color(SimpleGraph const& g) {
  Coloring out;
  std::vector<int> color(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i) {
    std::vector<bool> taken(g.order() + 2, false);
    for (std::size_t j : g.neighbors(i)) {
      if (color[j] != 0) {
        taken[static_cast<std::size_t>(color[j])] = true;
      }
    }
    int c = 1;
    while (taken[static_cast<std::size_t>(c)]) {
      ++c;
    }
    color[i] = c;
    out.color_count = std::max(out.color_count, c);
    out.assignment.emplace(g.vertex(i), c);
  }
  return out;
}

namespace detail {

  inline std::size_t max_clique_size(SimpleGraph const& g) {
    // Graphs here have at most a few dozen vertices; plain branch and bound.
    std::size_t best = 0;
    std::vector<std::size_t> current;
    auto grow = [&](auto&& self, std::vector<std::size_t> candidates) -> void {
      if (candidates.empty()) {
        best = std::max(best, current.size());
        return;
      }
      if (current.size() + candidates.size() <= best) {
        return;
      }
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        std::size_t v = candidates[k];
        std::vector<std::size_t> next;
        for (std::size_t m = k + 1; m < candidates.size(); ++m) {
          if (g.adjacent(v, candidates[m])) {
            next.push_back(candidates[m]);
          }
        }
        current.push_back(v);
        self(self, std::move(next));
        current.pop_back();
        if (current.size() + (candidates.size() - k - 1) <= best) {
          return;
        }
      }
    };
    std::vector<std::size_t> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) {
      all[i] = i;
    }
    grow(grow, std::move(all));
    return best;
  }

  // Backtracking k-coloring over `order`; colors beyond max-used + 1 are
  // symmetric and skipped.
  inline bool try_k_coloring(SimpleGraph const& g,
                             std::vector<std::size_t> const& order,
                             int k,
                             std::vector<int>& color) {
    color.assign(g.order(), 0);
    auto place = [&](auto&& self, std::size_t pos, int max_used) -> bool {
      if (pos == order.size()) {
        return true;
      }
      std::size_t v = order[pos];
      int limit = std::min(k, max_used + 1);
      for (int c = 1; c <= limit; ++c) {
        bool clash = false;
        for (std::size_t w : g.neighbors(v)) {
          if (color[w] == c) {
            clash = true;
            break;
          }
        }
        if (clash) {
          continue;
        }
        color[v] = c;
        if (self(self, pos + 1, std::max(max_used, c))) {
          return true;
        }
        color[v] = 0;
      }
      return false;
    };
    return place(place, 0, 0);
  }

}  // namespace detail

// Minimum coloring by exhaustive search: vertices by descending degree
// (ties in vertex order), colors by index, starting from the clique bound.
inline Coloring chromatic_number(SimpleGraph const& g,
                                 std::size_t max_vertices = 16) {
  if (g.order() > max_vertices) {
    throw size_exceeded_error("exact coloring limited to "
                              + std::to_string(max_vertices) + " vertices, got "
                              + std::to_string(g.order()));
  }
  Coloring out;
  if (g.empty()) {
    return out;
  }
  std::vector<std::size_t> order(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.degree(a) > g.degree(b);
  });
  int k = static_cast<int>(std::max<std::size_t>(detail::max_clique_size(g), 1));
  std::vector<int> color;
  while (!detail::try_k_coloring(g, order, k, color)) {
    ++k;
  }
  out.color_count = k;
  for (std::size_t i = 0; i < g.order(); ++i) {
    out.assignment.emplace(g.vertex(i), color[i]);
  }
  return out;
}

// Every vertex its own color, in vertex order.
inline Coloring distinct_coloring(SimpleGraph const& g) {
  Coloring out;
  for (auto const& v : g.vertices()) {
    out.assignment.emplace(v, ++out.color_count);
  }
  return out;
}

}  // namespace halobraid

#endif  // HALOBRAID_GRAPH_HPP_
