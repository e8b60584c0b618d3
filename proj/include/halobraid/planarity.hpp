#ifndef HALOBRAID_PLANARITY_HPP_
#define HALOBRAID_PLANARITY_HPP_

#include <cstddef>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "halobraid/errors.hpp"
#include "halobraid/graph.hpp"

namespace halobraid {

// Planarity of the abstract graph; no embedding is produced. Graphs that
// break Euler's bound |E| <= 3|V| - 6 are rejected before the full
// Boyer-Myrvold test runs.
inline bool is_planar(SimpleGraph const& g, std::size_t max_vertices = 64) {
  if (g.order() > max_vertices) {
    throw size_exceeded_error("planarity test limited to "
                              + std::to_string(max_vertices) + " vertices, got "
                              + std::to_string(g.order()));
  }
  if (g.order() >= 3 && g.size() > 3 * g.order() - 6) {
    return false;
  }
  using BoostGraph = boost::adjacency_list<boost::vecS,
                                           boost::vecS,
                                           boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(g.order());
  for (auto const& e : g.edges()) {
    boost::add_edge(g.index_of(e.first), g.index_of(e.second), bg);
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace halobraid

#endif  // HALOBRAID_PLANARITY_HPP_
