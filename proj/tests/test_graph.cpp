#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "halobraid/errors.hpp"
#include "halobraid/graph.hpp"
#include "halobraid/halo.hpp"
#include "halobraid/planarity.hpp"
#include "oracles.hpp"

using namespace halobraid;

namespace {

SimpleGraph petersen() {
  std::vector<Vertex> vs;
  for (int i = 0; i < 10; ++i) {
    vs.push_back(std::to_string(i));
  }
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(vs[i], vs[(i + 1) % 5]);
    es.emplace_back(vs[i], vs[i + 5]);
    es.emplace_back(vs[5 + i], vs[5 + (i + 2) % 5]);
  }
  return SimpleGraph(vs, es);
}

SimpleGraph star(std::size_t leaves) {
  std::vector<Vertex> vs{"center"};
  std::vector<Edge> es;
  for (std::size_t i = 0; i < leaves; ++i) {
    vs.push_back("leaf" + std::to_string(i));
    es.emplace_back("center", vs.back());
  }
  return SimpleGraph(vs, es);
}

SimpleGraph k33() {
  std::vector<Edge> es;
  for (auto u : {"u1", "u2", "u3"}) {
    for (auto w : {"w1", "w2", "w3"}) {
      es.emplace_back(u, w);
    }
  }
  return SimpleGraph({"u1", "u2", "u3", "w1", "w2", "w3"}, es);
}

// Is there a proper coloring with k colors? Plain backtracking in vertex
// order, no pruning beyond adjacency.
bool k_colorable(SimpleGraph const& g, int k) {
  std::vector<int> color(g.order(), 0);
  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == g.order()) {
      return true;
    }
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (std::size_t j : g.neighbors(i)) {
        if (j < i && color[j] == c) {
          ok = false;
        }
      }
      if (ok) {
        color[i] = c;
        if (self(self, i + 1)) {
          return true;
        }
      }
    }
    color[i] = 0;
    return false;
  };
  return place(place, 0);
}

bool isomorphic(SimpleGraph const& a, SimpleGraph const& b) {
  if (a.order() != b.order() || a.size() != b.size()) {
    return false;
  }
  std::vector<std::size_t> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto const& e : a.edges()) {
      if (!b.adjacent(perm[a.index_of(e.first)], perm[a.index_of(e.second)])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST(SimpleGraph, NormalizesEdgesAndSortsVertices) {
  SimpleGraph g({"c", "a", "b"}, {{"c", "a"}, {"b", "a"}});
  EXPECT_EQ(g.vertices(), (std::vector<Vertex>{"a", "b", "c"}));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edges()[0], Edge("a", "b"));
  EXPECT_EQ(g.edges()[1].first, "a");
  EXPECT_EQ(g.edges()[1].second, "c");
}

TEST(SimpleGraph, RejectsMalformedInput) {
  EXPECT_THROW(SimpleGraph({"a", "a"}, {}), input_error);
  EXPECT_THROW(SimpleGraph({""}, {}), input_error);
  EXPECT_THROW(SimpleGraph({"a"}, {{"a", "a"}}), input_error);
  EXPECT_THROW(SimpleGraph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), input_error);
  EXPECT_THROW(SimpleGraph({"a"}, {{"a", "z"}}), unknown_vertex_error);
}

TEST(Coloring, GreedyAndExactOnSmallGraphs) {
  auto c6 = oracle::cycle_graph(6);
  EXPECT_EQ(chromatic_number(c6).color_count, 2);
  EXPECT_EQ(chromatic_number(oracle::complete_graph(3)).color_count, 3);
  EXPECT_EQ(greedy_color(oracle::complete_graph(4)).color_count, 4);
  EXPECT_EQ(chromatic_number(oracle::cycle_graph(5)).color_count, 3);
  EXPECT_EQ(chromatic_number(SimpleGraph({"x"}, {})).color_count, 1);
}

TEST(Coloring, PetersenNeedsThreeColors) {
  auto p = petersen();
  EXPECT_FALSE(k_colorable(p, 2));
  EXPECT_TRUE(k_colorable(p, 3));
  Coloring c = chromatic_number(p);
  EXPECT_EQ(c.color_count, 3);
  EXPECT_FALSE(coloring_defect(p, c).has_value());
}

TEST(Coloring, ExactMatchesBruteForceAndNeverBeatsGreedy) {
  for (auto const& g : oracle::graphs_up_to(6, false)) {
    Coloring exact = chromatic_number(g);
    Coloring greedy = greedy_color(g);
    int k = 1;
    while (!k_colorable(g, k)) {
      ++k;
    }
    EXPECT_EQ(exact.color_count, k);
    EXPECT_LE(exact.color_count, greedy.color_count);
    EXPECT_FALSE(coloring_defect(g, exact).has_value());
    EXPECT_FALSE(coloring_defect(g, greedy).has_value());
  }
}

TEST(Coloring, DefectsAreReported) {
  auto g = oracle::path_graph(3);
  Coloring same{{{"1", 1}, {"2", 1}, {"3", 2}}, 2};
  EXPECT_TRUE(coloring_defect(g, same).has_value());
  EXPECT_THROW(require_proper_coloring(g, same), improper_coloring_error);

  Coloring gap{{{"1", 1}, {"2", 3}, {"3", 1}}, 3};
  EXPECT_TRUE(coloring_defect(g, gap).has_value());

  Coloring partial{{{"1", 1}, {"2", 2}}, 2};
  EXPECT_TRUE(coloring_defect(g, partial).has_value());
}

TEST(Coloring, ExactSolverHasASizeBound) {
  std::vector<Vertex> vs;
  for (int i = 0; i < 20; ++i) {
    vs.push_back("v" + std::to_string(i));
  }
  EXPECT_THROW(chromatic_number(SimpleGraph(vs, {})), size_exceeded_error);
}

TEST(OppositeGraph, Examples) {
  EXPECT_EQ(opposite_graph(oracle::complete_graph(3)).size(), 0u);
  SimpleGraph two({"a", "b"}, {});
  EXPECT_EQ(opposite_graph(two), SimpleGraph({"a", "b"}, {{"a", "b"}}));
  auto c5 = oracle::cycle_graph(5);
  auto co = opposite_graph(c5);
  EXPECT_NE(co, c5);
  EXPECT_TRUE(isomorphic(co, c5));
}

TEST(OppositeGraph, IsAnInvolution) {
  for (auto const& g : oracle::graphs_up_to(5, false)) {
    EXPECT_EQ(opposite_graph(opposite_graph(g)), g);
  }
}

TEST(Link, Examples) {
  auto s = star(3);
  EXPECT_EQ(link(s, "center"), (std::vector<Vertex>{"leaf0", "leaf1", "leaf2"}));
  EXPECT_TRUE(link(SimpleGraph({"x", "y"}, {}), "x").empty());
  SimpleGraph fig({"a", "b", "c"}, {{"a", "c"}});
  EXPECT_EQ(link(fig, "a"), std::vector<Vertex>{"c"});
  EXPECT_THROW(link(fig, "z"), unknown_vertex_error);
}

TEST(DeleteVertex, Examples) {
  EXPECT_EQ(delete_vertex(oracle::complete_graph(2), "a"), SimpleGraph({"b"}, {}));
  EXPECT_EQ(delete_vertex(oracle::cycle_graph(4), "4"), oracle::path_graph(3));
  EXPECT_EQ(delete_vertex(oracle::cycle_graph(6), "6"), oracle::path_graph(5));
  EXPECT_THROW(delete_vertex(oracle::cycle_graph(4), "9"), unknown_vertex_error);
}

TEST(InducedSubgraph, KeepsOnlyInternalEdges) {
  auto g = induced_subgraph(oracle::cycle_graph(5), {"1", "2", "4"});
  EXPECT_EQ(g, SimpleGraph({"1", "2", "4"}, {{"1", "2"}}));
}

TEST(EssentialVertices, Examples) {
  EXPECT_TRUE(essential_vertices(oracle::cycle_graph(7)).empty());
  EXPECT_EQ(essential_vertices(star(3)), std::vector<Vertex>{"center"});
  EXPECT_TRUE(essential_vertices(star(2)).empty());

  SimpleGraph fig({"a", "b", "c"}, {{"a", "c"}});
  Coloring three{{{"a", 1}, {"b", 2}, {"c", 3}}, 3};
  Halo h = build_halo(fig, three);
  EXPECT_EQ(essential_vertices(h.gamma), (std::vector<Vertex>{"v_a_b", "v_b_c"}));
}

TEST(Components, CountAndCycleRank) {
  SimpleGraph g({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"d", "e"}});
  EXPECT_EQ(connected_components(g).size(), 2u);
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(cycle_rank(g), 1u);
  EXPECT_EQ(cycle_rank(oracle::complete_graph(4)), 3u);
}

TEST(Planarity, KuratowskiGraphsAreNotPlanar) {
  EXPECT_FALSE(is_planar(oracle::complete_graph(5)));
  EXPECT_FALSE(is_planar(k33()));
  EXPECT_TRUE(is_planar(oracle::complete_graph(4)));
  EXPECT_FALSE(is_planar(petersen()));
}

TEST(Planarity, SmallGraphsAreAllPlanar) {
  for (auto const& g : oracle::graphs_up_to(4, false)) {
    EXPECT_TRUE(is_planar(g));
  }
}

TEST(Planarity, C6HaloIsPlanar) {
  auto c6 = oracle::cycle_graph(6);
  Halo h = build_halo(c6, chromatic_number(c6));
  EXPECT_TRUE(is_planar(h.gamma));
}

TEST(Planarity, EnforcesTheVertexBound) {
  auto c = oracle::cycle_graph(70);
  EXPECT_THROW(is_planar(c), size_exceeded_error);
  EXPECT_TRUE(is_planar(c, 100));
}
