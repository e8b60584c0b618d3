#ifndef HALOBRAID_IO_HPP_
#define HALOBRAID_IO_HPP_

// JSON and DOT serialization.
//
//   graph:    {"vertices": [...], "edges": [[u, v], ...]}, sorted, u < v
//   coloring: {"colors": n, "assignment": {"v": c, ...}}
//   halo:     graph of Gamma plus "loops", "basepoints", "delta", "coloring"
//   path:     {"base": [...], "steps": [{"edge": [u, v], "from": u}, ...]}

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "halobraid/config_space.hpp"
#include "halobraid/embedding.hpp"
#include "halobraid/errors.hpp"
#include "halobraid/graph.hpp"
#include "halobraid/halo.hpp"
#include "halobraid/raag.hpp"
#include "halobraid/subdivision.hpp"

namespace halobraid {

using json = nlohmann::ordered_json;

namespace detail {

  template <typename F>
  auto guarded_parse(char const* what, F&& f) {
    try {
      return f();
    } catch (nlohmann::json::exception const& e) {
      throw parse_error(std::string("malformed ") + what + ": " + e.what());
    }
  }

}  // namespace detail

inline json to_json(SimpleGraph const& g) {
  json j;
  j["vertices"] = g.vertices();
  j["edges"] = json::array();
  for (auto const& e : g.edges()) {
    j["edges"].push_back({e.first, e.second});
  }
  return j;
}

inline SimpleGraph graph_from_json(json const& j) {
  return detail::guarded_parse("graph", [&] {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
      throw parse_error("graph JSON needs \"vertices\" and \"edges\"");
    }
    auto vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    for (auto const& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw parse_error("edges must be 2-element arrays");
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return SimpleGraph(std::move(vertices), std::move(edges));
  });
}

inline json to_json(Coloring const& c) {
  json j;
  j["colors"] = c.color_count;
  j["assignment"] = json::object();
  for (auto const& [v, col] : c.assignment) {
    j["assignment"][v] = col;
  }
  return j;
}

inline Coloring coloring_from_json(json const& j) {
  return detail::guarded_parse("coloring", [&] {
    if (!j.is_object() || !j.contains("assignment")) {
      throw parse_error("coloring JSON needs \"assignment\"");
    }
    Coloring c;
    for (auto const& [v, col] : j.at("assignment").items()) {
      c.assignment.emplace(v, col.get<int>());
      c.color_count = std::max(c.color_count, col.get<int>());
    }
    if (j.contains("colors")) {
      c.color_count = j.at("colors").get<int>();
    }
    return c;
  });
}

inline json to_json(Halo const& h) {
  json j = to_json(h.gamma);
  j["loops"] = json::object();
  for (auto const& [a, loop] : h.artin_loops) {
    j["loops"][a] = loop;
  }
  j["basepoints"] = json::object();
  for (auto const& [c, x] : h.basepoints) {
    j["basepoints"][std::to_string(c)] = x;
  }
  j["delta"] = to_json(h.delta);
  j["coloring"] = to_json(h.coloring);
  return j;
}

inline bool looks_like_halo(json const& j) {
  return j.is_object() && j.contains("loops");
}

inline Halo halo_from_json(json const& j) {
  return detail::guarded_parse("halo", [&] {
    for (char const* key : {"loops", "basepoints", "delta", "coloring"}) {
      if (!j.contains(key)) {
        throw parse_error(std::string("halo JSON needs \"") + key + "\"");
      }
    }
    Halo h;
    h.gamma = graph_from_json(j);
    h.delta = graph_from_json(j.at("delta"));
    h.coloring = coloring_from_json(j.at("coloring"));
    for (auto const& [a, loop] : j.at("loops").items()) {
      h.artin_loops.emplace(a, loop.get<std::vector<std::string>>());
    }
    for (auto const& [c, x] : j.at("basepoints").items()) {
      int color = 0;
      try {
        color = std::stoi(c);
      } catch (std::exception const&) {
        throw parse_error("basepoint key '" + c + "' is not a color index");
      }
      h.basepoints.emplace(color, x.get<std::string>());
    }
    return h;
  });
}

inline json to_json(CellCounts const& c) {
  return json{{"n", c.n}, {"zero_cells", c.zero_cells}, {"one_cells", c.one_cells}};
}

inline json to_json(ConfigEdgePath const& p) {
  json j;
  j["base"] = p.base;
  j["steps"] = json::array();
  for (auto const& s : p.steps) {
    j["steps"].push_back({{"edge", {s.edge.first, s.edge.second}}, {"from", s.from}});
  }
  return j;
}

inline ConfigEdgePath path_from_json(json const& j) {
  return detail::guarded_parse("path", [&] {
    ConfigEdgePath p;
    p.base = j.at("base").get<std::vector<std::string>>();
    std::sort(p.base.begin(), p.base.end());
    for (auto const& s : j.at("steps")) {
      auto ends = s.at("edge").get<std::vector<std::string>>();
      if (ends.size() != 2) {
        throw parse_error("path step edge must have 2 endpoints");
      }
      p.steps.push_back({Edge(ends[0], ends[1]), s.at("from").get<std::string>()});
    }
    return p;
  });
}

inline json to_json(SubdivisionReport const& r) {
  json j;
  j["strands"] = r.strands;
  j["path_threshold"] = to_string(r.threshold);
  j["min_path_edges"] = min_path_edges(r.strands, r.threshold);
  j["min_loop_edges"] = min_loop_edges(r.strands);
  j["sufficient"] = r.sufficient();
  j["violations"] = json::array();
  for (auto const& v : r.violations) {
    j["violations"].push_back(
        {{"kind", v.kind == SubdivisionViolation::Kind::path ? "path" : "loop"},
         {"vertices", v.vertices},
         {"length", v.length},
         {"required", v.required}});
  }
  return j;
}

inline json to_json(HaloReport const& r) {
  json j;
  j["pass"] = r.passed();
  j["violations"] = json::array();
  for (auto const& v : r.violations) {
    j["violations"].push_back(
        {{"axiom", to_string(v.axiom)}, {"message", v.message}, {"witnesses", v.witnesses}});
  }
  return j;
}

////////////////////////////////////////////////////////////////////////////////
// DOT
////////////////////////////////////////////////////////////////////////////////

namespace detail {

  inline std::string dot_id(std::string const& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') {
        out += '\\';
      }
      out += ch;
    }
    return out + "\"";
  }

  // Cycles through the 9 colors of the set19 Brewer scheme.
  inline std::string palette(std::size_t k) {
    return "\"/set19/" + std::to_string(k % 9 + 1) + "\"";
  }

}  // namespace detail

inline std::string to_dot(SimpleGraph const& g, std::optional<Coloring> const& coloring = {}) {
  std::ostringstream out;
  out << "graph G {\n";
  for (auto const& v : g.vertices()) {
    out << "  " << detail::dot_id(v);
    if (coloring) {
      int c = coloring->color_of(v);
      out << " [color=" << detail::palette(static_cast<std::size_t>(c - 1))
          << ", style=filled, xlabel=\"" << c << "\"]";
    }
    out << ";\n";
  }
  for (auto const& e : g.edges()) {
    out << "  " << detail::dot_id(e.first) << " -- " << detail::dot_id(e.second) << ";\n";
  }
  out << "}\n";
  return out.str();
}

// Gamma with each Artin loop's edges in its own color and the basepoints
// drawn as double circles.
inline std::string to_dot(Halo const& h) {
  std::map<Edge, std::size_t> edge_loop;
  std::size_t k = 0;
  for (auto const& [a, loop] : h.artin_loops) {
    for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
      edge_loop.emplace(Edge(loop[i], loop[i + 1]), k);
    }
    ++k;
  }
  std::set<Vertex> basepoints;
  for (auto const& [c, x] : h.basepoints) {
    basepoints.insert(x);
  }
  std::ostringstream out;
  out << "graph Halo {\n";
  for (auto const& v : h.gamma.vertices()) {
    out << "  " << detail::dot_id(v);
    if (basepoints.contains(v)) {
      out << " [shape=doublecircle]";
    }
    out << ";\n";
  }
  for (auto const& e : h.gamma.edges()) {
    out << "  " << detail::dot_id(e.first) << " -- " << detail::dot_id(e.second);
    if (auto it = edge_loop.find(e); it != edge_loop.end()) {
      out << " [color=" << detail::palette(it->second) << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace halobraid

#endif  // HALOBRAID_IO_HPP_
