// Shared test fixtures: the small graphs every suite keeps coming back to.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orraag/graph.hpp"
#include "orraag/orientation.hpp"

namespace orraag::fixtures {

using K = VertexKind;

// Three ordinary vertices in a directed cycle; not specially oriented.
inline OrientedGraph mennicke() {
  return OrientedGraph({{"v1", K::Ordinary}, {"v2", K::Ordinary}, {"v3", K::Ordinary}},
                       {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v1"}});
}

// Two non-adjacent ordinary vertices pointing at a common special vertex.
inline OrientedGraph lambda_s() {
  return OrientedGraph({{"v1", K::Ordinary}, {"v2", K::Special}, {"v3", K::Ordinary}},
                       {{"v1", "v2"}, {"v3", "v2"}});
}

// One special edge into a special vertex.
inline OrientedGraph easy_arrow() {
  return OrientedGraph({{"v", K::Ordinary}, {"w", K::Special}}, {{"v", "w"}});
}

// Hub v1 joined to the path v2-v3-v4-v5; chordal, not elementary type.
inline OrientedGraph chord1() {
  std::vector<Vertex> vs;
  for (int i = 1; i <= 5; ++i) vs.push_back({"v" + std::to_string(i), K::Ordinary});
  std::vector<Arc> arcs;
  auto edge = [&arcs](const std::string& a, const std::string& b) {
    arcs.push_back({a, b});
    arcs.push_back({b, a});
  };
  edge("v1", "v2");
  edge("v1", "v3");
  edge("v1", "v4");
  edge("v1", "v5");
  edge("v2", "v3");
  edge("v3", "v4");
  edge("v4", "v5");
  return OrientedGraph(std::move(vs), arcs);
}

// Complete specially oriented graph on 4 vertices (triple cone over {v4}).
inline OrientedGraph k4_so() {
  std::vector<Vertex> vs{
      {"v1", K::Ordinary}, {"v2", K::Ordinary}, {"v3", K::Ordinary}, {"v4", K::Special}};
  std::vector<Arc> arcs{{"v1", "v2"}, {"v2", "v1"}, {"v1", "v3"}, {"v3", "v1"},
                        {"v2", "v3"}, {"v3", "v2"}, {"v1", "v4"}, {"v2", "v4"},
                        {"v3", "v4"}};
  return OrientedGraph(std::move(vs), arcs);
}

// Four-cycle with every edge ordinary.
inline OrientedGraph c4() {
  std::vector<Vertex> vs;
  for (int i = 1; i <= 4; ++i) vs.push_back({"v" + std::to_string(i), K::Ordinary});
  std::vector<Arc> arcs{{"v1", "v2"}, {"v2", "v1"}, {"v2", "v3"}, {"v3", "v2"},
                        {"v3", "v4"}, {"v4", "v3"}, {"v4", "v1"}, {"v1", "v4"}};
  return OrientedGraph(std::move(vs), arcs);
}

// Path on four vertices with every edge ordinary.
inline OrientedGraph l3() {
  std::vector<Vertex> vs;
  for (int i = 1; i <= 4; ++i) vs.push_back({"v" + std::to_string(i), K::Ordinary});
  std::vector<Arc> arcs{{"v1", "v2"}, {"v2", "v1"}, {"v2", "v3"},
                        {"v3", "v2"}, {"v3", "v4"}, {"v4", "v3"}};
  return OrientedGraph(std::move(vs), arcs);
}

// Cycle on n ordinary vertices (every edge ordinary).
inline OrientedGraph cycle(int n) {
  std::vector<Vertex> vs;
  std::vector<Arc> arcs;
  for (int i = 1; i <= n; ++i) vs.push_back({"v" + std::to_string(i), K::Ordinary});
  for (int i = 1; i <= n; ++i) {
    std::string a = "v" + std::to_string(i);
    std::string b = "v" + std::to_string(i % n + 1);
    arcs.push_back({a, b});
    arcs.push_back({b, a});
  }
  return OrientedGraph(std::move(vs), arcs);
}

// n isolated ordinary vertices.
inline OrientedGraph edgeless(int n) {
  std::vector<Vertex> vs;
  for (int i = 1; i <= n; ++i) vs.push_back({"v" + std::to_string(i), K::Ordinary});
  return OrientedGraph(std::move(vs), {});
}

inline LinearOrientation lam3() { return LinearOrientation::make(3, 4); }

}  // namespace orraag::fixtures
