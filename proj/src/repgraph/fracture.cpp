#include "repgraph/fracture.hpp"

#include <algorithm>
#include <numeric>

#include "permcore/permgroup.hpp"

namespace ht::graph {

FractureGraph fracture_graph(const std::vector<perm::Permutation>& gens) {
  RepGraph graph = RepGraph::from_generators(gens);
  Point n = graph.vertex_count();

  FractureGraph result;
  std::vector<int> blocked;
  for (int label = 0; label < graph.rank(); ++label) {
    std::vector<perm::Permutation> others;
    for (int j = 0; j < graph.rank(); ++j)
      if (j != label) others.push_back(gens[static_cast<std::size_t>(j)]);
    auto orbits = perm::orbit_partition(n, others);
    std::vector<std::uint32_t> orbit_of(n);
    for (std::uint32_t i = 0; i < orbits.size(); ++i)
      for (Point p : orbits[i]) orbit_of[p] = i;

    bool found = false;
    for (const Edge& e : graph.edges_with_label(label)) {
      // edges_with_label is (a, b)-sorted, so the first crossing edge is the
      // lexicographically least one.
      if (orbit_of[e.a] != orbit_of[e.b]) {
        result.chosen.push_back(e);
        found = true;
        break;
      }
    }
    if (!found) blocked.push_back(label);
  }
  if (!blocked.empty()) {
    std::string what = "no fracture edge for label";
    for (int l : blocked) what += " " + std::to_string(l);
    throw NoFractureError(std::move(blocked), what);
  }

  for (const Edge& e : graph.edges())
    if (std::find(result.chosen.begin(), result.chosen.end(), e) == result.chosen.end())
      result.omitted.push_back(e);

  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = static_cast<int>(n);
  for (const Edge& e : result.chosen) {
    Point ra = find(e.a), rb = find(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  result.component_count = components;
  return result;
}

}  // namespace ht::graph
