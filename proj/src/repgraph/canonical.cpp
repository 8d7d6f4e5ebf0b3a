#include "repgraph/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "repgraph/trees.hpp"

namespace ht::graph {

namespace {

std::string encode(const RepGraph& graph, const std::vector<Point>& pos, bool allow_label_perm) {
  const int rank = graph.rank();
  std::vector<std::vector<std::pair<Point, Point>>> label_edges(rank);
  for (const Edge& e : graph.edges()) {
    Point a = pos[e.a], b = pos[e.b];
    if (a > b) std::swap(a, b);
    label_edges[e.label].emplace_back(a, b);
  }
  for (auto& le : label_edges) std::sort(le.begin(), le.end());

  // Structural label ids: labels ranked by their repositioned edge lists, so
  // the result does not depend on the original label names.
  std::vector<int> new_label(rank);
  if (allow_label_perm) {
    std::vector<int> order(rank);
    for (int i = 0; i < rank; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return label_edges[x] < label_edges[y]; });
    for (int r = 0; r < rank; ++r) new_label[order[r]] = r;
  } else {
    for (int i = 0; i < rank; ++i) new_label[i] = i;
  }

  std::vector<std::array<Point, 3>> triples;
  for (int l = 0; l < rank; ++l)
    for (auto [a, b] : label_edges[l])
      triples.push_back({a, b, static_cast<Point>(new_label[l])});
  std::sort(triples.begin(), triples.end());

  std::string out;
  for (const auto& t : triples) {
    out += std::to_string(t[0]);
    out += '.';
    out += std::to_string(t[1]);
    out += '.';
    out += std::to_string(t[2]);
    out += ';';
  }
  return out;
}

}  // namespace

std::string canonical_form(const RepGraph& graph, bool allow_label_permutation) {
  const Point n = graph.vertex_count();
  std::string header = (allow_label_permutation ? "P|" : "L|") + std::to_string(n) + "|" +
                       std::to_string(graph.rank()) + "|";
  if (n > 16) throw GraphError("canonical_form supports at most 16 vertices");

  if (allow_label_permutation && graph.is_tree() && graph.has_unique_edge_labels()) {
    UnlabeledTree t;
    t.n = n;
    for (const Edge& e : graph.edges()) t.edges.emplace_back(e.a, e.b);
    std::sort(t.edges.begin(), t.edges.end());
    return "T|" + std::to_string(n) + "|" + std::to_string(graph.rank()) + "|" +
           tree_canonical_string(t);
  }

  // Colour refinement. Initial colours see the local multi-edge structure;
  // with label permutations allowed they ignore the label names.
  std::vector<std::vector<std::pair<Point, int>>> incident(n);  // (neighbor, label)
  for (const Edge& e : graph.edges()) {
    incident[e.a].emplace_back(e.b, e.label);
    incident[e.b].emplace_back(e.a, e.label);
  }

  std::vector<int> color(n, 0);
  {
    std::map<std::vector<int>, std::vector<Point>> initial;
    for (Point v = 0; v < n; ++v) {
      std::vector<int> key;
      if (allow_label_permutation) {
        std::map<Point, int> mult;
        for (auto [w, l] : incident[v]) ++mult[w];
        for (auto [w, m] : mult) key.push_back(m);
        std::sort(key.begin(), key.end());
      } else {
        for (auto [w, l] : incident[v]) key.push_back(l);
        std::sort(key.begin(), key.end());
      }
      initial[key].push_back(v);
    }
    int c = 0;
    for (auto& [key, vs] : initial) {
      for (Point v : vs) color[v] = c;
      ++c;
    }
  }
  while (true) {
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, std::vector<Point>> refined;
    for (Point v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> around;
      for (auto [w, l] : incident[v])
        around.emplace_back(color[w], allow_label_permutation ? 0 : l);
      std::sort(around.begin(), around.end());
      refined[{color[v], std::move(around)}].push_back(v);
    }
    if (refined.size() == static_cast<std::size_t>(*std::max_element(color.begin(), color.end()) + 1))
      break;
    int c = 0;
    for (auto& [key, vs] : refined) {
      for (Point v : vs) color[v] = c;
      ++c;
    }
  }

  // Cells in colour order; every ordering that lists cell members
  // consecutively is explored and the least encoding wins.
  int color_count = n ? *std::max_element(color.begin(), color.end()) + 1 : 0;
  std::vector<std::vector<Point>> cells(color_count);
  for (Point v = 0; v < n; ++v) cells[color[v]].push_back(v);

  std::vector<Point> pos(n, 0);
  std::vector<bool> used(n, false);
  std::string best;
  Point next_pos = 0;

  struct Search {
    const RepGraph& graph;
    std::vector<std::vector<Point>>& cells;
    std::vector<Point>& pos;
    std::vector<bool>& used;
    std::string& best;
    Point& next_pos;
    bool allow;

    void run(std::size_t cell_index) {
      if (cell_index == cells.size()) {
        std::string candidate = encode(graph, pos, allow);
        if (best.empty() || candidate < best) best = candidate;
        return;
      }
      place(cell_index, 0);
    }
    void place(std::size_t cell_index, std::size_t filled) {
      auto& cell = cells[cell_index];
      if (filled == cell.size()) {
        run(cell_index + 1);
        return;
      }
      for (Point v : cell) {
        if (used[v]) continue;
        used[v] = true;
        pos[v] = next_pos++;
        place(cell_index, filled + 1);
        --next_pos;
        used[v] = false;
      }
    }
  };
  Search search{graph, cells, pos, used, best, next_pos, allow_label_permutation};
  search.run(0);
  return header + best;
}

}  // namespace ht::graph
