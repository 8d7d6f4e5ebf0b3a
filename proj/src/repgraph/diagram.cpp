#include "repgraph/diagram.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace ht::graph {

LabeledTree LabeledTree::from_unlabeled(const UnlabeledTree& tree) {
  LabeledTree result;
  result.n = tree.n;
  std::vector<std::pair<Point, Point>> pairs = tree.edges;
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    result.edges.push_back({pairs[i].first, pairs[i].second, static_cast<int>(i)});
  return result;
}

UnlabeledTree LabeledTree::unlabeled() const {
  UnlabeledTree result;
  result.n = n;
  for (const Edge& e : edges) result.edges.emplace_back(e.a, e.b);
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

std::vector<perm::Permutation> LabeledTree::generators() const {
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end(),
            [](const Edge& x, const Edge& y) { return x.label < y.label; });
  std::vector<perm::Permutation> gens;
  for (const Edge& e : sorted) gens.push_back(perm::Permutation::from_cycles(n, {{e.a, e.b}}));
  return gens;
}

CoxeterDiagram::CoxeterDiagram(int rank, std::vector<std::vector<std::uint32_t>> orders)
    : rank_(rank), orders_(std::move(orders)) {
  if (orders_.size() != static_cast<std::size_t>(rank_))
    throw GraphError("order matrix size mismatch");
  for (int i = 0; i < rank_; ++i) {
    if (orders_[i].size() != static_cast<std::size_t>(rank_))
      throw GraphError("order matrix size mismatch");
    if (orders_[i][i] != 1) throw GraphError("diagonal of order matrix must be 1");
    for (int j = 0; j < rank_; ++j)
      if (orders_[i][j] != orders_[j][i]) throw GraphError("order matrix must be symmetric");
  }
}

std::vector<std::tuple<int, int, std::uint32_t>> CoxeterDiagram::edges() const {
  std::vector<std::tuple<int, int, std::uint32_t>> result;
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (orders_[i][j] > 2) result.emplace_back(i, j, orders_[i][j]);
  return result;
}

std::vector<std::array<int, 3>> CoxeterDiagram::triangles() const {
  std::vector<std::array<int, 3>> result;
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      for (int k = j + 1; k < rank_; ++k)
        if (orders_[i][j] > 2 && orders_[i][k] > 2 && orders_[j][k] > 2)
          result.push_back({i, j, k});
  return result;
}

nlohmann::json CoxeterDiagram::to_json() const {
  nlohmann::json j;
  j["rank"] = rank_;
  auto arr = nlohmann::json::array();
  for (auto [a, b, p] : edges()) arr.push_back({a, b, p});
  j["edges"] = std::move(arr);
  return j;
}

std::string CoxeterDiagram::to_dot() const {
  std::ostringstream out;
  out << "graph diagram {\n";
  for (int i = 0; i < rank_; ++i) out << "  " << i << ";\n";
  for (auto [a, b, p] : edges()) {
    out << "  " << a << " -- " << b;
    if (p > 3) out << " [label=\"" << p << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

CoxeterDiagram coxeter_diagram(const std::vector<perm::Permutation>& gens) {
  int rank = static_cast<int>(gens.size());
  std::vector<std::vector<std::uint32_t>> orders(rank, std::vector<std::uint32_t>(rank, 1));
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) {
      auto p = static_cast<std::uint32_t>(perm::compose(gens[i], gens[j]).order());
      orders[i][j] = orders[j][i] = p;
    }
  return CoxeterDiagram(rank, std::move(orders));
}

CoxeterDiagram line_graph_diagram(const LabeledTree& tree) {
  int rank = static_cast<int>(tree.edges.size());
  std::vector<Edge> by_label(rank, Edge{0, 0, 0});
  for (const Edge& e : tree.edges) by_label[e.label] = e;
  std::vector<std::vector<std::uint32_t>> orders(rank, std::vector<std::uint32_t>(rank, 1));
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) {
      const Edge& x = by_label[i];
      const Edge& y = by_label[j];
      bool shared = x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b;
      orders[i][j] = orders[j][i] = shared ? 3 : 2;
    }
  return CoxeterDiagram(rank, std::move(orders));
}

}  // namespace ht::graph
