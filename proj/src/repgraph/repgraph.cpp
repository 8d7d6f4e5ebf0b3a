#include "repgraph/repgraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ht::graph {

RepGraph::RepGraph(Point n, int rank, std::vector<Edge> edges)
    : n_(n), rank_(rank), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.b >= n_ || e.a == e.b) throw GraphError("edge endpoints out of range");
    if (e.label < 0 || e.label >= rank_) throw GraphError("edge label out of range");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.label, x.a, x.b) < std::tie(y.label, y.a, y.b); });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i] == edges_[i - 1]) throw GraphError("duplicate edge");
  // Each label class must be a matching: no vertex on two edges of one label.
  std::vector<int> last_label_at(n_, -1);
  int current = -1;
  for (const Edge& e : edges_) {
    if (e.label != current) current = e.label;
    if (last_label_at[e.a] == current || last_label_at[e.b] == current)
      throw GraphError("label class is not a matching");
    last_label_at[e.a] = current;
    last_label_at[e.b] = current;
  }
}

RepGraph RepGraph::from_generators(const std::vector<perm::Permutation>& gens) {
  if (gens.empty()) throw GraphError("generator list is empty");
  Point n = gens.front().degree();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree() != n) throw GraphError("generator degree mismatch");
    if (!gens[i].is_involution())
      throw NonInvolutionError(static_cast<int>(i),
                               "generator " + std::to_string(i) + " is not an involution");
    for (const auto& cyc : gens[i].cycle_decomposition())
      edges.push_back({cyc[0], cyc[1], static_cast<int>(i)});
  }
  return RepGraph(n, static_cast<int>(gens.size()), std::move(edges));
}

std::vector<Edge> RepGraph::edges_with_label(int label) const {
  std::vector<Edge> result;
  for (const Edge& e : edges_)
    if (e.label == label) result.push_back(e);
  return result;
}

std::vector<int> RepGraph::vertex_degrees() const {
  std::vector<int> degree(n_, 0);
  for (const Edge& e : edges_) {
    ++degree[e.a];
    ++degree[e.b];
  }
  return degree;
}

std::vector<perm::Permutation> RepGraph::generators() const {
  std::vector<perm::Permutation> gens;
  for (int i = 0; i < rank_; ++i) {
    perm::CycleDecomposition cycles;
    for (const Edge& e : edges_with_label(i)) cycles.push_back({e.a, e.b});
    gens.push_back(perm::Permutation::from_cycles(n_, cycles));
  }
  return gens;
}

bool RepGraph::is_simple() const {
  std::vector<std::pair<Point, Point>> pairs;
  for (const Edge& e : edges_) pairs.emplace_back(e.a, e.b);
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

bool RepGraph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<std::vector<Point>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<bool> seen(n_, false);
  std::vector<Point> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Point v = stack.back();
    stack.pop_back();
    for (Point w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

bool RepGraph::is_tree() const {
  return is_simple() && edges_.size() + 1 == n_ && is_connected();
}

bool RepGraph::has_unique_edge_labels() const {
  std::vector<int> uses(rank_, 0);
  for (const Edge& e : edges_) ++uses[e.label];
  return std::all_of(uses.begin(), uses.end(), [](int u) { return u == 1; });
}

nlohmann::json RepGraph::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["rank"] = rank_;
  auto arr = nlohmann::json::array();
  for (const Edge& e : edges_) arr.push_back({e.a, e.b, e.label});
  j["edges"] = std::move(arr);
  return j;
}

RepGraph RepGraph::from_json(const nlohmann::json& j) {
  std::vector<Edge> edges;
  for (const auto& item : j.at("edges"))
    edges.push_back({item.at(0).get<Point>(), item.at(1).get<Point>(), item.at(2).get<int>()});
  return RepGraph(j.at("n").get<Point>(), j.at("rank").get<int>(), std::move(edges));
}

std::string RepGraph::to_dot(const std::vector<Edge>& dashed) const {
  std::ostringstream out;
  out << "graph rep {\n";
  for (Point v = 0; v < n_; ++v) out << "  " << v << ";\n";
  for (const Edge& e : edges_) {
    bool is_dashed = std::find(dashed.begin(), dashed.end(), e) != dashed.end();
    out << "  " << e.a << " -- " << e.b << " [label=\"" << e.label << "\"";
    if (is_dashed) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ht::graph
