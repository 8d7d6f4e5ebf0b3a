#include "repgraph/trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ht::graph {

namespace {

std::vector<std::vector<Point>> adjacency(const UnlabeledTree& tree) {
  std::vector<std::vector<Point>> adj(tree.n);
  for (auto [a, b] : tree.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::string rooted_string(const std::vector<std::vector<Point>>& adj, Point v, Point parent) {
  std::vector<std::string> children;
  for (Point w : adj[v])
    if (w != parent) children.push_back(rooted_string(adj, w, v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ")";
  return out;
}

}  // namespace

std::string rooted_canonical_string(const UnlabeledTree& tree, Point root) {
  auto adj = adjacency(tree);
  return rooted_string(adj, root, tree.n);
}

std::string tree_canonical_string(const UnlabeledTree& tree) {
  if (tree.n == 0) return "";
  auto adj = adjacency(tree);
  std::string best;
  for (Point v = 0; v < tree.n; ++v) {
    std::string s = rooted_string(adj, v, tree.n);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

UnlabeledTree canonicalize_tree(Point n, const std::vector<std::pair<Point, Point>>& edges) {
  if (n == 0) return {};
  if (edges.size() + 1 != n) throw std::invalid_argument("tree must have n-1 edges");
  UnlabeledTree raw{n, edges};
  auto adj = adjacency(raw);

  Point best_root = 0;
  std::string best;
  for (Point v = 0; v < n; ++v) {
    std::string s = rooted_string(adj, v, n);
    if (best.empty() || s < best) {
      best = std::move(s);
      best_root = v;
    }
  }

  // Preorder walk from the canonical root, visiting subtrees in canonical
  // string order; isomorphic inputs therefore produce identical edge lists.
  UnlabeledTree result;
  result.n = n;
  std::vector<Point> number(n, n);
  Point next = 0;
  struct Rec {
    const std::vector<std::vector<Point>>& adj;
    std::vector<Point>& number;
    Point& next;
    UnlabeledTree& result;
    Point n;
    void walk(Point v, Point parent) {
      number[v] = next++;
      std::vector<std::pair<std::string, Point>> children;
      for (Point w : adj[v])
        if (w != parent) children.emplace_back(rooted_string(adj, w, v), w);
      std::sort(children.begin(), children.end());
      for (auto& [s, w] : children) {
        result.edges.emplace_back(number[v], next);
        walk(w, v);
      }
    }
  };
  Rec rec{adj, number, next, result, n};
  rec.walk(best_root, n);
  for (auto& [a, b] : result.edges)
    if (a > b) std::swap(a, b);
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

std::vector<UnlabeledTree> enumerate_trees(Point n) {
  if (n == 0) return {};
  std::vector<UnlabeledTree> current{canonicalize_tree(1, {})};
  for (Point size = 2; size <= n; ++size) {
    std::map<std::string, UnlabeledTree> grown;
    for (const auto& tree : current)
      for (const auto& orbit : tree_vertex_orbits(tree)) {
        auto edges = tree.edges;
        edges.emplace_back(orbit.front(), size - 1);
        UnlabeledTree candidate = canonicalize_tree(size, edges);
        grown.emplace(tree_canonical_string(candidate), candidate);
      }
    current.clear();
    for (auto& [key, tree] : grown) current.push_back(std::move(tree));
  }
  return current;
}

std::vector<std::vector<Point>> tree_vertex_orbits(const UnlabeledTree& tree) {
  auto adj = adjacency(tree);
  std::map<std::string, std::vector<Point>> by_string;
  for (Point v = 0; v < tree.n; ++v) by_string[rooted_string(adj, v, tree.n)].push_back(v);
  std::vector<std::vector<Point>> orbits;
  for (auto& [key, vs] : by_string) orbits.push_back(std::move(vs));
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return orbits;
}

std::vector<Point> tree_leaves(const UnlabeledTree& tree) {
  if (tree.n == 1) return {0};
  std::vector<int> degree(tree.n, 0);
  for (auto [a, b] : tree.edges) {
    ++degree[a];
    ++degree[b];
  }
  std::vector<Point> leaves;
  for (Point v = 0; v < tree.n; ++v)
    if (degree[v] == 1) leaves.push_back(v);
  return leaves;
}

std::vector<Point> leaf_orbit_representatives(const UnlabeledTree& tree) {
  auto leaves = tree_leaves(tree);
  std::vector<Point> reps;
  for (const auto& orbit : tree_vertex_orbits(tree))
    if (std::binary_search(leaves.begin(), leaves.end(), orbit.front()))
      reps.push_back(orbit.front());
  return reps;
}

}  // namespace ht::graph
