#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "permcore/permutation.hpp"
#include "repgraph/trees.hpp"

namespace ht::graph {

class NonInvolutionError : public std::runtime_error {
public:
  NonInvolutionError(int generator_index, std::string what)
      : std::runtime_error(std::move(what)), generator_index(generator_index) {}
  int generator_index;
};

class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  Point a;  // a < b
  Point b;
  int label;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

// Edge-labeled multigraph on vertices 0..n-1 where each label class is a
// perfect matching on its support: label i holds the 2-cycles of the i-th
// involution. Parallel edges (same endpoints, distinct labels) are allowed.
class RepGraph {
public:
  RepGraph(Point n, int rank, std::vector<Edge> edges);
  static RepGraph from_generators(const std::vector<perm::Permutation>& gens);

  Point vertex_count() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<Edge>& edges() const { return edges_; }  // sorted by (label, a, b)

  std::vector<Edge> edges_with_label(int label) const;
  std::vector<int> vertex_degrees() const;  // multigraph degree per vertex
  // Recovers the generator list: label i becomes the product of its edges'
  // transpositions.
  std::vector<perm::Permutation> generators() const;

  bool is_simple() const;               // no parallel edges
  bool is_connected() const;            // on all n vertices
  bool is_tree() const;                 // connected, simple, n-1 edges
  bool has_unique_edge_labels() const;  // every label used exactly once

  nlohmann::json to_json() const;
  static RepGraph from_json(const nlohmann::json& j);
  // Graphviz output; edges in `dashed` (by value) are drawn dashed.
  std::string to_dot(const std::vector<Edge>& dashed = {}) const;

  bool operator==(const RepGraph&) const = default;

private:
  Point n_;
  int rank_;
  std::vector<Edge> edges_;
};

}  // namespace ht::graph
