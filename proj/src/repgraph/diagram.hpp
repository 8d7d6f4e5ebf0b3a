#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "permcore/permutation.hpp"
#include "repgraph/repgraph.hpp"

namespace ht::graph {

// Labeled tree: an unlabeled tree plus a bijection between edges and labels
// 0..n-2. The default labeling assigns labels in sorted edge order.
struct LabeledTree {
  Point n = 0;
  std::vector<Edge> edges;  // n-1 edges, each label 0..n-2 exactly once

  static LabeledTree from_unlabeled(const UnlabeledTree& tree);
  UnlabeledTree unlabeled() const;
  // Transposition per edge, indexed by label.
  std::vector<perm::Permutation> generators() const;
};

// Symmetric matrix of pairwise product orders p_ij (p_ii = 1); vertices are
// generator indices, edges are pairs with p_ij > 2.
class CoxeterDiagram {
public:
  CoxeterDiagram(int rank, std::vector<std::vector<std::uint32_t>> orders);

  int rank() const { return rank_; }
  std::uint32_t order(int i, int j) const { return orders_[i][j]; }
  // (i, j, p_ij) with i < j and p_ij > 2, sorted.
  std::vector<std::tuple<int, int, std::uint32_t>> edges() const;
  // Unordered triples {i, j, k} whose three pairwise orders all exceed 2.
  std::vector<std::array<int, 3>> triangles() const;

  nlohmann::json to_json() const;
  // Graphviz output; edge labels shown only when p_ij > 3.
  std::string to_dot() const;

  bool operator==(const CoxeterDiagram&) const = default;

private:
  int rank_;
  std::vector<std::vector<std::uint32_t>> orders_;
};

CoxeterDiagram coxeter_diagram(const std::vector<perm::Permutation>& gens);

// Diagram of the line graph of a labeled tree: p = 3 when two edges share a
// vertex, 2 otherwise.
CoxeterDiagram line_graph_diagram(const LabeledTree& tree);

}  // namespace ht::graph
