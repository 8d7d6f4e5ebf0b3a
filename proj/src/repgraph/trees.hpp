#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permcore/permutation.hpp"

namespace ht::graph {

using perm::Point;

// Free tree on vertices 0..n-1 in canonical numbering (preorder from the
// canonical root), so isomorphic trees have identical edge lists.
struct UnlabeledTree {
  Point n = 0;
  std::vector<std::pair<Point, Point>> edges;  // each pair (parent, child) ordered a < b after canonicalization

  bool operator==(const UnlabeledTree&) const = default;
};

// Canonical string for the rooted tree: "(" + sorted child strings + ")".
std::string rooted_canonical_string(const UnlabeledTree& tree, Point root);

// Complete isomorphism invariant for free trees: the least rooted canonical
// string over all roots.
std::string tree_canonical_string(const UnlabeledTree& tree);

// Renumbers vertices canonically (preorder from the root attaining the least
// rooted string, children visited in sorted-subtree order).
UnlabeledTree canonicalize_tree(Point n, const std::vector<std::pair<Point, Point>>& edges);

// All isomorphism classes of free trees on n vertices, canonically numbered,
// sorted by canonical string. Sizes 1..12 give 1, 1, 1, 2, 3, 6, 11, 23, 47,
// 106, 235, 551.
std::vector<UnlabeledTree> enumerate_trees(Point n);

// Automorphism orbits of the vertices, grouped by equality of rooted
// canonical strings; orbits sorted by least vertex, vertices sorted.
std::vector<std::vector<Point>> tree_vertex_orbits(const UnlabeledTree& tree);

std::vector<Point> tree_leaves(const UnlabeledTree& tree);

// One representative (least vertex) per automorphism orbit that consists of
// leaves, in ascending order.
std::vector<Point> leaf_orbit_representatives(const UnlabeledTree& tree);

}  // namespace ht::graph
