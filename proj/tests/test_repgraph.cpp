#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "permcore/permgroup.hpp"
#include "repgraph/canonical.hpp"
#include "repgraph/diagram.hpp"
#include "repgraph/fracture.hpp"
#include "repgraph/repgraph.hpp"
#include "repgraph/trees.hpp"
#include "testutil.hpp"

using namespace ht;
using graph::canonical_form;
using graph::Edge;
using graph::LabeledTree;
using graph::RepGraph;
using graph::UnlabeledTree;
using perm::Permutation;
using perm::Point;
using testutil::gens;
using testutil::P;

namespace {

// Literal generator lists used as fixtures throughout the graph tests: a
// rank-7 degree-9 set whose graph is a 4-vertex head plus a path tail, and
// the exceptional rank-6 degree-8 set whose graph carries a quadruple edge.
std::vector<Permutation> head_plus_path_9() {
  return gens(9, {"(1 2)", "(0 1)(2 3)", "(3 4)", "(4 5)", "(5 6)", "(6 7)", "(7 8)"});
}

std::vector<Permutation> quadruple_edge_8() {
  return gens(8, {"(0 1)", "(0 1)(2 3)", "(0 1)(6 7)", "(0 1)(4 5)", "(0 2)(5 7)", "(0 7)(2 5)"});
}

// Decodes one Pruefer sequence over {0..n-1} into its labeled tree.
std::vector<std::pair<Point, Point>> pruefer_decode(Point n, const std::vector<Point>& seq) {
  std::vector<int> degree(n, 1);
  for (Point s : seq) ++degree[s];
  std::vector<std::pair<Point, Point>> edges;
  std::set<Point> leaves;
  for (Point v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (Point s : seq) {
    Point leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
    if (--degree[s] == 1) leaves.insert(s);
  }
  Point u = *leaves.begin(), v = *std::next(leaves.begin());
  edges.emplace_back(std::min(u, v), std::max(u, v));
  return edges;
}

}  // namespace

TEST_CASE("rep graph construction from involutions and back") {
  auto gs = head_plus_path_9();
  RepGraph g = RepGraph::from_generators(gs);
  CHECK(g.vertex_count() == 9);
  CHECK(g.rank() == 7);
  CHECK(g.edges().size() == 8);  // label 1 contributes two edges
  CHECK(g.edges_with_label(1) == std::vector<Edge>{{0, 1, 1}, {2, 3, 1}});
  CHECK(g.generators() == gs);
  CHECK(g.is_simple());
  CHECK(g.is_tree());
  CHECK_FALSE(g.has_unique_edge_labels());
  CHECK(g.is_connected());

  auto degrees = g.vertex_degrees();
  CHECK(degrees == std::vector<int>{1, 2, 2, 2, 2, 2, 2, 2, 1});
}

TEST_CASE("rep graph rejects bad input") {
  CHECK_THROWS_AS(RepGraph::from_generators(gens(4, {"(0 1 2)"})), graph::NonInvolutionError);
  CHECK_THROWS_AS(RepGraph::from_generators(gens(4, {"()"})), graph::NonInvolutionError);
  try {
    RepGraph::from_generators(gens(4, {"(0 1)", "(0 1 2 3)"}));
    FAIL("expected NonInvolutionError");
  } catch (const graph::NonInvolutionError& e) {
    CHECK(e.generator_index == 1);
  }
  CHECK_THROWS_AS(RepGraph(3, 1, {{0, 0, 0}}), graph::GraphError);
  CHECK_THROWS_AS(RepGraph(3, 1, {{0, 5, 0}}), graph::GraphError);
  CHECK_THROWS_AS(RepGraph(3, 1, {{0, 1, 2}}), graph::GraphError);
  CHECK_THROWS_AS(RepGraph(4, 1, {{0, 1, 0}, {0, 1, 0}}), graph::GraphError);
  // One label may not touch a vertex twice.
  CHECK_THROWS_AS(RepGraph(4, 1, {{0, 1, 0}, {1, 2, 0}}), graph::GraphError);
}

TEST_CASE("multigraph with parallel edges") {
  RepGraph g = RepGraph::from_generators(quadruple_edge_8());
  CHECK(g.vertex_count() == 8);
  CHECK(g.rank() == 6);
  CHECK_FALSE(g.is_simple());
  CHECK(g.edges_with_label(0) == std::vector<Edge>{{0, 1, 0}});
  CHECK(g.edges_with_label(2) == std::vector<Edge>{{0, 1, 2}, {6, 7, 2}});
  CHECK(g.is_connected());
  CHECK_FALSE(g.is_tree());
}

TEST_CASE("rep graph json round trip") {
  for (const auto& gs : {head_plus_path_9(), quadruple_edge_8()}) {
    RepGraph g = RepGraph::from_generators(gs);
    RepGraph back = RepGraph::from_json(g.to_json());
    CHECK(back == g);
  }
  RepGraph g = RepGraph::from_generators(head_plus_path_9());
  CHECK(g.to_json()["n"] == 9);
  CHECK(g.to_json()["rank"] == 7);
}

TEST_CASE("dot output lists every edge") {
  RepGraph g = RepGraph::from_generators(gens(4, {"(0 1)(2 3)", "(1 2)"}));
  auto dot = g.to_dot({{2, 3, 0}});
  CHECK(dot.find("0 -- 1 [label=\"0\"];") != std::string::npos);
  CHECK(dot.find("2 -- 3 [label=\"0\", style=dashed];") != std::string::npos);
  CHECK(dot.find("1 -- 2 [label=\"1\"];") != std::string::npos);
}

TEST_CASE("coxeter diagram orders for the head plus path fixture") {
  auto d = graph::coxeter_diagram(head_plus_path_9());
  CHECK(d.rank() == 7);
  CHECK(d.order(0, 1) == 4);
  CHECK(d.order(0, 2) == 2);
  CHECK(d.order(1, 2) == 6);
  CHECK(d.order(2, 3) == 3);
  CHECK(d.order(3, 4) == 3);
  CHECK(d.order(2, 4) == 2);
  CHECK(d.order(5, 6) == 3);
  auto edges = d.edges();
  CHECK(edges.size() == 6);  // a string diagram labeled 4, 6, 3, 3, 3, 3
  CHECK(edges.front() == std::tuple<int, int, std::uint32_t>{0, 1, 4});
  CHECK(d.triangles().empty());
  auto dot = d.to_dot();
  CHECK(dot.find("0 -- 1 [label=\"4\"]") != std::string::npos);
  CHECK(dot.find("2 -- 3;") != std::string::npos);  // labels of 3 are implicit
}

TEST_CASE("coxeter diagram of a tree equals the line graph of the tree") {
  for (Point n : {Point{5}, Point{6}, Point{7}}) {
    for (const auto& tree : graph::enumerate_trees(n)) {
      LabeledTree labeled = LabeledTree::from_unlabeled(tree);
      auto from_gens = graph::coxeter_diagram(labeled.generators());
      CHECK(from_gens == graph::line_graph_diagram(labeled));
    }
  }
}

TEST_CASE("line graph diagram has a triangle iff the tree branches") {
  // Star on 4 vertices: all three edges meet at the center.
  auto star = graph::canonicalize_tree(4, {{0, 1}, {0, 2}, {0, 3}});
  auto diagram = graph::line_graph_diagram(LabeledTree::from_unlabeled(star));
  CHECK(diagram.triangles().size() == 1);
  auto path = graph::canonicalize_tree(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(graph::line_graph_diagram(LabeledTree::from_unlabeled(path)).triangles().empty());
}

TEST_CASE("tree enumeration counts match the classical table") {
  const std::vector<std::size_t> counts = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (Point n = 1; n <= 10; ++n) {
    auto trees = graph::enumerate_trees(n);
    CHECK(trees.size() == counts[n - 1]);
    std::set<std::string> canon;
    for (const auto& t : trees) {
      REQUIRE(t.edges.size() + 1 == t.n);
      canon.insert(graph::tree_canonical_string(t));
    }
    CHECK(canon.size() == trees.size());  // pairwise non-isomorphic
  }
}

TEST_CASE("tree enumeration is complete against pruefer decoding") {
  for (Point n = 3; n <= 8; ++n) {
    std::set<std::string> from_pruefer;
    std::vector<Point> seq(n - 2, 0);
    while (true) {
      auto tree = graph::canonicalize_tree(n, pruefer_decode(n, seq));
      from_pruefer.insert(graph::tree_canonical_string(tree));
      std::size_t i = 0;
      while (i < seq.size() && seq[i] == n - 1) seq[i++] = 0;
      if (i == seq.size()) break;
      ++seq[i];
    }
    std::set<std::string> from_enumeration;
    for (const auto& t : graph::enumerate_trees(n))
      from_enumeration.insert(graph::tree_canonical_string(t));
    CHECK(from_pruefer == from_enumeration);
  }
}

TEST_CASE("canonical tree numbering is isomorphism invariant") {
  auto a = graph::canonicalize_tree(6, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
  auto b = graph::canonicalize_tree(6, {{5, 4}, {4, 3}, {3, 2}, {3, 1}, {1, 0}});
  CHECK(a == b);
  auto c = graph::canonicalize_tree(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK_FALSE(a == c);
}

TEST_CASE("tree vertex orbits and leaf orbit representatives") {
  auto path4 = graph::canonicalize_tree(4, {{0, 1}, {1, 2}, {2, 3}});
  std::multiset<std::size_t> path_sizes;
  for (const auto& orbit : graph::tree_vertex_orbits(path4)) path_sizes.insert(orbit.size());
  CHECK(path_sizes == std::multiset<std::size_t>{2, 2});
  CHECK(graph::leaf_orbit_representatives(path4).size() == 1);

  auto star4 = graph::canonicalize_tree(4, {{0, 1}, {0, 2}, {0, 3}});
  std::multiset<std::size_t> star_sizes;
  for (const auto& orbit : graph::tree_vertex_orbits(star4)) star_sizes.insert(orbit.size());
  CHECK(star_sizes == std::multiset<std::size_t>{1, 3});
  CHECK(graph::tree_leaves(star4).size() == 3);
  CHECK(graph::leaf_orbit_representatives(star4).size() == 1);
}

TEST_CASE("leaf orbit class totals over all trees of a size") {
  const std::map<Point, std::size_t> expected = {{4, 2}, {5, 4}, {6, 9}, {7, 20}, {9, 115}};
  for (auto [n, total] : expected) {
    std::size_t sum = 0;
    for (const auto& t : graph::enumerate_trees(n)) sum += graph::leaf_orbit_representatives(t).size();
    CHECK(sum == total);
  }
}

TEST_CASE("every labeled tree on n vertices generates the full symmetric group") {
  for (const auto& tree : graph::enumerate_trees(6)) {
    auto labeled = LabeledTree::from_unlabeled(tree);
    CHECK(perm::PermGroup(6, labeled.generators()).order() == 720);
  }
}

TEST_CASE("canonical form is invariant under vertex relabeling") {
  auto base = RepGraph::from_generators(head_plus_path_9());
  std::string canon = canonical_form(base, true);
  std::string canon_fixed = canonical_form(base, false);
  // Relabel the vertices by a few permutations and rebuild the graph.
  for (auto cycle : {"(0 8)(1 7)(2 6)(3 5)", "(0 3 6)(1 4 7)(2 5 8)", "(4 8)"}) {
    auto sigma = P(9, cycle);
    std::vector<Edge> edges;
    for (const Edge& e : base.edges()) edges.push_back({sigma(e.a), sigma(e.b), e.label});
    RepGraph moved(9, 7, std::move(edges));
    CHECK(canonical_form(moved, true) == canon);
    CHECK(canonical_form(moved, false) == canon_fixed);
  }
}

TEST_CASE("canonical form with label permutation ignores label names") {
  auto base = RepGraph::from_generators(head_plus_path_9());
  // Reverse the generator order: same graph up to a label permutation.
  auto reversed_gens = head_plus_path_9();
  std::reverse(reversed_gens.begin(), reversed_gens.end());
  auto reversed = RepGraph::from_generators(reversed_gens);
  CHECK(canonical_form(base, true) == canonical_form(reversed, true));
  CHECK(canonical_form(base, false) != canonical_form(reversed, false));
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  auto path = RepGraph::from_generators(gens(4, {"(0 1)", "(1 2)", "(2 3)"}));
  auto star = RepGraph::from_generators(gens(4, {"(0 1)", "(0 2)", "(0 3)"}));
  CHECK(canonical_form(path, true) != canonical_form(star, true));

  // Hexagon vs two triangles: identical degree and multiplicity profiles
  // everywhere, so only the ordering search can tell them apart.
  RepGraph hexagon(6, 3, {{0, 1, 0}, {3, 4, 0}, {1, 2, 1}, {4, 5, 1}, {2, 3, 2}, {0, 5, 2}});
  RepGraph triangles(6, 3, {{0, 1, 0}, {3, 4, 0}, {1, 2, 1}, {4, 5, 1}, {0, 2, 2}, {3, 5, 2}});
  CHECK(canonical_form(hexagon, true) != canonical_form(triangles, true));
  // Edge input order never matters.
  RepGraph hexagon_shuffled(6, 3, {{2, 3, 2}, {0, 1, 0}, {4, 5, 1}, {1, 2, 1}, {0, 5, 2}, {3, 4, 0}});
  CHECK(canonical_form(hexagon_shuffled, true) == canonical_form(hexagon, true));
}

TEST_CASE("canonical form distinguishes multi-edge label couplings") {
  RepGraph g = RepGraph::from_generators(quadruple_edge_8());
  std::string canon = canonical_form(g, true);
  for (auto cycle : {"(0 7)(1 6)(2 5)(3 4)", "(2 4)(3 5)"}) {
    auto sigma = P(8, cycle);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({sigma(e.a), sigma(e.b), e.label});
    CHECK(canonical_form(RepGraph(8, 6, std::move(edges)), true) == canon);
  }
  // Breaking one generator apart changes the label coupling pattern.
  auto other = gens(8, {"(0 1)", "(0 1)(2 3)", "(0 1)(6 7)", "(0 1)(4 5)", "(0 2)", "(0 7)(2 5)"});
  CHECK(canonical_form(RepGraph::from_generators(other), true) != canon);
}

TEST_CASE("fracture graph of the head plus path fixture") {
  auto f = graph::fracture_graph(head_plus_path_9());
  CHECK(f.chosen.size() == 7);
  CHECK(f.omitted == std::vector<Edge>{{2, 3, 1}});
  CHECK(f.component_count == 2);
  CHECK(f.chosen[1] == Edge{0, 1, 1});
}

TEST_CASE("fracture graph of a labeled tree keeps every edge") {
  auto tree = graph::enumerate_trees(7)[3];
  auto labeled = LabeledTree::from_unlabeled(tree);
  auto f = graph::fracture_graph(labeled.generators());
  CHECK(f.chosen.size() == 6);
  CHECK(f.omitted.empty());
  CHECK(f.component_count == 1);
}

TEST_CASE("fracture graph reports labels with no crossing edge") {
  try {
    graph::fracture_graph(quadruple_edge_8());
    FAIL("expected NoFractureError");
  } catch (const graph::NoFractureError& e) {
    REQUIRE(!e.blocked_labels.empty());
    CHECK(e.blocked_labels.front() == 0);
  }
}
