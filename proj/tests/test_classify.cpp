#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "classify/classify.hpp"
#include "repgraph/canonical.hpp"
#include "testutil.hpp"

using namespace ht;
using perm::PermGroup;
using perm::Permutation;
using perm::Point;
using testutil::gens;

namespace {

graph::UnlabeledTree path_tree(Point k) {
  graph::UnlabeledTree tree;
  tree.n = k;
  for (Point v = 0; v + 1 < k; ++v) tree.edges.emplace_back(v, v + 1);
  return tree;
}

std::string canon(const std::vector<Permutation>& g) {
  return graph::canonical_form(graph::RepGraph::from_generators(g), true);
}

std::multiset<std::string> canon_set(const cls::ClassificationResult& res) {
  std::multiset<std::string> out;
  for (const auto& inst : res.instances) out.insert(inst.canon);
  return out;
}

}  // namespace

TEST_CASE("edge transposition trees verify at seven and eight points") {
  for (int n : {7, 8}) {
    auto res = cls::enumerate_rank_n_minus_1(n);
    std::size_t expected = n == 7 ? 11 : 23;
    CHECK(res.candidates == expected);
    CHECK(res.failed == 0);
    CHECK(res.duplicates == 0);
    REQUIRE(res.instances.size() == expected);
    std::set<std::string> canons;
    for (const auto& inst : res.instances) {
      CHECK(inst.n == n);
      CHECK(inst.rank == n - 1);
      CHECK(!inst.family.has_value());
      CHECK(!inst.attach.has_value());
      CHECK(inst.tree.n == static_cast<Point>(n));
      CHECK(inst.report.order == perm::factorial(static_cast<Point>(n)));
      CHECK(inst.report.order_ok);
      CHECK(inst.report.c_group);
      REQUIRE(inst.report.diagram_ok.has_value());
      CHECK(*inst.report.diagram_ok);
      CHECK(inst.report.hypertope);
      CHECK(inst.report.ok());
      canons.insert(inst.canon);
    }
    CHECK(canons.size() == expected);
  }
}

TEST_CASE("family construction reproduces the printed nine point generators") {
  auto tail = path_tree(6);

  auto a = cls::build_family_instance(pres::Family::A, tail, 0);
  CHECK(a.n == 9);
  CHECK(a.gens == gens(9, {"(1 2)", "(0 1)(2 3)", "(3 4)", "(4 5)", "(5 6)", "(6 7)", "(7 8)"}));
  auto da = graph::coxeter_diagram(a.gens);
  CHECK(da.order(0, 1) == 4);
  CHECK(da.order(1, 2) == 6);
  CHECK(da.order(0, 2) == 2);
  for (int i = 2; i < 6; ++i) CHECK(da.order(i, i + 1) == 3);
  CHECK(da.order(2, 4) == 2);

  auto b = cls::build_family_instance(pres::Family::B, tail, 0);
  CHECK(b.gens == gens(9, {"(1 2)", "(0 1)(2 3)", "(2 4)", "(4 5)", "(5 6)", "(6 7)", "(7 8)"}));
  auto db = graph::coxeter_diagram(b.gens);
  CHECK(db.order(0, 1) == 4);
  CHECK(db.order(0, 2) == 3);
  CHECK(db.order(1, 2) == 6);

  auto c = cls::build_family_instance(pres::Family::C, tail, 0);
  CHECK(c.gens ==
        gens(9, {"(0 1)(2 3)", "(0 2)(1 3)", "(3 4)", "(4 5)", "(5 6)", "(6 7)", "(7 8)"}));
  auto dc = graph::coxeter_diagram(c.gens);
  CHECK(dc.order(0, 1) == 2);
  CHECK(dc.order(0, 2) == 6);
  CHECK(dc.order(1, 2) == 6);

  CHECK_THROWS_AS(cls::build_family_instance(pres::Family::A, path_tree(3), 0),
                  std::invalid_argument);
}

TEST_CASE("family gluing classifies twenty seven instances at nine points") {
  auto res = cls::enumerate_rank_n_minus_2(9);
  CHECK(res.candidates == 60);
  CHECK(res.failed == 33);
  CHECK(res.duplicates == 0);
  REQUIRE(res.instances.size() == 27);
  CHECK(res.family_counts[0] == 9);
  CHECK(res.family_counts[1] == 9);
  CHECK(res.family_counts[2] == 9);
  std::set<std::string> canons;
  for (const auto& inst : res.instances) {
    CHECK(inst.n == 9);
    CHECK(inst.rank == 7);
    CHECK(inst.family.has_value());
    REQUIRE(inst.attach.has_value());
    // Retained attachments are always tail leaves.
    auto leaves = graph::tree_leaves(inst.tree);
    CHECK(std::count(leaves.begin(), leaves.end(), *inst.attach) == 1);
    CHECK(inst.report.order == perm::factorial(9));
    CHECK(!inst.report.diagram_ok.has_value());
    CHECK(inst.report.ok());
    canons.insert(inst.canon);
  }
  CHECK(canons.size() == 27);

  // A rerun with worker threads keeps the same counts and canonical forms.
  auto rerun = cls::enumerate_rank_n_minus_2(9, 2);
  CHECK(rerun.candidates == res.candidates);
  CHECK(rerun.failed == res.failed);
  CHECK(canon_set(rerun) == canon_set(res));
}

TEST_CASE("exceptional eight point group stands apart from the families") {
  auto exceptional = cls::exceptional_n8();
  CHECK(PermGroup(8, exceptional).order() == 40320);

  check::Candidate cand(8, exceptional);
  CHECK(check::check_full(cand).is_c_group);
  CHECK(check::check_recursive(cand).is_c_group);

  int transitive = 0;
  for (int omit = 0; omit < 6; ++omit)
    if (cand.maximal_parabolic(omit).is_transitive()) ++transitive;
  CHECK(transitive >= 1);

  CHECK(geom::certify_regular_hypertope(exceptional).is_regular_hypertope());

  std::string exceptional_canon = canon(exceptional);
  for (pres::Family family : {pres::Family::A, pres::Family::B, pres::Family::C})
    for (const auto& tail : graph::enumerate_trees(5))
      for (const auto& orbit : graph::tree_vertex_orbits(tail)) {
        auto inst = cls::build_family_instance(family, tail, orbit.front());
        CHECK(canon(inst.gens) != exceptional_canon);
      }
}

TEST_CASE("structural screen accepts family shapes and rejects deviations") {
  // Every leaf attachment passes; every interior attachment fails exactly the
  // attachment condition for its shape.
  for (pres::Family family : {pres::Family::A, pres::Family::B, pres::Family::C}) {
    for (const auto& tail : graph::enumerate_trees(6)) {
      auto leaves = graph::tree_leaves(tail);
      for (const auto& orbit : graph::tree_vertex_orbits(tail)) {
        Point attach = orbit.front();
        auto inst = cls::build_family_instance(family, tail, attach);
        auto rep = cls::structural_screen(inst.gens);
        bool leaf = std::count(leaves.begin(), leaves.end(), attach) == 1;
        CHECK(rep.connected);
        CHECK(rep.all_ok() == leaf);
        if (!leaf && family == pres::Family::C) {
          CHECK(rep.head_attachment_unique);
          CHECK(!rep.square_degrees_ok);
        }
        if (!leaf && family != pres::Family::C) {
          CHECK(!rep.head_attachment_unique);
          CHECK(rep.square_degrees_ok);
        }
      }
    }
  }

  auto distance_two = cls::structural_screen(gens(5, {"(0 1)(3 4)", "(1 2)", "(2 3)"}));
  CHECK(!distance_two.doubled_labels_adjacent);

  auto parallel = cls::structural_screen(gens(6, {"(0 1)(2 3)", "(2 3)(4 5)", "(1 2)", "(3 4)"}));
  CHECK(parallel.doubled_labels_adjacent);
  CHECK(!parallel.single_cycle_square);

  for (const char* third : {"(0 5)", "(2 5)"}) {
    auto two_attachments =
        cls::structural_screen(gens(6, {"(1 2)", "(0 1)(2 3)", "(3 4)", third}));
    CHECK(two_attachments.doubled_labels_adjacent);
    CHECK(two_attachments.single_cycle_square);
    CHECK(!two_attachments.head_attachment_unique);
  }
  auto both_middles = cls::structural_screen(gens(6, {"(1 2)", "(0 1)(2 3)", "(1 4)", "(2 5)"}));
  CHECK(!both_middles.head_attachment_unique);

  auto twice = cls::structural_screen(gens(6, {"(0 1)(2 3)", "(0 2)(1 3)", "(3 4)", "(2 5)"}));
  CHECK(twice.single_cycle_square);
  CHECK(!twice.square_degrees_ok);

  // Disconnected: reported as such, with every condition left vacuous.
  auto split = cls::structural_screen(gens(7, {"(0 1)(5 6)", "(1 2)", "(4 5)"}));
  CHECK(!split.connected);
  CHECK(split.doubled_labels_adjacent);
  CHECK(split.head_attachment_unique);
  CHECK(split.all_ok());

  // Out of scope: rank three on seven points, and a full tree of rank one
  // below the point count. Both pass vacuously.
  auto chain = cls::structural_screen(gens(7, {"(0 1)(3 4)", "(1 2)(4 5)", "(2 3)(5 6)"}));
  CHECK(chain.connected);
  CHECK(chain.all_ok());
  auto tree_rank =
      cls::structural_screen(graph::LabeledTree::from_unlabeled(path_tree(7)).generators());
  CHECK(tree_rank.all_ok());

  CHECK_THROWS_AS(cls::structural_screen(cls::exceptional_n8()), graph::NoFractureError);
}

TEST_CASE("restricted search at nine points finds only the classified instances") {
  auto outcome = cls::restricted_search_n9();
  CHECK(outcome.shapes == 7365);
  CHECK(outcome.full_order == 7365);
  CHECK(outcome.c_groups == 27);
  CHECK(outcome.family_matched == 27);
  CHECK(outcome.outside.empty());
}

TEST_CASE("candidate corpus is fixed and well formed") {
  auto corpus = cls::corpus();
  REQUIRE(corpus.size() == 200);
  for (const auto& cand : corpus) {
    CHECK(cand.degree() <= 9);
    CHECK(cand.rank() >= 2);
    CHECK(cand.rank() <= 5);
    std::set<Permutation> distinct;
    for (const auto& g : cand.generators()) {
      CHECK(g.is_involution());
      CHECK(distinct.insert(g).second);
    }
  }
  // The seeded tail of the corpus is reproducible.
  auto again = cls::corpus();
  REQUIRE(again.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i)
    CHECK(again[i].generators() == corpus[i].generators());
}
