#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgroupcheck/cgroupcheck.hpp"
#include "repgraph/diagram.hpp"
#include "repgraph/trees.hpp"
#include "testutil.hpp"

using namespace ht;
using check::Candidate;
using check::CheckReport;
using check::Mask;
using perm::PermGroup;
using perm::Permutation;
using perm::Point;
using testutil::gens;
using testutil::P;

namespace {

Candidate head_plus_path_candidate() {
  return Candidate(9, gens(9, {"(1 2)", "(0 1)(2 3)", "(3 4)", "(4 5)", "(5 6)", "(6 7)", "(7 8)"}));
}

Candidate exceptional_candidate() {
  return Candidate(
      8, gens(8, {"(0 1)", "(0 1)(2 3)", "(0 1)(6 7)", "(0 1)(4 5)", "(0 2)(5 7)", "(0 7)(2 5)"}));
}

// When the report carries a witness, its element must really lie in both
// subgroups and outside the one generated by the common indices.
void validate_witness(const Candidate& c, const CheckReport& report) {
  REQUIRE(report.witness.has_value());
  Mask j_mask = 0, k_mask = 0;
  for (int i : report.witness->j) j_mask |= Mask{1} << i;
  for (int i : report.witness->k) k_mask |= Mask{1} << i;
  const auto& element = report.witness->element;
  CHECK(c.subgroup(j_mask).group.contains(element));
  CHECK(c.subgroup(k_mask).group.contains(element));
  CHECK_FALSE(c.subgroup(j_mask & k_mask).group.contains(element));
}

}  // namespace

TEST_CASE("candidate validation") {
  CHECK_THROWS_AS(Candidate(4, {}), check::InvalidCandidateError);
  CHECK_THROWS_AS(Candidate(4, gens(4, {"(0 1 2)"})), check::InvalidCandidateError);
  CHECK_THROWS_AS(Candidate(4, gens(4, {"(0 1)", "(0 1)"})), check::InvalidCandidateError);
  CHECK_THROWS_AS(Candidate(4, gens(5, {"(0 1)"})), check::InvalidCandidateError);
  Candidate ok(4, gens(4, {"(0 1)", "(1 2)"}));
  CHECK(ok.rank() == 2);
  CHECK(ok.full_mask() == 0b11);
  CHECK(ok.indices(0b10) == std::vector<int>{1});
}

TEST_CASE("subgroup cache returns parabolic data") {
  Candidate c = head_plus_path_candidate();
  CHECK(c.group().order() == 362880);
  CHECK(c.subgroup(0).group.order() == 1);
  CHECK(c.subgroup(0b0000001).group.order() == 2);
  // Omitting the first generator leaves orbits {0,1} and the rest.
  auto orbits = c.maximal_parabolic(0).orbits();
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].size() == 2);
  CHECK(orbits[1].size() == 7);
  CHECK(c.maximal_parabolic(0).order() == 10080);
  CHECK(c.maximal_parabolic(1).order() == 1440);
  // Tree-edge subsets are full Young products; the head pair is not.
  CHECK(c.subgroup(0b1111100).full_young);
  CHECK_FALSE(c.subgroup(0b0000011).full_young);
}

TEST_CASE("labeled trees satisfy the intersection property") {
  for (Point n : {Point{5}, Point{6}}) {
    for (const auto& tree : graph::enumerate_trees(n)) {
      auto labeled = graph::LabeledTree::from_unlabeled(tree);
      Candidate c(n, labeled.generators());
      auto full = check_full(c);
      auto recursive = check_recursive(c);
      CHECK(full.is_c_group);
      CHECK(recursive.is_c_group);
      CHECK(full.method == "full");
      CHECK(recursive.method == "recursive");
    }
  }
}

TEST_CASE("head plus path candidate passes both checks") {
  Candidate c = head_plus_path_candidate();
  CHECK(check_full(c).is_c_group);
  CHECK(check_recursive(c).is_c_group);
}

TEST_CASE("exceptional rank six candidate passes both checks") {
  Candidate c = exceptional_candidate();
  CHECK(c.group().order() == 40320);
  CHECK(check_full(c).is_c_group);
  CHECK(check_recursive(c).is_c_group);
  // Omitting the first generator yields a transitive proper parabolic.
  CHECK(c.maximal_parabolic(0).is_transitive());
  CHECK(c.maximal_parabolic(0).order() == 1344);
  CHECK_FALSE(c.maximal_parabolic(5).is_transitive());
  CHECK(c.maximal_parabolic(5).order() == 576);
}

TEST_CASE("intersection property fails with a valid witness") {
  // Two edges of one label at distance two.
  Candidate far_apart(7, gens(7, {"(0 1)(5 6)", "(1 2)", "(4 5)"}));
  auto report = check_full(far_apart);
  CHECK_FALSE(report.is_c_group);
  validate_witness(far_apart, report);

  // Two edges of one label at distance zero (sharing the path 1-2-3).
  Candidate adjacent(5, gens(5, {"(0 1)(3 4)", "(1 2)", "(2 3)"}));
  auto report2 = check_full(adjacent);
  CHECK_FALSE(report2.is_c_group);
  validate_witness(adjacent, report2);
  CHECK_FALSE(check_recursive(adjacent).is_c_group);
}

TEST_CASE("attaching a tail at an interior vertex breaks the property") {
  // Head on {0..3}, tail star branching immediately at the attachment.
  Candidate c(9, gens(9, {"(1 2)", "(0 1)(2 3)", "(3 4)", "(3 5)", "(5 6)", "(6 7)", "(7 8)"}));
  auto full = check_full(c);
  auto recursive = check_recursive(c);
  CHECK_FALSE(full.is_c_group);
  CHECK_FALSE(recursive.is_c_group);
  validate_witness(c, full);
  validate_witness(c, recursive);
}

TEST_CASE("full check agrees across intersection strategies") {
  std::vector<Candidate> cases;
  cases.emplace_back(6, graph::LabeledTree::from_unlabeled(graph::enumerate_trees(6)[2]).generators());
  cases.emplace_back(5, gens(5, {"(0 1)(3 4)", "(1 2)", "(2 3)"}));
  cases.emplace_back(7, gens(7, {"(0 1)(5 6)", "(1 2)", "(4 5)"}));
  for (const auto& c : cases) {
    perm::IntersectOptions enumerate_opts, backtrack_opts;
    enumerate_opts.strategy = perm::IntersectStrategy::Enumerate;
    backtrack_opts.strategy = perm::IntersectStrategy::Backtrack;
    bool auto_verdict = check_full(c).is_c_group;
    CHECK(check_full(c, enumerate_opts).is_c_group == auto_verdict);
    CHECK(check_full(c, backtrack_opts).is_c_group == auto_verdict);
  }
}

TEST_CASE("report json shape") {
  Candidate good(4, gens(4, {"(0 1)", "(1 2)", "(2 3)"}));
  auto j = check_full(good).to_json();
  CHECK(j["c_group"] == true);
  CHECK(j["method"] == "full");
  CHECK(j["witness"].is_null());

  Candidate bad(5, gens(5, {"(0 1)(3 4)", "(1 2)", "(2 3)"}));
  auto jb = check_recursive(bad).to_json();
  CHECK(jb["c_group"] == false);
  CHECK(jb["witness"].is_object());
  CHECK(jb["witness"]["element"].is_string());
  CHECK(jb["witness"]["j"].is_array());
}
