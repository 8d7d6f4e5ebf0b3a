#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "presentations/presentations.hpp"
#include "repgraph/trees.hpp"
#include "testutil.hpp"

using namespace ht;
using perm::PermGroup;
using perm::Permutation;
using pres::CosetTable;
using pres::Family;
using pres::Presentation;
using pres::Word;
using testutil::gens;
using testutil::P;

namespace {

Presentation dihedral(int p01) {
  Presentation p;
  p.rank = 2;
  p.relators.push_back({0, 0});
  p.relators.push_back({1, 1});
  Word alt;
  for (int i = 0; i < p01; ++i) {
    alt.push_back(0);
    alt.push_back(1);
  }
  p.relators.push_back(alt);
  return p;
}

graph::LabeledTree path_tree(perm::Point n) {
  graph::LabeledTree t;
  t.n = n;
  for (perm::Point i = 0; i + 1 < n; ++i)
    t.edges.push_back({i, i + 1, static_cast<int>(i)});
  return t;
}

std::vector<Permutation> head_plus_path_9() {
  return gens(9, {"(1 2)", "(0 1)(2 3)", "(3 4)", "(4 5)", "(5 6)", "(6 7)", "(7 8)"});
}

std::vector<Permutation> double_edge_head_9() {
  return gens(9, {"(1 2)", "(0 1)(2 3)", "(2 4)", "(4 5)", "(5 6)", "(6 7)", "(7 8)"});
}

std::vector<Permutation> square_head_9() {
  return gens(9, {"(0 1)(2 3)", "(0 2)(1 3)", "(3 4)", "(4 5)", "(5 6)", "(6 7)", "(7 8)"});
}

// Every column of a complete table must be an involution on the cosets.
void check_table_consistent(const CosetTable& t, int rank) {
  REQUIRE(t.status == pres::TableStatus::Complete);
  REQUIRE(t.rows.size() == t.index);
  for (std::size_t c = 0; c < t.rows.size(); ++c) {
    REQUIRE(t.rows[c].size() == static_cast<std::size_t>(rank));
    for (int g = 0; g < rank; ++g) {
      auto d = t.rows[c][g];
      REQUIRE(d >= 0);
      REQUIRE(static_cast<std::uint64_t>(d) < t.index);
      CHECK(t.rows[d][g] == static_cast<std::int32_t>(c));
    }
  }
}

}  // namespace

TEST_CASE("text form round trips") {
  Presentation p = dihedral(3);
  std::vector<Word> sub = {{0}, {0, 1, 0}};
  std::string text = pres::to_text(p, sub);
  CHECK(text == "rank 2\n0 0\n1 1\n0 1 0 1 0 1\nSUBGROUP\n0\n0 1 0\n");

  std::vector<Word> sub_back;
  Presentation back = pres::from_text(text, &sub_back);
  CHECK(back == p);
  CHECK(sub_back == sub);

  std::string bare = pres::to_text(p);
  CHECK(bare.find("SUBGROUP") == std::string::npos);
  CHECK(pres::from_text(bare) == p);
}

TEST_CASE("malformed text is rejected") {
  CHECK_THROWS_AS(pres::from_text(""), pres::FormatError);
  CHECK_THROWS_AS(pres::from_text("rank\n"), pres::FormatError);
  CHECK_THROWS_AS(pres::from_text("rank 2 7\n"), pres::FormatError);
  CHECK_THROWS_AS(pres::from_text("order 2\n0 0\n"), pres::FormatError);
  CHECK_THROWS_AS(pres::from_text("rank 2\n0 2\n"), pres::FormatError);
  CHECK_THROWS_AS(pres::from_text("rank 2\n0 x\n"), pres::FormatError);
  CHECK_THROWS_AS(pres::from_text("rank 2\n0 0\nSUBGROUP\n0\n"), pres::FormatError);
  std::vector<Word> sub;
  CHECK_THROWS_AS(pres::from_text("rank 2\nSUBGROUP\nSUBGROUP\n", &sub), pres::FormatError);
  CHECK_THROWS_AS(pres::to_text(Presentation{2, {{0, 3}}}), pres::FormatError);
}

TEST_CASE("two generator enumeration matches the dihedral orders") {
  Presentation p = dihedral(3);
  CosetTable full = pres::todd_coxeter(p);
  CHECK(full.index == 6);
  check_table_consistent(full, 2);

  CHECK(pres::todd_coxeter(p, {{0}}).index == 3);
  CHECK(pres::todd_coxeter(p, {{0, 1}}).index == 2);
  CHECK(pres::todd_coxeter(p, {{0}, {1}}).index == 1);

  CHECK(pres::todd_coxeter(dihedral(4)).index == 8);
  CHECK(pres::todd_coxeter(dihedral(6)).index == 12);
}

TEST_CASE("enumeration is deterministic") {
  graph::LabeledTree star{4, {{0, 1, 0}, {0, 2, 1}, {0, 3, 2}}};
  Presentation p = pres::relators_rank_n_minus_1(star);
  CosetTable a = pres::todd_coxeter(p);
  CosetTable b = pres::todd_coxeter(p);
  CHECK(a.index == b.index);
  CHECK(a.rows == b.rows);
}

TEST_CASE("string presentations enumerate the symmetric group") {
  for (perm::Point n : {4, 5, 6, 7}) {
    Presentation p = pres::relators_rank_n_minus_1(path_tree(n));
    CosetTable t = pres::todd_coxeter(p);
    CHECK(t.index == perm::factorial(n));
  }
}

TEST_CASE("star tree gains a triangle relator and still counts 4!") {
  graph::LabeledTree star{4, {{0, 1, 0}, {0, 2, 1}, {0, 3, 2}}};
  Presentation p = pres::relators_rank_n_minus_1(star);
  // 3 squares, 3 pair relators, 1 triangle relator.
  CHECK(p.relators.size() == 7);
  CHECK(p.relators.back() == Word{0, 1, 0, 2, 0, 1, 0, 2});
  CHECK(pres::check_relations(star.generators(), p).ok);
  CHECK(pres::todd_coxeter(p).index == 24);
}

TEST_CASE("parabolic subgroup indices are binomial") {
  struct Case {
    perm::Point n;
    int omit;
    std::uint64_t expect;
  };
  for (const Case& c : {Case{6, 2, 20}, Case{7, 3, 35}, Case{9, 0, 9}, Case{9, 4, 126}}) {
    graph::LabeledTree tree = path_tree(c.n);
    Presentation p = pres::relators_rank_n_minus_1(tree);
    std::vector<Word> sub;
    for (int g = 0; g < p.rank; ++g)
      if (g != c.omit) sub.push_back({g});
    CosetTable t = pres::todd_coxeter(p, sub);
    CHECK(t.index == c.expect);

    auto all = tree.generators();
    std::vector<Permutation> rest;
    for (int g = 0; g < p.rank; ++g)
      if (g != c.omit) rest.push_back(all[g]);
    PermGroup parabolic(c.n, rest);
    CHECK(t.index == perm::factorial(c.n) / parabolic.order());
  }
}

TEST_CASE("model check pinpoints a wrong exponent") {
  auto head = gens(4, {"(1 2)", "(0 1)(2 3)"});
  CHECK(pres::check_relations(head, dihedral(4)).ok);
  auto bad = pres::check_relations(head, dihedral(3));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.first_failing.has_value());
  CHECK(*bad.first_failing == 2);
}

TEST_CASE("relations hold under simultaneous conjugation") {
  auto g = head_plus_path_9();
  Presentation p = pres::relators_rank_n_minus_2(Family::A, g);
  CHECK(pres::check_relations(g, p).ok);
  Permutation s = P(9, "(0 8)(1 7)(2 6)");
  std::vector<Permutation> conj;
  for (const auto& x : g) conj.push_back(perm::compose(perm::compose(s, x), s.inverse()));
  CHECK(pres::check_relations(conj, p).ok);
}

TEST_CASE("every tree on seven vertices certifies its presentation") {
  auto trees = graph::enumerate_trees(7);
  REQUIRE(trees.size() == 11);
  for (const auto& t : trees) {
    graph::LabeledTree lt = graph::LabeledTree::from_unlabeled(t);
    Presentation p = pres::relators_rank_n_minus_1(lt);
    auto res = pres::certify_presentation(lt.generators(), p);
    CHECK(res.certified);
    CHECK(res.index == 5040);
    CHECK(res.model_order == 5040);
    CHECK(res.excluded_relators.empty());
  }
}

TEST_CASE("family presentations certify at nine points") {
  struct Case {
    Family family;
    std::vector<Permutation> g;
  };
  for (const Case& c : {Case{Family::A, head_plus_path_9()}, Case{Family::B, double_edge_head_9()}}) {
    CAPTURE(pres::family_letter(c.family));
    Presentation p = pres::relators_rank_n_minus_2(c.family, c.g);
    CHECK(pres::check_relations(c.g, p).ok);
    auto res = pres::certify_presentation(c.g, p);
    CHECK(res.excluded_relators.empty());
    CHECK_FALSE(res.inconclusive);
    CHECK(res.certified);
    CHECK(res.index == 362880);
  }
}

TEST_CASE("square head relators hold in the model but stay inconclusive") {
  auto g = square_head_9();
  Presentation p = pres::relators_rank_n_minus_2(Family::C, g);
  CHECK(pres::check_relations(g, p).ok);
  // A tighter budget than the default keeps this quick; the enumeration does
  // not close at the default budget either.
  auto res = pres::certify_presentation(g, p, 1'000'000);
  CHECK(res.excluded_relators.empty());
  CHECK(res.inconclusive);
  CHECK_FALSE(res.certified);
  CHECK(res.model_order == 362880);
}

TEST_CASE("a definition relator closes the square head enumeration") {
  auto g = square_head_9();
  Presentation p = pres::relators_rank_n_minus_2(Family::C, g);
  // rho0 * (rho1 (rho0 rho2)^3)^2 rewrites rho0 as a word in the other
  // generators; adding it lets the enumeration reach the full index.
  Word pin{0, 1, 0, 2, 0, 2, 0, 2, 1, 0, 2, 0, 2, 0, 2};
  p.relators.push_back(pin);
  CHECK(pres::check_relations(g, p).ok);
  auto res = pres::certify_presentation(g, p);
  CHECK(res.certified);
  CHECK_FALSE(res.inconclusive);
  CHECK(res.index == 362880);
  auto cell = pres::todd_coxeter(p, {}, 5'000'000, pres::EnumerationOrder::CellFill);
  CHECK(cell.status == pres::TableStatus::Complete);
  CHECK(cell.index == 362880);
}

TEST_CASE("row budget throws instead of wedging") {
  Presentation p = pres::relators_rank_n_minus_1(path_tree(6));
  CHECK_THROWS_AS(pres::todd_coxeter(p, {}, 50), pres::CosetLimitExceeded);
}

TEST_CASE("certification excludes model-false relators") {
  auto s3 = gens(3, {"(0 1)", "(1 2)"});
  Presentation p = dihedral(4);  // (rho0 rho1)^4 is not the identity in S_3
  auto res = pres::certify_presentation(s3, p, 2000);
  CHECK_FALSE(res.certified);
  CHECK(res.inconclusive);  // squares alone present an infinite group
  CHECK(res.excluded_relators == std::vector<std::size_t>{2});

  Presentation redundant = dihedral(3);
  redundant.relators.push_back(Word(12, 0));  // rho_0^12
  auto good = pres::certify_presentation(s3, redundant);
  CHECK(good.certified);
  CHECK(good.index == 6);
  CHECK(good.excluded_relators.empty());
}

TEST_CASE("family letters round trip") {
  for (Family f : {Family::A, Family::B, Family::C})
    CHECK(pres::family_from_letter(pres::family_letter(f)) == f);
  CHECK_THROWS_AS(pres::family_from_letter('D'), pres::FormatError);
}
