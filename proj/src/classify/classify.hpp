#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgroupcheck/cgroupcheck.hpp"
#include "cosetgeom/cosetgeom.hpp"
#include "permcore/permgroup.hpp"
#include "presentations/presentations.hpp"
#include "repgraph/diagram.hpp"
#include "repgraph/fracture.hpp"
#include "repgraph/trees.hpp"

namespace ht::cls {

using perm::Permutation;
using perm::Point;

// Outcome of the per-candidate verification pipeline.
struct VerificationReport {
  std::uint64_t order = 0;
  bool order_ok = false;  // order equals n!
  bool c_group = false;   // recursive intersection-property check
  // Coxeter diagram equals the line graph of the source tree; only evaluated
  // for transposition instances built from a full tree.
  std::optional<bool> diagram_ok;
  bool hypertope = false;  // geometry, thin, residually connected, flag transitive

  bool ok() const { return order_ok && c_group && hypertope && diagram_ok.value_or(true); }
  nlohmann::json to_json() const;
};

// A family head glued onto a tail tree. The tail keeps its own vertex
// numbering 0..n-4; its edges carry labels 2..n-3 (not the 0-based range the
// default labeling uses), assigned breadth-first from the attachment vertex.
struct FamilyInstance {
  pres::Family family = pres::Family::A;
  graph::LabeledTree tail_tree;
  Point attach_vertex = 0;
  std::vector<Permutation> gens;  // rank n-2 involutions on n points
  int n = 0;
};

// Glues the family head onto `attach` of `tail`. The head occupies points
// 0..3; remaining tail vertices become points 4.. in breadth-first order from
// the attachment, and tail edges become the transpositions rho_2..rho_{n-3}.
// Throws std::invalid_argument when the tail has fewer than 4 vertices.
FamilyInstance build_family_instance(pres::Family family, const graph::UnlabeledTree& tail,
                                     Point attach);

// One retained (verified, canonically distinct) classification entry.
struct Instance {
  int n = 0;
  int rank = 0;
  std::optional<pres::Family> family;   // empty for transposition instances
  graph::UnlabeledTree tree;            // the full tree, or the tail tree
  std::optional<Point> attach;          // tail attachment vertex
  std::vector<Permutation> gens;
  std::string canon;                    // label-permutation-invariant canonical form
  VerificationReport report;

  nlohmann::json to_json() const;
};

struct ClassificationResult {
  int n = 0;
  int rank = 0;
  std::size_t candidates = 0;  // built before verification and dedup
  std::size_t failed = 0;      // dropped: verification failed
  std::size_t duplicates = 0;  // dropped: canonical form already retained
  std::vector<Instance> instances;
  std::array<std::size_t, 3> family_counts{};  // retained per family A, B, C

  nlohmann::json summary_json() const;
};

// One instance per tree on n vertices: the edge transpositions, verified as a
// C-group of order n! whose diagram is the tree's line graph and a regular
// hypertope. 7 <= n <= 12.
ClassificationResult enumerate_rank_n_minus_1(int n, int jobs = 1);

// Family heads glued onto every tail tree on n-3 vertices at one vertex per
// automorphism orbit, verified (order n!, C-group, regular hypertope) and
// deduplicated by canonical form. Candidates failing verification are
// dropped, not errors. 9 <= n <= 12.
ClassificationResult enumerate_rank_n_minus_2(int n, int jobs = 1);

// The printed six-involution generating set on 8 points whose C-group has a
// transitive maximal parabolic and whose representation graph matches no
// family shape.
std::vector<Permutation> exceptional_n8();

// Structural necessary conditions on the representation graph of a candidate
// whose maximal parabolics are all intransitive. The conditions are necessary
// only for generating sets of rank two below the point count; they are
// evaluated when the graph is connected and the rank matches, and otherwise
// every condition is left vacuously true (a disconnected graph additionally
// reports connected = false). Conditions about absent structure (no omitted
// edges, no doubled label, no square) also hold vacuously. Propagates
// NoFractureError when some parabolic is transitive and the candidate is in
// scope.
struct ScreenReport {
  bool connected = false;
  // Distinct non-fracture edges pairwise share a vertex, carry different
  // labels, and close an alternating square.
  bool omitted_edges_interlock = true;
  // Every label has at most two edges; a doubled label's edges are disjoint
  // and at graph distance one.
  bool doubled_labels_adjacent = true;
  // No parallel edges, and at most one cycle, which must be an alternating
  // two-label square.
  bool single_cycle_square = true;
  // Tree with one doubled label on more than four vertices: exactly one edge
  // beyond the doubled pair and their connector touches those four vertices.
  bool head_attachment_unique = true;
  // Unique-square graph on more than four vertices: square vertex degrees are
  // 2, 2, 2, 3.
  bool square_degrees_ok = true;

  bool all_ok() const {
    return omitted_edges_interlock && doubled_labels_adjacent && single_cycle_square &&
           head_attachment_unique && square_degrees_ok;
  }
  nlohmann::json to_json() const;
};

ScreenReport structural_screen(const std::vector<Permutation>& gens);

// Bounded search for rank-7 C-groups of S_9 outside the three family shapes:
// connected representation graphs on 9 vertices whose labels are matchings of
// size one or two (transpositions and 2-transpositions), restricted to the
// tree and one-cycle shapes, with doubled pairs at distance one. Candidates
// are deduplicated canonically before the group checks.
struct SearchOutcome {
  std::size_t shapes = 0;          // canonically distinct labeled graphs examined
  std::size_t full_order = 0;      // shapes generating the full symmetric group
  std::size_t c_groups = 0;        // shapes additionally passing the intersection property
  std::size_t family_matched = 0;  // c_groups whose canonical form is a family instance
  std::vector<std::string> outside;  // canonical forms of c_groups outside the families
};

SearchOutcome restricted_search_n9();

// Deterministic cross-validation corpus: 200 candidates of rank at most 5 on
// at most 9 points, mixing verified tree and family instances, systematic
// doubled-label variations, the structural negative configurations, and
// seeded pseudo-random involution tuples.
std::vector<check::Candidate> corpus();

}  // namespace ht::cls
