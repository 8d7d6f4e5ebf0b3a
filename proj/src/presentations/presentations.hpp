#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permcore/permutation.hpp"
#include "repgraph/diagram.hpp"

namespace ht::pres {

// A word in the generators; every generator is an involution, so no inverse
// markers are needed.
using Word = std::vector<int>;

struct Presentation {
  int rank = 0;
  std::vector<Word> relators;  // includes the squares rho_i^2

  bool operator==(const Presentation&) const = default;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by todd_coxeter when the row budget is exhausted; signals an
// inconclusive enumeration, not a disproof.
class CosetLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text form:
//   line 1:        "rank r"
//   then one relator per line, generator indices separated by spaces,
//   then optionally a line "SUBGROUP" followed by one subgroup word per line.
std::string to_text(const Presentation& p, const std::vector<Word>& subgroup_words = {});
Presentation from_text(const std::string& text, std::vector<Word>* subgroup_words = nullptr);

struct CheckResult {
  bool ok = true;
  // Index into p.relators of the first relator that is not the identity in
  // the permutation model.
  std::optional<std::size_t> first_failing;
};

CheckResult check_relations(const std::vector<perm::Permutation>& gens, const Presentation& p);

enum class TableStatus { Complete, Incomplete };

struct CosetTable {
  TableStatus status = TableStatus::Complete;
  std::uint64_t index = 0;
  // index rows by rank columns; rows[c][g] is the coset c * rho_g. Tables are
  // only returned once every entry is defined.
  std::vector<std::vector<std::int32_t>> rows;
};

// RelatorFill walks the cosets in order and closes every relator at each,
// defining what the scans need (HLT); CellFill defines one coset at a time
// at the first undefined table cell and lets deduction scans do the closing,
// which keeps the table near the final index. Auto runs RelatorFill and
// falls back to CellFill if the row budget is hit.
enum class EnumerationOrder { Auto, RelatorFill, CellFill };

// Coset enumeration over the subgroup generated by `subgroup_words`.
// Deterministic for a fixed order. When more than `max_cosets` rows would be
// needed even after a deduction-only lookahead pass and compaction, throws
// CosetLimitExceeded.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words = {},
                        std::uint64_t max_cosets = 5'000'000,
                        EnumerationOrder order = EnumerationOrder::Auto);

// Presentation for the group generated by the edge transpositions of a
// labeled tree: Coxeter relators of the line-graph diagram plus a relator
// (rho_i rho_j rho_i rho_k)^2 for every triangle of that diagram.
Presentation relators_rank_n_minus_1(const graph::LabeledTree& tree);

enum class Family { A, B, C };

char family_letter(Family f);
Family family_from_letter(char c);

// Presentation for a rank n-2 instance of the given family: Coxeter relators
// of the diagram of `gens`, triangle relators for diagram triangles with all
// indices >= 2, plus the family's head relators.
Presentation relators_rank_n_minus_2(Family family, const std::vector<perm::Permutation>& gens);

struct CertificationResult {
  bool certified = false;     // enumeration finished with index == model order
  bool inconclusive = false;  // coset limit hit before the table closed
  std::uint64_t index = 0;    // defined only when the enumeration finished
  std::uint64_t model_order = 0;
  // Relators that fail in the permutation model are excluded from the
  // enumeration rather than trusted.
  std::vector<std::size_t> excluded_relators;
};

CertificationResult certify_presentation(const std::vector<perm::Permutation>& gens,
                                         const Presentation& p,
                                         std::uint64_t max_cosets = 5'000'000);

}  // namespace ht::pres
