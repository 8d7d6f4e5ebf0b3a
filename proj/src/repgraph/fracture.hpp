#pragma once

#include <stdexcept>
#include <vector>

#include "permcore/permutation.hpp"
#include "repgraph/repgraph.hpp"

namespace ht::graph {

// Raised when some label has no edge joining two different orbits of the
// subgroup generated by the other labels (in particular when that subgroup
// is transitive).
class NoFractureError : public std::runtime_error {
public:
  NoFractureError(std::vector<int> labels, std::string what)
      : std::runtime_error(std::move(what)), blocked_labels(std::move(labels)) {}
  std::vector<int> blocked_labels;
};

struct FractureGraph {
  std::vector<Edge> chosen;   // exactly one edge per label, sorted by label
  std::vector<Edge> omitted;  // the remaining edges of the rep graph
  int component_count = 0;    // components of (all vertices, chosen edges)
};

// For each label i, picks the lexicographically least i-edge whose endpoints
// lie in different orbits of the subgroup generated by the other labels.
FractureGraph fracture_graph(const std::vector<perm::Permutation>& gens);

}  // namespace ht::graph
