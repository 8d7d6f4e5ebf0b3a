#pragma once

#include <string>

#include "repgraph/repgraph.hpp"

namespace ht::graph {

// Complete isomorphism invariant: two rep graphs get equal strings iff some
// vertex bijection maps one edge set onto the other (additionally allowing a
// relabeling of the edge labels when `allow_label_permutation` is set).
// Colour refinement narrows the candidate vertex orderings; the result is the
// least encoding over the consistent orderings. Supported for up to 16
// vertices.
std::string canonical_form(const RepGraph& graph, bool allow_label_permutation);

}  // namespace ht::graph
