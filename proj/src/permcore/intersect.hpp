#pragma once

#include <cstdint>

#include "permcore/permgroup.hpp"

namespace ht::perm {

enum class IntersectStrategy {
  Auto,       // Young-product shortcut when applicable, else order-based pick
  Enumerate,  // iterate the smaller group, sift through the other
  Backtrack,  // synchronized descent over both stabilizer chains
};

struct IntersectOptions {
  IntersectStrategy strategy = IntersectStrategy::Auto;
  // Auto enumerates when the smaller order is at most this bound.
  std::uint64_t enumerate_threshold = 2'000'000;
};

// Subgroup a ∩ b of Sym({0..degree-1}). Every strategy returns the same
// group (generator lists may differ); each strategy is deterministic.
PermGroup intersection(const PermGroup& a, const PermGroup& b, const IntersectOptions& opts = {});

}  // namespace ht::perm
