#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "permcore/permutation.hpp"

namespace ht::perm {

// One level of a stabilizer chain. The level group is generated by `gens`
// together with the `gens` of every deeper level; all of those fix every
// point below `base`. `transversal[i]` maps `base` to `orbit[i]`;
// orbit[0] == base and transversal[0] is the identity.
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> gens;
  std::vector<Point> orbit;
  std::vector<Permutation> transversal;
  std::vector<std::int32_t> orbit_pos;  // point -> index into orbit, -1 outside

  bool in_orbit(Point p) const { return orbit_pos[p] >= 0; }
  const Permutation& rep(Point p) const { return transversal[static_cast<std::size_t>(orbit_pos[p])]; }
};

// Deterministic stabilizer chain. Base points are the smallest point moved by
// each successive stabilizer, so the base is strictly ascending and identical
// across runs for the same generator list.
class Chain {
public:
  static Chain build(Point degree, const std::vector<Permutation>& gens);

  Point degree() const { return degree_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

  // Strips `p` through the chain; returns the residue and the number of
  // levels consumed. The residue is the identity iff `p` is a member.
  std::pair<Permutation, std::size_t> sift(const Permutation& p) const;

  // Calls `fn` once per group element in a fixed deterministic order
  // (odometer over the transversals, deepest level varying fastest).
  // Stops early when `fn` returns false.
  void for_each_element(const std::function<bool(const Permutation&)>& fn) const;

  // Lexicographically least image table among {x * h : h in the group}, i.e.
  // the canonical member of the left coset of `x`. The minimizer is unique
  // because distinct members have distinct image tables.
  std::vector<Point> min_coset_images(const Permutation& x) const;
  Permutation min_coset_element(const Permutation& x) const;

private:
  Point degree_ = 0;
  std::vector<ChainLevel> levels_;

  void recompute_orbit(std::size_t level);
  std::pair<Permutation, std::size_t> sift_from(const Permutation& p, std::size_t start) const;
  void complete_from(std::size_t level);
};

// Orbit partition of {0, ..., degree-1} under the generators; includes
// singleton orbits, ordered by least element, each orbit sorted.
std::vector<std::vector<Point>> orbit_partition(Point degree, const std::vector<Permutation>& gens);

// Finitely generated permutation group with an eagerly built stabilizer
// chain. Immutable after construction; safe to share across threads.
class PermGroup {
public:
  PermGroup(Point degree, std::vector<Permutation> generators);
  static PermGroup trivial(Point degree) { return PermGroup(degree, {}); }
  static PermGroup symmetric(Point degree);

  Point degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const Chain& chain() const { return chain_; }

  std::uint64_t order() const { return chain_.order(); }
  bool contains(const Permutation& p) const { return chain_.contains(p); }
  bool is_subgroup_of(const PermGroup& other) const;

  std::vector<std::vector<Point>> orbits() const { return orbit_partition(degree_, gens_); }
  // True iff the single orbit covers every point of the domain.
  bool is_transitive() const;

  void for_each_element(const std::function<bool(const Permutation&)>& fn) const {
    chain_.for_each_element(fn);
  }

private:
  Point degree_;
  std::vector<Permutation> gens_;
  Chain chain_;
};

std::uint64_t factorial(std::uint64_t n);  // throws DomainError past 20!

}  // namespace ht::perm
