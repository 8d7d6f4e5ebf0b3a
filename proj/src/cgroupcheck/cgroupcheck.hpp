#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permcore/intersect.hpp"
#include "permcore/permgroup.hpp"

namespace ht::check {

using perm::Point;
using Mask = std::uint32_t;

class InvalidCandidateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SubgroupInfo {
  perm::PermGroup group;
  // True iff the group is the full product of symmetric groups on its
  // orbits; intersections of two such groups have computable order without
  // building the intersection.
  bool full_young;
  std::vector<std::uint32_t> cell_of;  // orbit index per point
};

// A generating list of pairwise distinct involutions, with a lazily built,
// internally synchronized cache of the subgroups generated by index subsets.
class Candidate {
public:
  Candidate(Point degree, std::vector<perm::Permutation> gens);

  Point degree() const { return degree_; }
  int rank() const { return static_cast<int>(gens_.size()); }
  const std::vector<perm::Permutation>& generators() const { return gens_; }
  Mask full_mask() const { return (Mask{1} << rank()) - 1; }

  const SubgroupInfo& subgroup(Mask mask) const;
  const perm::PermGroup& group() const { return subgroup(full_mask()).group; }
  const perm::PermGroup& maximal_parabolic(int omit) const {
    return subgroup(full_mask() & ~(Mask{1} << omit)).group;
  }
  std::vector<int> indices(Mask mask) const;

private:
  // Cache lives behind a pointer so Candidate stays movable.
  struct Cache {
    std::mutex mutex;
    std::map<Mask, std::unique_ptr<SubgroupInfo>> entries;
  };

  Point degree_;
  std::vector<perm::Permutation> gens_;
  std::unique_ptr<Cache> cache_;
};

// Element of <J> ∩ <K> that lies outside <J ∩ K>.
struct Witness {
  std::vector<int> j, k;
  perm::Permutation element;
};

struct CheckReport {
  bool is_c_group = false;
  std::string method;  // "full" or "recursive"
  std::optional<Witness> witness;

  nlohmann::json to_json() const;
};

// Verifies <J> ∩ <K> = <J ∩ K> for every pair of index subsets. Subset pairs
// where one side contains the other hold trivially and are skipped.
CheckReport check_full(const Candidate& candidate, const perm::IntersectOptions& opts = {});

// Rank at most 2 is accepted outright, ranks 3 and 4 fall back to the full
// subset-pair check, and higher ranks recurse: every maximal parabolic must
// pass and every pairwise parabolic intersection must equal the common
// parabolic.
CheckReport check_recursive(const Candidate& candidate);

}  // namespace ht::check
