#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "permcore/intersect.hpp"
#include "permcore/permgroup.hpp"

namespace ht::geom {

using perm::Permutation;
using perm::PermGroup;
using perm::Point;

class GeometryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotAGeometry : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ChamberOverflow : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Fixed-width bitset over coset indices.
class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64) {}
  static Bits all(std::size_t n);

  std::size_t size() const { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }
  Bits& operator&=(const Bits& o);
  Bits& operator|=(const Bits& o);
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  bool operator==(const Bits&) const = default;

  // Calls fn for every set index in ascending order; stop early on false.
  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        std::size_t i = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        if constexpr (std::is_void_v<decltype(fn(std::size_t{}))>) {
          fn(i);
        } else {
          if (!fn(i)) return;
        }
        w &= w - 1;
      }
    }
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

enum class CosetSide { Right, Left };

// The cosets of one subgroup inside an ambient group, indexed by breadth-first
// discovery from the identity coset. Right cosets H x are moved by x -> x g,
// left cosets x H by x -> g x; canonical keys come from the subgroup's
// stabilizer chain, so equal cosets always collide.
class CosetSpace {
public:
  CosetSpace(const PermGroup& ambient, PermGroup subgroup, CosetSide side, std::size_t limit);

  std::size_t size() const { return reps_.size(); }
  const PermGroup& subgroup() const { return sub_; }
  const Permutation& representative(std::size_t i) const { return reps_[i]; }
  CosetSide side() const { return side_; }

  std::vector<Point> key_of(const Permutation& x) const;
  std::size_t index_of(const Permutation& x) const;  // coset containing x
  std::size_t act(std::size_t i, const Permutation& g) const;

  // Discovery tree: parent coset index and ambient generator index that
  // produced coset i; both 0 for the identity coset.
  std::uint32_t parent(std::size_t i) const { return parent_[i]; }
  std::uint32_t via(std::size_t i) const { return via_[i]; }

  // Closure of the identity coset under the given permutations.
  Bits identity_orbit(const std::vector<Permutation>& gens) const;

private:
  PermGroup sub_;
  CosetSide side_;
  std::vector<Permutation> reps_;
  std::map<std::vector<Point>, std::size_t> index_;
  std::vector<std::uint32_t> parent_, via_;
};

struct ElementRef {
  int type = 0;
  std::size_t coset = 0;
  auto operator<=>(const ElementRef&) const = default;
};

// A set of pairwise incident elements, at most one per type, kept sorted by type.
using Flag = std::vector<ElementRef>;

nlohmann::json flag_to_json(const Flag& flag);

// Incidence system on the right cosets of a family of subgroups: G_i x and
// G_j y are incident iff the cosets meet as subsets of the group, equivalently
// x y^{-1} lies in G_i G_j. Incidence rows are materialized lazily per type
// pair and shared behind an internal lock.
class CosetGeometry {
public:
  CosetGeometry(PermGroup group, std::vector<PermGroup> subgroups,
                std::size_t total_coset_limit = 1'000'000);
  CosetGeometry(CosetGeometry&&) noexcept;
  CosetGeometry& operator=(CosetGeometry&&) noexcept;
  ~CosetGeometry();

  int rank() const { return static_cast<int>(spaces_.size()); }
  const PermGroup& group() const { return group_; }
  const CosetSpace& space(int type) const { return spaces_[static_cast<std::size_t>(type)]; }
  std::vector<std::size_t> element_counts() const;

  bool incident(ElementRef a, ElementRef b) const;
  // All elements of `other_type` incident to `a`.
  const Bits& row(ElementRef a, int other_type) const;
  // Elements of type i incident to the identity coset of type j.
  const Bits& base_orbit(int i, int j) const;

  // Trivial-coset flag on the given types, the seed every transitivity and
  // residue argument starts from.
  Flag base_flag(const std::vector<int>& types) const;

  std::string to_dot() const;  // rank <= 4 only

private:
  struct RowCache;

  PermGroup group_;
  std::vector<CosetSpace> spaces_;
  std::unique_ptr<RowCache> cache_;

  const std::vector<std::uint32_t>& action_table(int type, std::size_t gen_index) const;
};

struct GeometryResult {
  bool ok = false;
  std::optional<Flag> stuck_flag;  // maximal flag missing at least one type
};

struct ThinResult {
  bool thin = false;
  std::optional<Flag> flag;  // flag of corank one whose residue is not a pair
  std::size_t residue_size = 0;
};

struct RcResult {
  bool connected = false;
  std::optional<Flag> flag;  // flag whose residue has a disconnected incidence graph
};

struct FtDirectResult {
  bool chamber_transitive = false;
  bool rank2_flags_covered = false;  // every element and incident pair lies in some chamber
  std::uint64_t chambers = 0;
  std::uint64_t expected = 0;  // |G| / |intersection of the subgroups|
};

// Walks every flag exactly once (types considered in index order, each either
// skipped or filled with an element incident to everything chosen). At each
// complete assignment calls fn(flag, residue) where residue[t] holds the
// type-t extension candidates for every unfilled t. Aborts when fn returns
// false; throws GeometryError past leaf_limit flags.
void for_each_flag(const CosetGeometry& geo,
                   const std::function<bool(const Flag&, const std::vector<const Bits*>&)>& fn,
                   std::uint64_t leaf_limit = 5'000'000);

// Every flag extends to a chamber. Exhaustive over the flag lattice; meant
// for small systems or as a fallback when transitivity fails.
GeometryResult is_geometry(const CosetGeometry& geo, std::uint64_t leaf_limit = 5'000'000);

// Every corank-1 flag has exactly two extensions. Requires a geometry.
ThinResult is_thin(const CosetGeometry& geo);

// Same property checked through corank-2 flags: every rank-2 residue must be
// an ordinary polygon locally (each of its elements incident to exactly two
// of the opposite type). Agrees with is_thin on every geometry.
ThinResult is_thin_rank2(const CosetGeometry& geo);

// Residues of every flag with at least two missing types (including the empty
// flag) have connected incidence graphs. Requires a geometry.
RcResult is_residually_connected(const CosetGeometry& geo);

// Corank-1 residues of the trivial-coset chamber only. Sufficient for the
// whole geometry once flag-transitivity is established.
ThinResult thin_via_base_chamber(const CosetGeometry& geo);

// Residues of trivial-coset flags only, one per cotype set of size >= 2.
// Sufficient once flag-transitivity is established.
RcResult rc_via_standard_flags(const CosetGeometry& geo);

// Counts chambers by backtracking (types visited in ascending size order,
// candidate sets intersected as the flag grows) and compares against the
// orbit size |G| / |∩ G_i| of the trivial chamber. Also records whether every
// element and every incident pair was seen inside some chamber; together with
// chamber transitivity that settles geometry-hood at rank <= 3.
FtDirectResult is_flag_transitive_direct(const CosetGeometry& geo,
                                         std::uint64_t chamber_limit = 10'000'000);

// Reduction of flag-transitivity to rank-3 systems: with H the pivot
// subgroup, the system minus the pivot and the residue system over H are
// checked recursively, then every {G_i, G_j, H} must be a flag-transitive
// geometry. Exact at every rank; bottoms out in direct rank-3 checks.
bool is_flag_transitive_incremental(const PermGroup& g, const std::vector<PermGroup>& subgroups,
                                    int pivot = -1, std::uint64_t chamber_limit = 10'000'000);

// Coset-product identity over a type subset J with distinguished member
// alpha: the meet of the products G_j G_alpha must equal (meet of the G_j)
// G_alpha. Both sides are compared exactly as unions of left cosets of
// G_alpha. Equivalent to flag-transitivity of the subsystem on J.
bool bh91_condition(const PermGroup& g, const std::vector<PermGroup>& subgroups,
                    const std::vector<int>& J, int alpha,
                    std::size_t coset_limit = 1'000'000);

// Whether the cosets sub1*rep1 and sub2*rep2 share an element.
bool cosets_intersect(const Permutation& rep1, const PermGroup& sub1,
                      const Permutation& rep2, const PermGroup& sub2,
                      std::size_t coset_limit = 1'000'000);

// Largest generator index whose support is a pendant edge: a transposition
// one of whose two points no other generator moves. Falls back to the last
// index. Used to seed the incremental transitivity recursion.
int default_pivot(const std::vector<Permutation>& gens);

struct HypertopeOptions {
  std::size_t coset_limit = 1'000'000;
  std::uint64_t chamber_limit = 10'000'000;
};

struct HypertopeReport {
  bool geometry = false;
  bool thin = false;
  bool residually_connected = false;
  bool flag_transitive = false;
  std::uint64_t chambers = 0;
  std::optional<Flag> geometry_witness;
  std::optional<Flag> thin_witness;
  std::size_t thin_residue_size = 0;
  std::optional<Flag> rc_witness;

  bool is_regular_hypertope() const {
    return geometry && thin && residually_connected && flag_transitive;
  }
  nlohmann::json to_json() const;
};

// Full pipeline over the subgroups that omit one generator each: transitivity
// first (incremental, then the small direct fallback), thinness and residual
// connectedness through the matching shortcut or exhaustively.
HypertopeReport certify_regular_hypertope(const std::vector<Permutation>& gens,
                                          const HypertopeOptions& opts = {});

}  // namespace ht::geom
