#include "cgroupcheck/cgroupcheck.hpp"

#include <algorithm>
#include <bit>

namespace ht::check {

using perm::PermGroup;
using perm::Permutation;

Candidate::Candidate(Point degree, std::vector<Permutation> gens)
    : degree_(degree), gens_(std::move(gens)), cache_(std::make_unique<Cache>()) {
  if (gens_.empty()) throw InvalidCandidateError("candidate needs at least one generator");
  if (gens_.size() > 20) throw InvalidCandidateError("candidate rank exceeds 20");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].degree() != degree_) throw InvalidCandidateError("generator degree mismatch");
    if (!gens_[i].is_involution())
      throw InvalidCandidateError("generator " + std::to_string(i) + " is not an involution");
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] == gens_[j])
        throw InvalidCandidateError("generators " + std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide");
  }
}

const SubgroupInfo& Candidate::subgroup(Mask mask) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->entries.find(mask);
  if (it != cache_->entries.end()) return *it->second;

  std::vector<Permutation> sub_gens;
  for (int i = 0; i < rank(); ++i)
    if (mask & (Mask{1} << i)) sub_gens.push_back(gens_[static_cast<std::size_t>(i)]);
  auto info = std::make_unique<SubgroupInfo>(
      SubgroupInfo{PermGroup(degree_, std::move(sub_gens)), false, {}});

  auto orbits = info->group.orbits();
  info->cell_of.assign(degree_, 0);
  std::uint64_t young_order = 1;
  bool overflow = false;
  for (std::uint32_t c = 0; c < orbits.size(); ++c) {
    for (Point p : orbits[c]) info->cell_of[p] = c;
    if (orbits[c].size() > 20 || young_order > UINT64_MAX / perm::factorial(orbits[c].size()))
      overflow = true;
    else
      young_order *= perm::factorial(orbits[c].size());
  }
  info->full_young = !overflow && info->group.order() == young_order;

  auto [pos, inserted] = cache_->entries.emplace(mask, std::move(info));
  return *pos->second;
}

std::vector<int> Candidate::indices(Mask mask) const {
  std::vector<int> result;
  for (int i = 0; i < rank(); ++i)
    if (mask & (Mask{1} << i)) result.push_back(i);
  return result;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["c_group"] = is_c_group;
  j["method"] = method;
  if (witness) {
    nlohmann::json w;
    w["j"] = witness->j;
    w["k"] = witness->k;
    w["element"] = witness->element.cycle_string();
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

namespace {

// Order of the intersection of two full Young subgroups: the Young subgroup
// on the common refinement of their orbit partitions.
std::uint64_t young_intersection_order(Point degree, const SubgroupInfo& a, const SubgroupInfo& b) {
  std::vector<std::uint32_t> seen_cells;
  std::vector<std::uint64_t> sizes;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> cell_index;
  for (Point p = 0; p < degree; ++p) {
    auto key = std::make_pair(a.cell_of[p], b.cell_of[p]);
    auto [it, inserted] = cell_index.emplace(key, sizes.size());
    if (inserted)
      sizes.push_back(1);
    else
      ++sizes[it->second];
  }
  std::uint64_t order = 1;
  for (std::uint64_t s : sizes) order *= perm::factorial(s);
  return order;
}

// Generators of the refined Young subgroup, used only to extract witnesses.
std::vector<Permutation> young_intersection_gens(Point degree, const SubgroupInfo& a,
                                                 const SubgroupInfo& b) {
  std::vector<Permutation> gens;
  for (Point p = 0; p < degree; ++p)
    for (Point q = p + 1; q < degree; ++q)
      if (a.cell_of[p] == a.cell_of[q] && b.cell_of[p] == b.cell_of[q]) {
        gens.push_back(Permutation::from_cycles(degree, {{p, q}}));
        break;
      }
  return gens;
}

struct PairOutcome {
  bool holds = true;
  Permutation element{0};
};

// Does <J> ∩ <K> equal <J ∩ K>? On failure returns a member of the
// intersection outside <J ∩ K>.
PairOutcome check_pair(const Candidate& c, Mask j_mask, Mask k_mask,
                       const perm::IntersectOptions& opts) {
  const SubgroupInfo& a = c.subgroup(j_mask);
  const SubgroupInfo& b = c.subgroup(k_mask);
  const SubgroupInfo& meet = c.subgroup(j_mask & k_mask);

  if (opts.strategy == perm::IntersectStrategy::Auto && a.full_young && b.full_young) {
    if (young_intersection_order(c.degree(), a, b) == meet.group.order()) return {};
    for (const auto& g : young_intersection_gens(c.degree(), a, b))
      if (!meet.group.contains(g)) return {false, g};
    throw std::logic_error("young order mismatch without witness generator");
  }

  PermGroup inter = perm::intersection(a.group, b.group, opts);
  if (inter.order() == meet.group.order()) return {};
  for (const auto& g : inter.generators())
    if (!meet.group.contains(g)) return {false, g};
  throw std::logic_error("intersection order mismatch without witness generator");
}

bool is_subset(Mask a, Mask b) { return (a & b) == a; }

// Full subset-pair sweep restricted to subsets of `scope`.
std::optional<Witness> full_sweep(const Candidate& c, Mask scope,
                                  const perm::IntersectOptions& opts) {
  std::vector<Mask> subsets;
  for (Mask m = 1; m <= scope; ++m)
    if (is_subset(m, scope)) subsets.push_back(m);
  for (std::size_t x = 0; x < subsets.size(); ++x)
    for (std::size_t y = x + 1; y < subsets.size(); ++y) {
      Mask j_mask = subsets[x], k_mask = subsets[y];
      if (is_subset(j_mask, k_mask) || is_subset(k_mask, j_mask)) continue;
      PairOutcome out = check_pair(c, j_mask, k_mask, opts);
      if (!out.holds) return Witness{c.indices(j_mask), c.indices(k_mask), out.element};
    }
  return std::nullopt;
}

}  // namespace

CheckReport check_full(const Candidate& candidate, const perm::IntersectOptions& opts) {
  if (candidate.rank() > 16)
    throw InvalidCandidateError("full check limited to rank 16");
  CheckReport report;
  report.method = "full";
  auto witness = full_sweep(candidate, candidate.full_mask(), opts);
  report.is_c_group = !witness.has_value();
  report.witness = std::move(witness);
  return report;
}

namespace {

std::optional<Witness> recursive_witness(const Candidate& c, Mask scope,
                                         std::map<Mask, std::optional<Witness>>& memo) {
  auto it = memo.find(scope);
  if (it != memo.end()) return it->second;

  std::optional<Witness> result;
  int rank = std::popcount(scope);
  if (rank <= 2) {
    // A single involution or a pair of distinct involutions always has the
    // intersection property.
    result = std::nullopt;
  } else if (rank <= 4) {
    result = full_sweep(c, scope, {});
  } else {
    auto members = c.indices(scope);
    for (int i : members) {
      result = recursive_witness(c, scope & ~(Mask{1} << i), memo);
      if (result) break;
    }
    if (!result) {
      for (std::size_t x = 0; x < members.size() && !result; ++x)
        for (std::size_t y = x + 1; y < members.size() && !result; ++y) {
          Mask j_mask = scope & ~(Mask{1} << members[x]);
          Mask k_mask = scope & ~(Mask{1} << members[y]);
          PairOutcome out = check_pair(c, j_mask, k_mask, {});
          if (!out.holds)
            result = Witness{c.indices(j_mask), c.indices(k_mask), out.element};
        }
    }
  }
  memo.emplace(scope, result);
  return result;
}

}  // namespace

CheckReport check_recursive(const Candidate& candidate) {
  CheckReport report;
  report.method = "recursive";
  std::map<Mask, std::optional<Witness>> memo;
  auto witness = recursive_witness(candidate, candidate.full_mask(), memo);
  report.is_c_group = !witness.has_value();
  report.witness = std::move(witness);
  return report;
}

}  // namespace ht::check
